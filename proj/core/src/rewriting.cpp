#include "fpg/rewriting.hpp"

#include <stdexcept>
#include <string>

namespace fpg {

namespace {

// BFS spanning tree of the coset graph in the column order g1, g1^-1, g2, ...
struct SpanningTree {
  std::vector<Word> representative;    // coset -> transversal word
  std::vector<std::vector<int>> label;  // label[c][g]: Schreier generator of edge c --g-->, 0 on tree edges
};

SpanningTree spanning_tree(const CosetTable& t) {
  const std::size_t n = t.index();
  const std::size_t k = t.generator_count();
  SpanningTree tree{std::vector<Word>(n), std::vector<std::vector<int>>(n, std::vector<int>(k, -1))};
  std::vector<char> seen(n, 0);
  std::vector<int> order{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int c = order[i];
    for (std::size_t g = 0; g < k; ++g) {
      const int gen = static_cast<int>(g) + 1;
      for (Letter x : {gen, -gen}) {
        const int d = t.act(c, x);
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = 1;
        order.push_back(d);
        tree.representative[static_cast<std::size_t>(d)] =
            free_reduce(concat(tree.representative[static_cast<std::size_t>(c)], Word{x}));
        // The tree edge is c --g--> d, or d --g--> c when read backwards.
        const int from = x > 0 ? c : d;
        tree.label[static_cast<std::size_t>(from)][g] = 0;
      }
    }
  }
  if (order.size() != n) throw std::invalid_argument("coset table is not transitive");
  return tree;
}

}  // namespace

SchreierRewrite reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count()) throw std::invalid_argument("table does not match presentation");
  if (auto problem = validate(t, p)) throw std::invalid_argument("not a coset table of the group: " + *problem);
  SpanningTree tree = spanning_tree(t);
  const std::size_t n = t.index();
  const std::size_t k = t.generator_count();

  std::vector<std::string> names;
  std::vector<Word> words;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < k; ++g) {
      if (tree.label[c][g] == 0) continue;
      tree.label[c][g] = static_cast<int>(names.size()) + 1;
      names.push_back(p.generator_names()[g] + "_" + std::to_string(c));
      const int gen = static_cast<int>(g) + 1;
      const int d = t.act(static_cast<int>(c), gen);
      words.push_back(free_reduce(concat(concat(tree.representative[c], Word{gen}),
                                         invert(tree.representative[static_cast<std::size_t>(d)]))));
    }

  std::vector<Word> relators;
  relators.reserve(n * p.relators().size());
  for (std::size_t c = 0; c < n; ++c) {
    for (const Word& r : p.relators()) {
      std::vector<Letter> rewritten;
      int cur = static_cast<int>(c);
      for (Letter x : r) {
        if (x > 0) {
          const int s = tree.label[static_cast<std::size_t>(cur)][static_cast<std::size_t>(x - 1)];
          if (s != 0) rewritten.push_back(s);
          cur = t.act(cur, x);
        } else {
          const int prev = t.act(cur, x);
          const int s = tree.label[static_cast<std::size_t>(prev)][static_cast<std::size_t>(-x - 1)];
          if (s != 0) rewritten.push_back(-s);
          cur = prev;
        }
      }
      relators.emplace_back(std::move(rewritten));
    }
  }
  return {Presentation(std::move(names), std::move(relators)), std::move(words)};
}

Presentation schreier_presentation(const Presentation& p, const CosetTable& t) {
  return reidemeister_schreier(p, t).presentation;
}

SubgroupSpec schreier_generators(const Presentation& p, const CosetTable& t) {
  return {reidemeister_schreier(p, t).generator_words};
}

AbelianInvariants subgroup_abelianization(const Presentation& p, const CosetTable& t) {
  return abelianization(schreier_presentation(p, t));
}

}  // namespace fpg
