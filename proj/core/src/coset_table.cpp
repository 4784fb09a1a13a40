#include "fpg/coset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace fpg {

CosetTable::CosetTable(std::vector<std::vector<int>> action) : action_(std::move(action)) {
  index_ = action_.empty() ? 1 : action_.front().size();
  if (index_ == 0) throw std::invalid_argument("coset table must have at least one coset");
  inverse_.assign(action_.size(), std::vector<int>(index_, -1));
  for (std::size_t g = 0; g < action_.size(); ++g) {
    if (action_[g].size() != index_) throw std::invalid_argument("coset table rows differ in length");
    for (std::size_t c = 0; c < index_; ++c) {
      const int d = action_[g][c];
      if (d < 0 || static_cast<std::size_t>(d) >= index_) throw std::invalid_argument("coset image out of range");
      if (inverse_[g][static_cast<std::size_t>(d)] != -1) {
        throw std::invalid_argument("generator action is not a bijection");
      }
      inverse_[g][static_cast<std::size_t>(d)] = static_cast<int>(c);
    }
  }
}

int CosetTable::act(int coset, const Word& w) const {
  for (Letter x : w) coset = act(coset, x);
  return coset;
}

bool CosetTable::is_transitive() const {
  std::vector<char> seen(index_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < action_.size(); ++g) {
      for (int d : {action_[g][static_cast<std::size_t>(c)], inverse_[g][static_cast<std::size_t>(c)]}) {
        if (!seen[static_cast<std::size_t>(d)]) {
          seen[static_cast<std::size_t>(d)] = 1;
          ++count;
          stack.push_back(d);
        }
      }
    }
  }
  return count == index_;
}

std::vector<int> CosetTable::flattened() const {
  std::vector<int> out;
  out.reserve(index_ * action_.size() * 2);
  for (std::size_t c = 0; c < index_; ++c)
    for (std::size_t g = 0; g < action_.size(); ++g) {
      out.push_back(action_[g][c]);
      out.push_back(inverse_[g][c]);
    }
  return out;
}

bool operator<(const CosetTable& a, const CosetTable& b) {
  if (a.index_ != b.index_) return a.index_ < b.index_;
  return a.flattened() < b.flattened();
}

CosetTable standardize(const CosetTable& t, int base) {
  const std::size_t n = t.index();
  std::vector<int> new_of(n, -1);
  std::vector<int> old_of;
  old_of.reserve(n);
  new_of[static_cast<std::size_t>(base)] = 0;
  old_of.push_back(base);
  for (std::size_t i = 0; i < old_of.size(); ++i) {
    for (std::size_t g = 0; g < t.generator_count(); ++g) {
      const int gen = static_cast<int>(g) + 1;
      for (Letter x : {gen, -gen}) {
        const int d = t.act(old_of[i], x);
        if (new_of[static_cast<std::size_t>(d)] == -1) {
          new_of[static_cast<std::size_t>(d)] = static_cast<int>(old_of.size());
          old_of.push_back(d);
        }
      }
    }
  }
  if (old_of.size() != n) throw std::invalid_argument("cannot standardize an intransitive table");
  std::vector<std::vector<int>> action(t.generator_count(), std::vector<int>(n));
  for (std::size_t g = 0; g < t.generator_count(); ++g)
    for (std::size_t c = 0; c < n; ++c) {
      action[g][c] = new_of[static_cast<std::size_t>(t.action()[g][static_cast<std::size_t>(old_of[c])])];
    }
  return CosetTable(std::move(action));
}

Permutation permutation_image(const CosetTable& t, const Word& w) {
  Permutation p(t.index());
  for (std::size_t c = 0; c < t.index(); ++c) p[c] = t.act(static_cast<int>(c), w);
  return p;
}

std::optional<std::string> validate(const CosetTable& t, const Presentation& p) {
  if (t.generator_count() != p.generator_count()) return "generator count mismatch";
  if (!t.is_transitive()) return "action is not transitive";
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const Word& rel = p.relators()[r];
    for (std::size_t c = 0; c < t.index(); ++c) {
      if (t.act(static_cast<int>(c), rel) != static_cast<int>(c)) {
        return "relator " + std::to_string(r + 1) + " moves coset " + std::to_string(c);
      }
    }
  }
  return std::nullopt;
}

bool is_normal(const CosetTable& t, const SubgroupSpec& h, const Presentation& p) {
  if (t.generator_count() != p.generator_count()) throw std::invalid_argument("table does not match presentation");
  return normalizer_index(t, h) == t.index();
}

bool is_normal(const CosetTable& t) { return normalizer_index(t) == t.index(); }

std::size_t normalizer_index(const CosetTable& t, const SubgroupSpec& h) {
  std::size_t fixed = 0;
  for (std::size_t c = 0; c < t.index(); ++c) {
    const int coset = static_cast<int>(c);
    if (std::all_of(h.generators.begin(), h.generators.end(),
                    [&](const Word& w) { return t.act(coset, w) == coset; })) {
      ++fixed;
    }
  }
  return fixed;
}

std::size_t normalizer_index(const CosetTable& t) {
  // stab(c) = stab(0) iff some automorphism of the action maps 0 to c, iff
  // the table re-rooted at c standardizes to the same table.
  const CosetTable root = standardize(t, 0);
  std::size_t count = 0;
  for (std::size_t c = 0; c < t.index(); ++c) {
    if (standardize(t, static_cast<int>(c)) == root) ++count;
  }
  return count;
}

namespace {

std::size_t permutation_order(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::size_t order = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::size_t len = 0;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = 1;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

QuotientType quotient_type(const CosetTable& t) {
  if (t.index() != 4) throw std::invalid_argument("quotient type needs a table of index 4");
  if (!is_normal(t)) throw std::invalid_argument("quotient type needs a normal subgroup");
  for (const auto& perm : t.action()) {
    if (permutation_order(perm) == 4) return QuotientType::C4;
  }
  return QuotientType::V4;
}

std::string to_json(const CosetTable& t, const Presentation& p) {
  nlohmann::ordered_json j;
  j["index"] = t.index();
  nlohmann::ordered_json action = nlohmann::ordered_json::object();
  for (std::size_t g = 0; g < t.generator_count(); ++g) action[p.generator_names().at(g)] = t.action()[g];
  j["action"] = std::move(action);
  return j.dump();
}

CosetTable coset_table_from_json(const std::string& json, const Presentation& p) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed coset table JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("index") || !j.contains("action") || !j["action"].is_object()) {
    throw std::invalid_argument("coset table JSON needs \"index\" and \"action\"");
  }
  const auto n = j["index"].get<std::size_t>();
  std::vector<std::vector<int>> action;
  for (const auto& name : p.generator_names()) {
    if (!j["action"].contains(name)) throw std::invalid_argument("coset table lacks generator '" + name + "'");
    action.push_back(j["action"][name].get<std::vector<int>>());
    if (action.back().size() != n) throw std::invalid_argument("action of '" + name + "' has wrong length");
  }
  if (j["action"].size() != p.generator_count()) {
    throw std::invalid_argument("coset table names generators not in the presentation");
  }
  if (action.empty()) {
    if (n != 1) throw std::invalid_argument("a table without generators has index 1");
    return CosetTable(std::vector<std::vector<int>>{});
  }
  return CosetTable(std::move(action));
}

}  // namespace fpg
