// Low-index subgroup search over partial coset tables.
//
// The search always fills the first undefined cell in row-major order, so new
// cosets are numbered in order of first appearance and every complete table
// reached is standardized. A partial table is pruned when re-rooting it at
// another coset gives a lexicographically smaller prefix; what survives is
// the least member of each conjugacy class.

#include "fpg/low_index.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "fpg/errors.hpp"

namespace fpg {

namespace {

int column_of(Letter x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

class Search {
 public:
  Search(const Presentation& p, std::size_t max_index, SubgroupMode mode, const LowIndexOptions& options)
      : ncols_(2 * static_cast<int>(p.generator_count())), max_index_(static_cast<int>(max_index)), mode_(mode),
        max_nodes_(options.max_nodes), cycles_(static_cast<std::size_t>(ncols_)),
        table_(max_index * static_cast<std::size_t>(ncols_), -1) {
    for (const Word& r : p.relators()) {
      for (const Word& w : {r, invert(r)}) {
        std::vector<int> cols;
        for (Letter x : w) cols.push_back(column_of(x));
        for (std::size_t s = 0; s < cols.size(); ++s) {
          std::vector<int> rotated(cols.begin() + static_cast<std::ptrdiff_t>(s), cols.end());
          rotated.insert(rotated.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(s));
          auto& list = cycles_[static_cast<std::size_t>(rotated.front())];
          if (std::find(list.begin(), list.end(), rotated) == list.end()) list.push_back(std::move(rotated));
        }
      }
    }
  }

  std::vector<CosetTable> run() {
    cosets_ = 1;
    extend(0);
    return std::move(found_);
  }

 private:
  int& cell(int coset, int col) {
    return table_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)];
  }

  void set(int coset, int col, int value) {
    cell(coset, col) = value;
    trail_.push_back(coset * ncols_ + col);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[static_cast<std::size_t>(trail_.back())] = -1;
      trail_.pop_back();
    }
  }

  // `from` is a flat cell position before which every cell is defined.
  void extend(int from) {
    const int total = cosets_ * ncols_;
    int pos = from;
    while (pos < total && table_[static_cast<std::size_t>(pos)] >= 0) ++pos;
    if (pos == total) {
      emit();
      return;
    }
    const int alpha = pos / ncols_;
    const int x = pos % ncols_;
    for (int beta = 0; beta < cosets_; ++beta) {
      if (cell(beta, x ^ 1) >= 0) continue;
      attempt(alpha, x, beta, pos);
    }
    if (cosets_ < max_index_) {
      ++cosets_;
      attempt(alpha, x, cosets_ - 1, pos);
      --cosets_;
    }
  }

  void attempt(int alpha, int x, int beta, int pos) {
    if (++nodes_ > max_nodes_) {
      throw BudgetExceeded("low-index search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    const std::size_t mark = trail_.size();
    set(alpha, x, beta);
    set(beta, x ^ 1, alpha);
    pending_.clear();
    pending_.emplace_back(alpha, x);
    if (deduce() && acceptable()) extend(pos + 1);
    undo(mark);
  }

  bool deduce() {
    while (!pending_.empty()) {
      const auto [a, x] = pending_.back();
      pending_.pop_back();
      for (const auto& w : cycles_[static_cast<std::size_t>(x)])
        if (!scan(a, w)) return false;
      const int b = cell(a, x);
      for (const auto& w : cycles_[static_cast<std::size_t>(x ^ 1)])
        if (!scan(b, w)) return false;
    }
    return true;
  }

  // Trace w around `start`; false on a contradiction, a deduction when
  // exactly one cell is missing.
  bool scan(int start, const std::vector<int>& w) {
    int f = start;
    int b = start;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (i <= j && cell(f, w[static_cast<std::size_t>(i)]) >= 0) f = cell(f, w[static_cast<std::size_t>(i++)]);
    if (i > j) return f == start;
    while (j >= i && cell(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = cell(b, w[static_cast<std::size_t>(j--)] ^ 1);
    if (j < i) return f == b;
    if (j == i) {
      const int x = w[static_cast<std::size_t>(i)];
      set(f, x, b);
      set(b, x ^ 1, f);
      pending_.emplace_back(f, x);
    }
    return true;
  }

  // Compare the table re-rooted at each other coset against the table itself,
  // as far as both are defined. A smaller re-rooting means this is not the
  // class minimum; in normal mode any provable difference rules it out.
  bool acceptable() {
    std::vector<int> new_of(static_cast<std::size_t>(cosets_));
    std::vector<int> old_of(static_cast<std::size_t>(cosets_));
    for (int c = 1; c < cosets_; ++c) {
      std::fill(new_of.begin(), new_of.end(), -1);
      new_of[static_cast<std::size_t>(c)] = 0;
      old_of[0] = c;
      int next = 1;
      int verdict = 0;
      for (int i = 0; i < cosets_ && i < next && verdict == 0; ++i) {
        const int old = old_of[static_cast<std::size_t>(i)];
        for (int x = 0; x < ncols_; ++x) {
          const int e = cell(old, x);
          const int t = cell(i, x);
          if (e < 0 || t < 0) {
            verdict = 2;
            break;
          }
          if (new_of[static_cast<std::size_t>(e)] < 0) {
            new_of[static_cast<std::size_t>(e)] = next;
            old_of[static_cast<std::size_t>(next)] = e;
            ++next;
          }
          const int v = new_of[static_cast<std::size_t>(e)];
          if (v != t) {
            verdict = v < t ? -1 : 1;
            break;
          }
        }
      }
      if (verdict == -1) return false;
      if (verdict == 1 && mode_ == SubgroupMode::NormalOnly) return false;
    }
    return true;
  }

  void emit() {
    std::vector<std::vector<int>> action(static_cast<std::size_t>(ncols_ / 2),
                                         std::vector<int>(static_cast<std::size_t>(cosets_)));
    for (int c = 0; c < cosets_; ++c)
      for (int g = 0; g < ncols_ / 2; ++g)
        action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = cell(c, 2 * g);
    CosetTable t(std::move(action));
    if (mode_ == SubgroupMode::NormalOnly && !is_normal(t)) return;
    found_.push_back(std::move(t));
  }

  int ncols_;
  int max_index_;
  SubgroupMode mode_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  int cosets_ = 0;
  std::vector<std::vector<std::vector<int>>> cycles_;
  std::vector<int> table_;
  std::vector<int> trail_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<CosetTable> found_;
};

}  // namespace

std::vector<ConjugacyClass> low_index_classes(const Presentation& p, std::size_t max_index, SubgroupMode mode,
                                              const LowIndexOptions& options) {
  if (max_index < 1) throw std::invalid_argument("maximum index must be at least 1");
  std::vector<CosetTable> reps = Search(p, max_index, mode, options).run();
  std::sort(reps.begin(), reps.end());
  std::vector<ConjugacyClass> out;
  out.reserve(reps.size());
  for (auto& t : reps) {
    const std::size_t size = t.index() / normalizer_index(t);
    out.push_back({std::move(t), size});
  }
  return out;
}

std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index, SubgroupMode mode,
                                            const LowIndexOptions& options) {
  std::vector<CosetTable> out;
  for (const auto& cls : low_index_classes(p, max_index, mode, options)) {
    if (cls.size == 1) {
      out.push_back(cls.representative);
    } else {
      auto members = conjugates(cls.representative);
      out.insert(out.end(), members.begin(), members.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CosetTable> conjugates(const CosetTable& t) {
  std::set<CosetTable> seen;
  for (std::size_t c = 0; c < t.index(); ++c) seen.insert(standardize(t, static_cast<int>(c)));
  return {seen.begin(), seen.end()};
}

CosetTable class_representative(const CosetTable& t) { return conjugates(t).front(); }

std::vector<ConjugacyClass> conjugacy_classes(const std::vector<CosetTable>& subgroups) {
  std::map<CosetTable, std::size_t> sizes;
  for (const auto& t : subgroups) ++sizes[class_representative(t)];
  std::vector<ConjugacyClass> out;
  out.reserve(sizes.size());
  for (auto& [rep, size] : sizes) out.push_back({rep, size});
  return out;
}

}  // namespace fpg
