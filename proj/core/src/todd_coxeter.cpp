// Felsch-style coset enumeration.
//
// Columns are numbered 2(g-1) for generator g and 2(g-1)+1 for its inverse,
// so the inverse of column x is x ^ 1. Coincidences are merged through a
// union-find forest whose representative is always the smaller coset number;
// every table entry created while merging is pushed as a deduction.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "fpg/coset.hpp"
#include "fpg/errors.hpp"

namespace fpg {

namespace {

int column_of(Letter x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }

std::vector<int> columns_of(const Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(column_of(x));
  return out;
}

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationOptions& options)
      : ncols_(static_cast<int>(2 * p.generator_count())), max_cosets_(options.max_cosets),
        cycles_(static_cast<std::size_t>(ncols_)), column_order_(static_cast<std::size_t>(ncols_)) {
    for (const Word& r : p.relators()) {
      for (const Word& w : {r, invert(r)}) {
        const std::vector<int> cols = columns_of(w);
        for (std::size_t s = 0; s < cols.size(); ++s) {
          std::vector<int> rotated(cols.begin() + static_cast<std::ptrdiff_t>(s), cols.end());
          rotated.insert(rotated.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(s));
          cycles_[static_cast<std::size_t>(rotated.front())].push_back(std::move(rotated));
        }
      }
    }
    relator_columns_.reserve(p.relators().size());
    for (const Word& r : p.relators()) relator_columns_.push_back(columns_of(r));
    std::iota(column_order_.begin(), column_order_.end(), 0);
    if (options.shuffle_seed) {
      std::mt19937_64 rng(*options.shuffle_seed);
      for (auto& list : cycles_) std::shuffle(list.begin(), list.end(), rng);
      std::shuffle(column_order_.begin(), column_order_.end(), rng);
    }
  }

  CosetTable run(const std::vector<std::vector<int>>& subgroup) {
    new_coset();
    for (const auto& h : subgroup) {
      scan_and_fill(0, h);
      process_deductions();
    }
    while (true) {
      fill();
      if (!verify(subgroup)) break;
    }
    return extract();
  }

 private:
  int& entry(int coset, int col) {
    return table_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(ncols_) + static_cast<std::size_t>(col)];
  }
  bool alive(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  int coset_count() const { return static_cast<int>(parent_.size()); }

  int new_coset() {
    if (live_ >= max_cosets_) {
      throw BudgetExceeded("coset enumeration needs more than " + std::to_string(max_cosets_) + " cosets");
    }
    const int c = coset_count();
    table_.insert(table_.end(), static_cast<std::size_t>(ncols_), -1);
    parent_.push_back(c);
    ++live_;
    return c;
  }

  void define(int coset, int col) {
    const int d = new_coset();
    entry(coset, col) = d;
    entry(d, col ^ 1) = coset;
    deductions_.emplace_back(coset, col);
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    const int ra = rep(a);
    const int rb = rep(b);
    if (ra == rb) return;
    const int lo = std::min(ra, rb);
    const int hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int dead = queue[i];
      for (int x = 0; x < ncols_; ++x) {
        const int d = entry(dead, x);
        if (d < 0) continue;
        entry(d, x ^ 1) = -1;
        const int mu = rep(dead);
        const int nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) >= 0) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, x ^ 1) = mu;
          deductions_.emplace_back(mu, x);
        }
      }
    }
    ++coincidences_;
  }

  // Trace w around `start` from both ends; close a single gap by deduction.
  // With fill, larger gaps are closed by defining new cosets.
  void scan(int start, const std::vector<int>& w, bool fill) {
    int f = start;
    int b = start;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != start) coincidence(f, start);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = entry(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        const int x = w[static_cast<std::size_t>(i)];
        entry(f, x) = b;
        entry(b, x ^ 1) = f;
        deductions_.emplace_back(f, x);
        return;
      }
      if (!fill) return;
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  void scan_and_fill(int start, const std::vector<int>& w) { scan(start, w, true); }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(a)) continue;
      for (const auto& w : cycles_[static_cast<std::size_t>(x)]) {
        scan(a, w, false);
        if (!alive(a)) break;
      }
      if (!alive(a)) continue;
      const int b = entry(a, x);
      if (b < 0 || !alive(b)) continue;
      for (const auto& w : cycles_[static_cast<std::size_t>(x ^ 1)]) {
        scan(b, w, false);
        if (!alive(b)) break;
      }
    }
  }

  // Define every missing entry in coset order.
  void fill() {
    for (int a = 0; a < coset_count(); ++a) {
      if (!alive(a)) continue;
      if (coset_count() - live_ > live_ && coset_count() > 1024) a = compact(a);
      for (int x : column_order_) {
        if (!alive(a)) break;
        if (entry(a, x) < 0) {
          define(a, x);
          process_deductions();
        }
      }
    }
  }

  // Re-trace every relator at every coset and the subgroup generators at the
  // base; returns true when that changed the table.
  bool verify(const std::vector<std::vector<int>>& subgroup) {
    const std::size_t before = coincidences_;
    const int count_before = coset_count();
    for (const auto& h : subgroup) {
      scan_and_fill(0, h);
      process_deductions();
    }
    for (int c = 0; c < coset_count(); ++c) {
      for (const auto& w : relator_columns_) {
        if (!alive(c)) break;
        scan_and_fill(c, w);
        process_deductions();
      }
    }
    if (coincidences_ != before || coset_count() != count_before) return true;
    for (int c = 0; c < coset_count(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x)
        if (entry(c, x) < 0) return true;
    }
    return false;
  }

  // Renumber live cosets densely; returns the new number of `keep`.
  int compact(int keep) {
    std::vector<int> new_of(static_cast<std::size_t>(coset_count()), -1);
    int n = 0;
    for (int c = 0; c < coset_count(); ++c)
      if (alive(c)) new_of[static_cast<std::size_t>(c)] = n++;
    std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(ncols_), -1);
    for (int c = 0; c < coset_count(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < ncols_; ++x) {
        const int d = entry(c, x);
        table[static_cast<std::size_t>(new_of[static_cast<std::size_t>(c)]) * static_cast<std::size_t>(ncols_) +
              static_cast<std::size_t>(x)] = d < 0 ? -1 : new_of[static_cast<std::size_t>(rep(d))];
      }
    }
    table_ = std::move(table);
    parent_.resize(static_cast<std::size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    return new_of[static_cast<std::size_t>(keep)];
  }

  CosetTable extract() {
    std::vector<int> new_of(static_cast<std::size_t>(coset_count()), -1);
    int n = 0;
    for (int c = 0; c < coset_count(); ++c)
      if (alive(c)) new_of[static_cast<std::size_t>(c)] = n++;
    std::vector<std::vector<int>> action(static_cast<std::size_t>(ncols_ / 2),
                                         std::vector<int>(static_cast<std::size_t>(n)));
    for (int c = 0; c < coset_count(); ++c) {
      if (!alive(c)) continue;
      for (int g = 0; g < ncols_ / 2; ++g) {
        const int d = entry(c, 2 * g);
        if (d < 0 || !alive(d)) throw std::logic_error("coset enumeration left an open entry");
        action[static_cast<std::size_t>(g)][static_cast<std::size_t>(new_of[static_cast<std::size_t>(c)])] =
            new_of[static_cast<std::size_t>(d)];
      }
    }
    return standardize(CosetTable(std::move(action)), 0);
  }

  int ncols_;
  std::size_t max_cosets_;
  std::size_t live_ = 0;
  std::size_t coincidences_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> deductions_;
  std::vector<std::vector<std::vector<int>>> cycles_;
  std::vector<std::vector<int>> relator_columns_;
  std::vector<int> column_order_;
};

}  // namespace

CosetTable coset_enumerate(const Presentation& p, const SubgroupSpec& h, const EnumerationOptions& options) {
  if (options.max_cosets < 1) throw std::invalid_argument("max_cosets must be at least 1");
  std::vector<std::vector<int>> subgroup;
  for (const Word& w : h.generators) {
    const Word reduced = free_reduce(w);
    if (reduced.max_generator() > static_cast<int>(p.generator_count()) ||
        std::any_of(reduced.begin(), reduced.end(), [](Letter x) { return x == 0; })) {
      throw std::invalid_argument("subgroup generator uses a letter outside the presentation");
    }
    if (!reduced.empty()) subgroup.push_back(columns_of(reduced));
  }
  return Enumerator(p, options).run(subgroup);
}

}  // namespace fpg
