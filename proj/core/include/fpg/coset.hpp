#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpg/abelian.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

using Permutation = std::vector<int>;

/// Right action of each generator on the cosets {0..n-1} of a subgroup.
/// Coset 0 is the subgroup itself.
class CosetTable {
 public:
  CosetTable() = default;
  /// action[g][c] = c * g. Throws std::invalid_argument unless every row
  /// is a permutation of {0..n-1} with a common n >= 1.
  explicit CosetTable(std::vector<std::vector<int>> action);

  std::size_t index() const noexcept { return index_; }
  std::size_t generator_count() const noexcept { return action_.size(); }
  const std::vector<std::vector<int>>& action() const noexcept { return action_; }

  int act(int coset, Letter x) const {
    return x > 0 ? action_[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(coset)]
                 : inverse_[static_cast<std::size_t>(-x - 1)][static_cast<std::size_t>(coset)];
  }
  int act(int coset, const Word& w) const;

  bool is_transitive() const;
  /// Row-major flattening: for each coset, images under g1, g1^-1, g2, ...
  std::vector<int> flattened() const;

  friend bool operator==(const CosetTable& a, const CosetTable& b) { return a.action_ == b.action_; }
  /// Lexicographic on the flattened table; smaller index first.
  friend bool operator<(const CosetTable& a, const CosetTable& b);

 private:
  std::size_t index_ = 1;
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> inverse_;
};

/// Subgroup given by generating words in the ambient presentation.
struct SubgroupSpec {
  std::vector<Word> generators;
};

struct EnumerationOptions {
  std::size_t max_cosets = 1'000'000;
  /// When set, relator scan order and the column order used for new
  /// definitions are shuffled; the closed table is the same for every seed.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Felsch-style Todd-Coxeter enumeration of the cosets of H in P.
/// The result is renumbered by standardize(). Throws BudgetExceeded when more
/// than max_cosets live cosets are needed, std::invalid_argument on words
/// outside the generator range.
CosetTable coset_enumerate(const Presentation& p, const SubgroupSpec& h,
                           const EnumerationOptions& options = {});

/// BFS renumbering from `base` using the column order g1, g1^-1, g2, ...
CosetTable standardize(const CosetTable& t, int base = 0);

/// Composite permutation of the generators' actions along w (left to right).
Permutation permutation_image(const CosetTable& t, const Word& w);

/// Empty when the table is a bijective, transitive action in which every
/// relator of P fixes every coset; otherwise a description of the failure.
std::optional<std::string> validate(const CosetTable& t, const Presentation& p);

/// True iff every generator of H fixes every coset.
bool is_normal(const CosetTable& t, const SubgroupSpec& h, const Presentation& p);
/// Normality read off the table alone: every point stabilizer coincides.
bool is_normal(const CosetTable& t);

/// |N(H) : H| = number of cosets fixed by every generator of H.
std::size_t normalizer_index(const CosetTable& t, const SubgroupSpec& h);
/// Same quantity from the table alone: cosets c whose re-rooted table equals the table.
std::size_t normalizer_index(const CosetTable& t);

/// C4 iff some generator acts with order 4. Throws std::invalid_argument
/// unless the table has index 4 and the subgroup is normal.
QuotientType quotient_type(const CosetTable& t);

/// {"index": n, "action": {name: [images...]}}
std::string to_json(const CosetTable& t, const Presentation& p);
CosetTable coset_table_from_json(const std::string& json, const Presentation& p);

}  // namespace fpg
