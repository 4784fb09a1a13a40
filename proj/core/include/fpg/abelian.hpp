#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/int_matrix.hpp"
#include "fpg/presentation.hpp"

namespace fpg {

/// D = U * A * V with D diagonal, d_i >= 0, d_i | d_{i+1}; U and V unimodular.
struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  /// Diagonal entries d_0..d_{min(rows,cols)-1}.
  std::vector<BigInt> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Finitely generated abelian group (+)Z/d_i (+) Z^free_rank in invariant-factor form.
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  /// Requires every d_i >= 2 and d_i | d_{i+1}.
  AbelianInvariants(std::vector<BigInt> torsion, std::size_t free_rank);

  /// Normalize an arbitrary list of cyclic orders (order 0 means Z, 1 is dropped).
  static AbelianInvariants from_cyclic_factors(const std::vector<BigInt>& orders,
                                               std::size_t extra_free_rank = 0);
  /// Parse "C2^2 x C13", "Z^3", "C4 x Z", "1". Factors need not be in invariant form.
  static AbelianInvariants parse(const std::string& text);

  const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  bool is_trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
  /// Group order, or 0 when infinite.
  BigInt order() const;

  /// Primary decomposition, smallest factor first: "C2^2 x C3 x C4 x Z".
  std::string to_string() const;
  /// Invariant factors d1 | d2 | ...: "C2 x C12 x Z".
  std::string invariant_factor_string() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

 private:
  std::vector<BigInt> torsion_;
  std::size_t free_rank_ = 0;
};

/// Coker of the relator exponent-sum matrix (rows = relators, cols = generators).
AbelianInvariants abelianization(const Presentation& p);

IntMatrix exponent_sum_matrix(const Presentation& p);

enum class QuotientType { C4, V4 };

const char* to_string(QuotientType t) noexcept;

/// One subgroup K <= G with |G/K| = 4.
struct QuotientDescriptor {
  /// Hermite-form rows generating the preimage of K in Z^m, coordinates in
  /// the invariant-factor basis of G (torsion factors first, then free).
  IntMatrix kernel_basis;
  QuotientType quotient_type;

  friend bool operator==(const QuotientDescriptor&, const QuotientDescriptor&) = default;
};

/// Number of subgroups of index 4, by counting surjections onto C4 and V4.
std::size_t count_order4_quotients(const AbelianInvariants& g);

/// All subgroups of index 4, ordered lexicographically by kernel_basis.
std::vector<QuotientDescriptor> enumerate_order4_quotients(const AbelianInvariants& g);

}  // namespace fpg
