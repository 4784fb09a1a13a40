#pragma once

#include <cstdint>
#include <optional>

namespace fpg {

/// Holomorphic invariants of a surface; chi = 1 - q + p_g.
struct SurfaceNumerics {
  std::int64_t p_g = 0;
  std::int64_t q = 0;
  std::int64_t chi = 1;
  std::int64_t K2 = 0;

  friend bool operator==(const SurfaceNumerics&, const SurfaceNumerics&) = default;
};

/// Product Y = X x C of a degree-36 surface with a genus-g curve.
/// p_gY = 3g and K3 = degPhi * degW.
struct ThreefoldNumerics {
  std::int64_t g = 0;
  std::int64_t p_gY = 0;
  std::int64_t K3 = 0;
  std::int64_t degW = 0;
  std::int64_t degPhi = 0;

  friend bool operator==(const ThreefoldNumerics&, const ThreefoldNumerics&) = default;
};

/// K^2 of a fake projective plane.
inline constexpr std::int64_t kFakePlaneK2 = 9;

/// floor(9 (1 + p_g) / (p_g - 2)), the upper bound on the canonical degree
/// of a surface with generically finite canonical map. Requires p_g >= 3.
std::int64_t beauville_bound(std::int64_t p_g);

/// Invariants of an etale cover of the given degree: chi and K^2 multiply by
/// the degree and p_g = chi - 1 + q_M. Without K2_X the base is a ball
/// quotient with K^2 = 9 chi (K^2 = 9 for a fake projective plane).
SurfaceNumerics etale_cover_numerics(std::int64_t chi_X, std::int64_t degree, std::int64_t q_M,
                                     std::optional<std::int64_t> K2_X = std::nullopt);

/// p_g = 3g, K^3 = 3 * 36 * (2g - 2) = 216(g - 1), deg W = 3(g - 1),
/// deg Phi = K^3 / deg W = 72.
///
/// K^3 is sometimes quoted as 72(g - 1) for this product; that value is off by
/// a factor of 3 and would make deg Phi * deg W != K^3.
ThreefoldNumerics product_threefold(std::int64_t g);

}  // namespace fpg
