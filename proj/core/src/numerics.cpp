#include "fpg/numerics.hpp"

#include <stdexcept>
#include <string>

namespace fpg {

std::int64_t beauville_bound(std::int64_t p_g) {
  if (p_g < 3) throw std::invalid_argument("canonical degree bound needs p_g >= 3, got " + std::to_string(p_g));
  return 9 * (1 + p_g) / (p_g - 2);
}

SurfaceNumerics etale_cover_numerics(std::int64_t chi_X, std::int64_t degree, std::int64_t q_M,
                                     std::optional<std::int64_t> K2_X) {
  if (degree < 1) throw std::invalid_argument("cover degree must be >= 1");
  if (chi_X < 1) throw std::invalid_argument("chi of the base must be >= 1");
  if (q_M < 0) throw std::invalid_argument("irregularity must be >= 0");
  SurfaceNumerics s;
  s.chi = degree * chi_X;
  s.q = q_M;
  s.p_g = s.chi - 1 + q_M;
  s.K2 = degree * K2_X.value_or(kFakePlaneK2 * chi_X);
  return s;
}

ThreefoldNumerics product_threefold(std::int64_t g) {
  if (g < 2) throw std::invalid_argument("curve genus must be >= 2");
  ThreefoldNumerics t;
  t.g = g;
  t.p_gY = 3 * g;
  t.K3 = 3 * 36 * (2 * g - 2);
  t.degW = 3 * (g - 1);
  if (t.K3 % t.degW != 0) throw std::logic_error("canonical degree is not integral");
  t.degPhi = t.K3 / t.degW;
  return t;
}

}  // namespace fpg
