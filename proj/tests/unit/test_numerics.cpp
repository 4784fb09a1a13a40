#include <stdexcept>

#include "doctest.h"
#include "fpg/numerics.hpp"

using namespace fpg;

namespace {

// floor(9(1+p)/(p-2)) by repeated subtraction.
std::int64_t slow_bound(std::int64_t p) {
  std::int64_t num = 9 * (1 + p), q = 0;
  while (num >= p - 2) {
    num -= p - 2;
    ++q;
  }
  return q;
}

}  // namespace

TEST_CASE("degree bound examples") {
  CHECK(beauville_bound(3) == 36);
  CHECK(beauville_bound(4) == 22);
  CHECK(beauville_bound(12) == 11);
  CHECK(beauville_bound(29) == 10);
  CHECK(beauville_bound(30) == 9);
}

TEST_CASE("degree bound is nonincreasing and matches the closed form") {
  for (std::int64_t p = 3; p <= 500; ++p) {
    CHECK(beauville_bound(p) == slow_bound(p));
    CHECK(beauville_bound(p + 1) <= beauville_bound(p));
    CHECK(beauville_bound(p) >= 9);
  }
}

TEST_CASE("degree bound rejects p_g <= 2") {
  for (std::int64_t p : {-1, 0, 1, 2}) CHECK_THROWS_AS(beauville_bound(p), std::invalid_argument);
}

TEST_CASE("etale cover numerics") {
  const auto s = etale_cover_numerics(1, 4, 0);
  CHECK(s == SurfaceNumerics{3, 0, 4, 36});
  const auto t = etale_cover_numerics(1, 2, 1);
  CHECK(t.chi == 2);
  CHECK(t.p_g == 2);
  CHECK(t.K2 == 18);
  CHECK(etale_cover_numerics(2, 3, 0, 10).K2 == 30);
  CHECK_THROWS_AS(etale_cover_numerics(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(etale_cover_numerics(0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(etale_cover_numerics(1, 2, -1), std::invalid_argument);
}

TEST_CASE("etale cover numerics are multiplicative in the degree") {
  for (std::int64_t d = 1; d <= 40; ++d) {
    for (std::int64_t e = 1; e <= 5; ++e) {
      const auto once = etale_cover_numerics(1, d * e, 0);
      const auto inner = etale_cover_numerics(1, d, 0);
      const auto twice = etale_cover_numerics(inner.chi, e, 0, inner.K2);
      CHECK(once.chi == twice.chi);
      CHECK(once.K2 == twice.K2);
      CHECK(once.K2 == 9 * once.chi);
      CHECK(once.p_g == once.chi - 1);
    }
  }
}

TEST_CASE("product threefold numerics") {
  CHECK(product_threefold(2) == ThreefoldNumerics{2, 6, 216, 3, 72});
  CHECK(product_threefold(3) == ThreefoldNumerics{3, 9, 432, 6, 72});
  for (std::int64_t g = 2; g <= 100; ++g) {
    const auto t = product_threefold(g);
    CHECK(t.K3 == 216 * (g - 1));
    CHECK(t.degW == 3 * (g - 1));
    CHECK(t.degPhi == 72);
    CHECK(t.degW * t.degPhi == t.K3);
  }
  CHECK_THROWS_AS(product_threefold(1), std::invalid_argument);
}
