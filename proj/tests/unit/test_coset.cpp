#include <random>
#include <set>

#include "doctest.h"
#include "fpg/coset.hpp"
#include "fpg/errors.hpp"
#include "fpg_test.hpp"
#include "oracles.hpp"

using namespace fpg;
using fpg::test::pres;

namespace {

CosetTable enumerate(const Presentation& p, std::vector<Word> h = {}, EnumerationOptions opts = {}) {
  const CosetTable t = coset_enumerate(p, SubgroupSpec{std::move(h)}, opts);
  const auto problem = validate(t, p);
  CHECK_MESSAGE(!problem, (problem ? *problem : std::string()));
  return t;
}

}  // namespace

TEST_CASE("coset enumeration indices") {
  CHECK(enumerate(pres(fpg::test::kS3)).index() == 6);
  CHECK(enumerate(pres(fpg::test::kS3), {Word{1}}).index() == 3);
  CHECK(enumerate(pres("< a | a^5 >")).index() == 5);
  CHECK(enumerate(pres(fpg::test::kD4)).index() == 8);
  CHECK(enumerate(pres(fpg::test::kQ8)).index() == 8);
  CHECK(enumerate(pres(fpg::test::kKlein)).index() == 4);
  CHECK(enumerate(pres("< a, b | a^2, b^3, (a*b)^5 >")).index() == 60);
  CHECK(enumerate(pres("< a, b | a^2, b^3, (a*b)^7, [a,b]^4 >")).index() == 168);
  CHECK(enumerate(pres("< | >")).index() == 1);
  // Infinite group, finite-index subgroup.
  CHECK(enumerate(pres("< a | >"), {Word{1, 1, 1, 1}}).index() == 4);
  CHECK(enumerate(pres(fpg::test::kFree2), {Word{1}, Word{2, 2}, Word{2, 1, -2}}).index() == 2);
}

TEST_CASE("tables are standard: cosets appear in BFS order") {
  const CosetTable t = enumerate(pres(fpg::test::kD4));
  CHECK(standardize(t) == t);
  int next = 1;
  std::vector<bool> seen(t.index(), false);
  seen[0] = true;
  for (std::size_t c = 0; c < t.index(); ++c)
    for (std::size_t g = 0; g < t.generator_count(); ++g)
      for (Letter x : {static_cast<Letter>(g + 1), -static_cast<Letter>(g + 1)}) {
        const int d = t.act(static_cast<int>(c), x);
        if (!seen[static_cast<std::size_t>(d)]) {
          CHECK(d == next);
          seen[static_cast<std::size_t>(d)] = true;
          ++next;
        }
      }
}

TEST_CASE("permutation images satisfy relators") {
  const auto p = pres(fpg::test::kQ8);
  const CosetTable t = enumerate(p);
  for (const Word& r : p.relators()) CHECK(permutation_image(t, r) == oracle::identity(t.index()));
  const auto i = permutation_image(t, Word{1});
  CHECK(permutation_image(t, Word{1, 1, 1, 1}) == oracle::identity(8));
  CHECK(permutation_image(t, Word{1, 1}) != oracle::identity(8));
  CHECK(oracle::compose(i, permutation_image(t, Word{-1})) == oracle::identity(8));
}

TEST_CASE("normality and normalizers") {
  const auto s3 = pres(fpg::test::kS3);
  const CosetTable h = enumerate(s3, {Word{1}});
  CHECK_FALSE(is_normal(h, SubgroupSpec{{Word{1}}}, s3));
  CHECK_FALSE(is_normal(h));
  CHECK(normalizer_index(h, SubgroupSpec{{Word{1}}}) == 1);
  CHECK(normalizer_index(h) == 1);

  const CosetTable a3 = enumerate(s3, {Word{1, 2}});
  CHECK(a3.index() == 2);
  CHECK(is_normal(a3, SubgroupSpec{{Word{1, 2}}}, s3));
  CHECK(normalizer_index(a3) == 2);

  const auto d4 = pres(fpg::test::kD4);
  const CosetTable s = enumerate(d4, {Word{2}});
  CHECK(s.index() == 4);
  CHECK(normalizer_index(s) == 2);
  CHECK(normalizer_index(s, SubgroupSpec{{Word{2}}}) == 2);

  const CosetTable trivial = enumerate(d4);
  CHECK(is_normal(trivial));
  CHECK(normalizer_index(trivial) == 8);

  CHECK_THROWS_AS(is_normal(s, SubgroupSpec{{Word{2}}}, pres("< a | >")), std::invalid_argument);
}

TEST_CASE("index-4 quotient types") {
  CHECK(quotient_type(enumerate(pres(fpg::test::kKlein))) == QuotientType::V4);
  CHECK(quotient_type(enumerate(pres("< a | >"), {Word{1, 1, 1, 1}})) == QuotientType::C4);
  CHECK(quotient_type(enumerate(pres(fpg::test::kQ8), {Word{1, 1}})) == QuotientType::V4);
  CHECK(quotient_type(enumerate(pres(fpg::test::kD4), {Word{1, 1}})) == QuotientType::V4);
  // With no relators the generating set must already close the Schreier graph.
  CHECK(quotient_type(enumerate(pres(fpg::test::kFree2),
                                      {Word{1}, Word{2, 2, 2, 2}, Word{2, 1, -2}, Word{2, 2, 1, -2, -2},
                                       Word{2, 2, 2, 1, -2, -2, -2}})) ==
        QuotientType::C4);
  CHECK_THROWS_AS(quotient_type(enumerate(pres(fpg::test::kD4), {Word{2}})), std::invalid_argument);
  CHECK_THROWS_AS(quotient_type(enumerate(pres(fpg::test::kS3))), std::invalid_argument);
}

TEST_CASE("result is independent of the enumeration strategy") {
  const auto p = pres("< a, b | a^2, b^3, (a*b)^5 >");
  const CosetTable base = enumerate(p, {Word{2}});
  CHECK(base.index() == 20);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EnumerationOptions opts;
    opts.shuffle_seed = seed;
    CHECK(enumerate(p, {Word{2}}, opts) == base);
  }
}

TEST_CASE("random permutation groups against Cayley-graph presentations") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = oracle::random_small_group(rng, 6, 200);
    const auto elements = oracle::closure(gens);
    const auto p = pres(oracle::cayley_presentation(gens, rng));
    const CosetTable t = enumerate(p);
    CHECK(t.index() == elements.size());
    CHECK(t.is_transitive());
    // Cosets of <x1> number |G| / |<x1>|.
    const auto cyclic = oracle::closure({gens[0]});
    const CosetTable h = enumerate(p, {Word{1}});
    CHECK(h.index() == elements.size() / cyclic.size());
    // The regular representation is faithful: images of generators generate
    // a group of the same order.
    std::vector<oracle::Perm> images;
    for (std::size_t g = 1; g <= p.generator_count(); ++g)
      images.push_back(permutation_image(t, Word{static_cast<Letter>(g)}));
    CHECK(oracle::closure(images).size() == elements.size());
  }
}

TEST_CASE("budget and input errors") {
  EnumerationOptions tiny;
  tiny.max_cosets = 10;
  CHECK_THROWS_AS(coset_enumerate(pres("< a, b | a^2, b^3, (a*b)^5 >"), {}, tiny), BudgetExceeded);
  CHECK_THROWS_AS(coset_enumerate(pres(fpg::test::kFree2), {}, tiny), BudgetExceeded);
  CHECK_THROWS_AS(coset_enumerate(pres(fpg::test::kS3), SubgroupSpec{{Word{3}}}), std::invalid_argument);
  EnumerationOptions none;
  none.max_cosets = 0;
  CHECK_THROWS_AS(coset_enumerate(pres(fpg::test::kS3), {}, none), std::invalid_argument);
}

TEST_CASE("coset table construction checks bijectivity") {
  CHECK_THROWS_AS(CosetTable({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(CosetTable({{1, 0}, {0}}), std::invalid_argument);
  const CosetTable t({{1, 0}, {0, 1}});
  CHECK(t.index() == 2);
  CHECK(t.act(0, Word{1, 1}) == 0);
  CHECK(CosetTable().index() == 1);
}

TEST_CASE("json round trip") {
  const auto p = pres(fpg::test::kD4);
  const CosetTable t = enumerate(p, {Word{2}});
  const std::string json = to_json(t, p);
  CHECK(json.find("\"index\":4") != std::string::npos);
  CHECK(json.find("\"r\"") != std::string::npos);
  CHECK(coset_table_from_json(json, p) == t);
  CHECK(coset_table_from_json(R"({"index": 2, "action": {"r": [1, 0], "s": [0, 1]}})", p).index() == 2);
  CHECK_THROWS(coset_table_from_json(R"({"index": 2, "action": {"r": [1, 0]}})", p));
  CHECK_THROWS(coset_table_from_json(R"({"index": 3, "action": {"r": [1, 0], "s": [0, 1]}})", p));
  CHECK_THROWS(coset_table_from_json("not json", p));
}
