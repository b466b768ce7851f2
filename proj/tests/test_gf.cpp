#include <doctest.h>

#include "catwords/gf.hpp"
#include "catwords/oracle.hpp"
#include "catwords/registry.hpp"

using namespace catwords;

namespace {

std::vector<std::uint64_t> padded(const std::vector<int128>& row) {
  std::vector<std::uint64_t> out;
  for (int128 c : row) out.push_back(to_u64(c));
  if (out.empty()) out.push_back(0);
  return out;
}

}  // namespace

TEST_CASE("expansion basics") {
  for (const RationalBgf& gf : registered_gfs()) {
    SeriesTable t = expand(gf, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == std::vector<int128>{1});
  }
  CHECK(expand(imported_gf_012(), 0)[0] == std::vector<int128>{1});
}

TEST_CASE("expansion against known coefficients") {
  // {000,021}: x^5 coefficient of the y = 1 series is 12
  const RationalBgf& gf = registered_gf(parse_pattern("000"), parse_pattern("021"));
  auto sums = row_sums(expand(gf, 7));
  CHECK(sums[5] == 12);
  CHECK(sums == std::vector<int128>{1, 1, 2, 4, 8, 12, 20, 32});

  // {100,120}: descent refinement at n = 3 is (4, 1)
  const RationalBgf& gf2 = registered_gf(parse_pattern("100"), parse_pattern("120"));
  SeriesTable t = expand(gf2, 3);
  CHECK(t[3] == std::vector<int128>{4, 1});
}

TEST_CASE("row sums match the univariate specialization, n <= 20") {
  auto check_gf = [](const RationalBgf& gf) {
    RationalBgf uni = specialize_y1(gf);
    for (const Poly2& f : uni.denominator_factors) CHECK(f.max_y_degree() == 0);
    CHECK(uni.numerator.max_y_degree() == 0);
    auto direct = row_sums(expand(uni, 20));
    auto sums = row_sums(expand(gf, 20));
    CHECK(direct == sums);
  };
  for (const RationalBgf& gf : registered_gfs()) check_gf(gf);
  check_gf(imported_gf_012());
}

TEST_CASE("specialization matches hand-reduced univariate forms") {
  // {110,201} at y = 1: (x^4 - x^3 + 3x^2 - 3x + 1)/((x-1)(x^3 - 2x^2 + 3x - 1))
  RationalBgf expected{
      Poly2({{4, 0, 1}, {3, 0, -1}, {2, 0, 3}, {1, 0, -3}, {0, 0, 1}}),
      {Poly2({{1, 0, 1}, {0, 0, -1}}), Poly2({{3, 0, 1}, {2, 0, -2}, {1, 0, 3}, {0, 0, -1}})},
      false};
  CHECK(same_function(specialize_y1(registered_gf(parse_pattern("110"), parse_pattern("201"))),
                      expected));

  // {102,201} at y = 1: (x^4 - 4x^3 + 8x^2 - 5x + 1)/((x-1)(2x-1)(x^2 - 3x + 1))
  RationalBgf expected2{
      Poly2({{4, 0, 1}, {3, 0, -4}, {2, 0, 8}, {1, 0, -5}, {0, 0, 1}}),
      {Poly2({{1, 0, 1}, {0, 0, -1}}), Poly2({{1, 0, 2}, {0, 0, -1}}),
       Poly2({{2, 0, 1}, {1, 0, -3}, {0, 0, 1}})},
      false};
  CHECK(same_function(specialize_y1(registered_gf(parse_pattern("102"), parse_pattern("201"))),
                      expected2));

  // a y-free function is unchanged
  RationalBgf plain{Poly2({{0, 0, 1}}), {Poly2({{1, 0, -2}, {0, 0, 1}})}, false};
  CHECK(specialize_y1(plain) == plain);
}

TEST_CASE("bivariate tables equal the oracle refinement, n <= 12") {
  const auto& pairs = length3_pattern_pairs();
  for (const auto& [sigma, tau] : pairs) {
    const PairClassification& row = classify(sigma, tau);
    if (row.kind != ClassificationKind::GeneratingFunction) continue;
    SeriesTable table = expand(registered_gfs()[static_cast<std::size_t>(row.gf_id)], 12);
    for (int n = 0; n <= 12; ++n) {
      DescentVector dv = count_by_descents_parallel(n, PatternSet({sigma, tau}));
      CHECK(padded(table[static_cast<std::size_t>(n)]) == dv.counts);
    }
  }
}

TEST_CASE("imported 012 function") {
  const RationalBgf& gf = imported_gf_012();
  auto sums = row_sums(expand(gf, 10));
  CHECK(sums[0] == 1);
  for (int n = 1; n <= 10; ++n) CHECK(sums[static_cast<std::size_t>(n)] == int128(1) << (n - 1));

  SeriesTable table = expand(gf, 10);
  PatternSet p012({parse_pattern("012")});
  for (int n = 0; n <= 10; ++n) {
    CHECK(padded(table[static_cast<std::size_t>(n)]) == count_by_descents(n, p012).counts);
  }
}

TEST_CASE("expansion guards") {
  RationalBgf zero_const{Poly2({{0, 0, 1}}), {Poly2({{1, 0, 1}})}, false};  // denominator x
  CHECK_THROWS_AS(expand(zero_const, 4), std::domain_error);

  RationalBgf fine{Poly2({{0, 0, 1}}), {Poly2({{1, 0, -1}, {0, 0, 1}})}, false};
  CHECK_THROWS_AS(expand(fine, 65), std::invalid_argument);
  CHECK_NOTHROW(expand(fine, 64));

  // constant term -1 is normalized internally: 1/(x - 1) = -1 - x - x^2 - ...
  RationalBgf neg{Poly2({{0, 0, 1}}), {Poly2({{1, 0, 1}, {0, 0, -1}})}, false};
  auto sums = row_sums(expand(neg, 3));
  CHECK(sums == std::vector<int128>{-1, -1, -1, -1});
}

TEST_CASE("gf text rendering") {
  CHECK(registered_gf(parse_pattern("100"), parse_pattern("110")).text() ==
        "(x^4*y - x^4 + 2*x^3 - 2*x + 1) / ((x - 1)*(x^3*y - 2*x^3 + x^2 + 2*x - 1))");
  CHECK(registered_gf(parse_pattern("000"), parse_pattern("120")).text() ==
        "-(x^4*y + x^3*y + 1) / (x^4*y + x^2 + x - 1)");
}
