#include <doctest.h>

#include "dqsym/tableaux.hpp"
#include "test_support.hpp"

using namespace dqsym;
using dqsym::testing::X;
using dqsym::testing::Y;

namespace {

constexpr auto kPaper = WeightConvention::paper_literal;
constexpr auto kOracle = WeightConvention::oracle_consistent;

std::uint64_t binomial(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// prod_{j=1}^{k} (x1 - y_j)
Polynomial chi(unsigned k) {
  Polynomial out(1);
  for (unsigned j = 1; j <= k; ++j) out *= X(1) - Y(j);
  return out;
}

}  // namespace

TEST_CASE("r_value counts labels strictly to the right") {
  const SkewEdgeTableau s(7, 4, {1, 3});
  CHECK(s.content() == 5);
  CHECK(s.r_value(1) == 4);
  CHECK(s.r_value(3) == 3);
  CHECK(s.r_value(2) == 4);
  CHECK(s.r_value(4) == 3);

  const SkewEdgeTableau full(3, 3, {});
  for (unsigned i = 1; i <= 3; ++i) CHECK(full.r_value(i) == 0);

  CHECK_THROWS_AS(s.r_value(0), std::out_of_range);
  CHECK_THROWS_AS(s.r_value(5), std::out_of_range);
}

TEST_CASE("tableau validation") {
  CHECK_THROWS_AS(SkewEdgeTableau(3, 4, {}), std::invalid_argument);
  CHECK_THROWS_AS(SkewEdgeTableau(5, 2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(SkewEdgeTableau(5, 2, {1, 1}), std::invalid_argument);
  CHECK(SkewEdgeTableau(5, 2, {2, 1}).edges() == std::vector<unsigned>{1, 2});
}

TEST_CASE("weights of the worked 7/4 tableaux") {
  CHECK(weight(SkewEdgeTableau(7, 4, {1, 3}), kPaper) == (Y(1) - Y(6)) * (Y(3) - Y(7)));
  CHECK(weight(SkewEdgeTableau(7, 4, {1, 2, 4}), kPaper) ==
        (Y(1) - Y(7)) * (Y(2) - Y(7)) * (Y(4) - Y(8)));
  CHECK(weight(SkewEdgeTableau(7, 4, {1, 3}), kOracle) == (Y(6) - Y(1)) * (Y(7) - Y(3)));
  CHECK(weight(SkewEdgeTableau(7, 4, {1, 2, 4}), kOracle) ==
        -((Y(1) - Y(7)) * (Y(2) - Y(7)) * (Y(4) - Y(8))));
  CHECK(weight(SkewEdgeTableau(2, 0, {}), kPaper) == Polynomial(1));
  CHECK(weight(SkewEdgeTableau(0, 0, {})) == Polynomial(1));
}

TEST_CASE("enumerate_tableaux examples") {
  const auto two = enumerate_tableaux(4, 2, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0].edges() == std::vector<unsigned>{1});
  CHECK(two[1].edges() == std::vector<unsigned>{2});

  const auto one = enumerate_tableaux(3, 3, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].edges().empty());

  CHECK(enumerate_tableaux(5, 1, 2).empty());
  CHECK(enumerate_tableaux(4, 0, 3).empty());
  CHECK(enumerate_tableaux(0, 0, 0).size() == 1);
  CHECK(enumerate_tableaux(0, 0, 1).empty());
  CHECK_THROWS_AS(enumerate_tableaux(2, 3, 1), std::invalid_argument);
}

TEST_CASE("tableau census against subset scan (property)") {
  for (unsigned c = 0; c <= 10; ++c) {
    for (unsigned a = 0; a <= c; ++a) {
      for (unsigned b = 0; b <= 10; ++b) {
        const auto tabs = enumerate_tableaux(c, a, b);
        // Every edge subset of [a], keeping those with the requested content.
        std::size_t scanned = 0;
        for (unsigned mask = 0; mask < (1u << a); ++mask)
          scanned += (c - a) + static_cast<unsigned>(__builtin_popcount(mask)) == b;
        CHECK(tabs.size() == scanned);
        const bool in_support = std::max(a, b) <= c && c <= a + b;
        CHECK(tabs.size() == (in_support ? binomial(a, static_cast<int>(a + b) - static_cast<int>(c)) : 0));

        for (const auto& s : tabs) {
          CHECK(s.content() == b);
          const Polynomial w = weight(s, kOracle);
          CHECK(w.is_y_homogeneous(a + b - c));
          CHECK(w.is_x_free());
          CHECK(w.max_y_index() <= a + b + 1);
        }
      }
    }
  }
}

TEST_CASE("cp_product examples") {
  CHECK(cp_product(1, 1, kPaper) == std::map<unsigned, Polynomial>{{1, Y(1) - Y(2)}, {2, Polynomial(1)}});
  CHECK(cp_product(1, 1, kOracle) == std::map<unsigned, Polynomial>{{1, Y(2) - Y(1)}, {2, Polynomial(1)}});
  CHECK(cp_product(1, 2, kOracle) == std::map<unsigned, Polynomial>{{2, Y(3) - Y(1)}, {3, Polynomial(1)}});
  CHECK_THROWS_AS(cp_product(0, 2), std::invalid_argument);
}

TEST_CASE("cp_product reproduces products of cell classes") {
  for (unsigned a = 1; a <= 4; ++a) {
    for (unsigned b = 1; b <= 4; ++b) {
      CAPTURE(a);
      CAPTURE(b);
      const auto oracle = cp_product(a, b, kOracle);
      Polynomial rhs;
      for (const auto& [c, coeff] : oracle) rhs += coeff * chi(c);
      CHECK(chi(a) * chi(b) == rhs);

      CHECK(oracle == cp_product(b, a, kOracle));
      CHECK(cp_product(a, b, kPaper) == cp_product(b, a, kPaper));

      // The literal convention differs by (-1)^{a+b-c}.
      const auto literal = cp_product(a, b, kPaper);
      REQUIRE(literal.size() == oracle.size());
      for (const auto& [c, coeff] : oracle)
        CHECK(literal.at(c) == ((a + b - c) % 2 == 0 ? coeff : -coeff));
    }
  }
  // The literal convention fails the same identity already at a = b = 1.
  Polynomial literal_rhs;
  for (const auto& [c, coeff] : cp_product(1, 1, kPaper)) literal_rhs += coeff * chi(c);
  CHECK(chi(1) * chi(1) != literal_rhs);
}

TEST_CASE("skylines of the worked example") {
  const Composition alpha{3, 2}, beta{2, 3}, gamma{3, 2, 4};
  const OrderedInjection iota(3, {1, 3}), jota(3, {2, 3});

  const auto skylines = enumerate_skylines(alpha, beta, gamma, iota, jota);
  REQUIRE(skylines.size() == 2);
  for (const auto& t : skylines) {
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0] == SkewEdgeTableau(3, 3, {}));
    CHECK(t.rows[1] == SkewEdgeTableau(2, 0, {}));
  }
  CHECK(skylines[0].rows[2] == SkewEdgeTableau(4, 2, {1}));
  CHECK(skylines[1].rows[2] == SkewEdgeTableau(4, 2, {2}));
  CHECK(skyline_weight(skylines[0], kPaper) == Y(1) - Y(4));
  CHECK(skyline_weight(skylines[1], kPaper) == Y(2) - Y(5));
  CHECK(skyline_weight(skylines[0], kOracle) == Y(4) - Y(1));

  // alpha_1 = 3 cannot sit in row 2 (gamma_2 = 2).
  CHECK(enumerate_skylines(alpha, beta, gamma, OrderedInjection(3, {1, 2}), jota).empty());
  CHECK(enumerate_skylines(alpha, beta, gamma, OrderedInjection(3, {2, 3}), jota).empty());
  // Row 2 is in neither image.
  CHECK(enumerate_skylines(alpha, beta, gamma, iota, OrderedInjection(3, {1, 3})).empty());
  // Shape 4/0 with content 3 is empty.
  CHECK(enumerate_skylines(alpha, beta, gamma, OrderedInjection(3, {1, 2}), OrderedInjection(3, {1, 3})).empty());

  CHECK_THROWS_AS(enumerate_skylines(alpha, beta, gamma, OrderedInjection(4, {1, 3}), jota),
                  std::invalid_argument);
}

TEST_CASE("skylines with all edge sets empty weigh 1") {
  // alpha and beta placed in disjoint rows: every row is c/c or c/0.
  const auto sky = enumerate_skylines({2}, {1}, {2, 1}, OrderedInjection(2, {1}), OrderedInjection(2, {2}));
  REQUIRE(sky.size() == 1);
  CHECK(skyline_weight(sky[0]) == Polynomial(1));

  const auto empty = enumerate_skylines({}, {}, {}, OrderedInjection(), OrderedInjection());
  REQUIRE(empty.size() == 1);
  CHECK(skyline_weight(empty[0]) == Polynomial(1));
}

TEST_CASE("convention parsing") {
  CHECK(parse_convention("paper-literal") == kPaper);
  CHECK(parse_convention("oracle_consistent") == kOracle);
  CHECK(to_string(kOracle) == "oracle-consistent");
  CHECK_THROWS_AS(parse_convention("both"), std::invalid_argument);
}
