#pragma once

// One-row skew edge-labeled tableaux and their stacks (skylines).
//
// A tableau of shape c/a is a row of c boxes whose rightmost c - a boxes
// carry a bullet; each of the leftmost a boxes may carry a bullet on its
// lower edge.  The set of edge-labeled boxes is E, a subset of [a], and the
// content is (c - a) + |E|.

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dqsym/compositions.hpp"
#include "dqsym/polyring.hpp"

namespace dqsym {

/// Sign convention for the weight factors.
///
/// paper_literal:     factor (y_i - y_{i+1+r(i)})
/// oracle_consistent: factor (y_{i+1+r(i)} - y_i)
///
/// Only oracle_consistent reproduces the product of the classes
/// prod_{j<=k}(x - y_j) exactly; the two differ on a coefficient c^gamma
/// by (-1)^{|alpha|+|beta|-|gamma|}.
enum class WeightConvention { paper_literal, oracle_consistent };

inline constexpr WeightConvention kDefaultConvention = WeightConvention::oracle_consistent;

std::string to_string(WeightConvention conv);
/// Accepts "paper-literal"/"paper_literal" and "oracle-consistent"/"oracle_consistent".
WeightConvention parse_convention(const std::string& text);

class SkewEdgeTableau {
 public:
  SkewEdgeTableau() = default;
  /// Throws std::invalid_argument unless a <= c and `edges` is a subset of
  /// [a] (duplicates rejected; order is irrelevant).
  SkewEdgeTableau(unsigned c, unsigned a, std::vector<unsigned> edges);

  unsigned total_boxes() const noexcept { return c_; }
  unsigned empty_boxes() const noexcept { return a_; }
  /// Sorted edge-labeled box positions.
  const std::vector<unsigned>& edges() const noexcept { return edges_; }
  unsigned content() const noexcept { return (c_ - a_) + static_cast<unsigned>(edges_.size()); }

  /// Labels strictly right of box i: all c - a filled boxes plus the edge
  /// labels on boxes j > i.  Throws std::out_of_range unless 1 <= i <= a.
  unsigned r_value(unsigned i) const;

  friend bool operator==(const SkewEdgeTableau&, const SkewEdgeTableau&) = default;

 private:
  unsigned c_ = 0;
  unsigned a_ = 0;
  std::vector<unsigned> edges_;
};

Polynomial weight(const SkewEdgeTableau& s, WeightConvention conv = kDefaultConvention);

/// All tableaux of shape c/a and content b with nonzero weight, i.e. the
/// rightmost c - a boxes filled and |E| = b - (c - a).  Edge sets come in
/// lexicographic order.  Throws std::invalid_argument if a > c.
std::vector<SkewEdgeTableau> enumerate_tableaux(unsigned c, unsigned a, unsigned b);

/// Equivariant product of projective-space classes:
/// x_a * x_b = sum_c coeff[c] x_c.  Zero coefficients are omitted.
std::map<unsigned, Polynomial> cp_product(unsigned a, unsigned b,
                                          WeightConvention conv = kDefaultConvention);

/// Stack of one-row tableaux indexed by the rows of gamma; row i has shape
/// gamma_i / alpha_{iota^{-1}(i)} and content beta_{jota^{-1}(i)} (a missing
/// preimage contributes 0).
struct SkylineTableau {
  Composition gamma;
  Composition alpha;
  Composition beta;
  OrderedInjection iota;
  OrderedInjection jota;
  std::vector<SkewEdgeTableau> rows;

  friend bool operator==(const SkylineTableau&, const SkylineTableau&) = default;
};

/// Row shape data (c, a, b) of row i (1-based) for the given injections.
struct RowShape {
  unsigned c;
  unsigned a;
  unsigned b;
};
RowShape row_shape(const Composition& alpha, const Composition& beta, const Composition& gamma,
                   const OrderedInjection& iota, const OrderedInjection& jota, std::size_t i);

/// Every skyline for (alpha, beta, gamma, iota, jota), rows varying fastest
/// from the bottom.  Empty if the images do not cover [l(gamma)] or some row
/// admits no tableau.  Throws std::invalid_argument if the injections do
/// not have the right source/target sizes.
std::vector<SkylineTableau> enumerate_skylines(const Composition& alpha, const Composition& beta,
                                               const Composition& gamma,
                                               const OrderedInjection& iota,
                                               const OrderedInjection& jota);

Polynomial skyline_weight(const SkylineTableau& t, WeightConvention conv = kDefaultConvention);

std::ostream& operator<<(std::ostream& os, const SkewEdgeTableau& s);

}  // namespace dqsym
