#pragma once

// Equivariant Littlewood-Richardson rule for double monomial
// quasisymmetric functions:
//
//   M_alpha(x,y) * M_beta(x,y) = sum_gamma c^gamma_{alpha,beta} M_gamma(x,y),
//
// with c^gamma_{alpha,beta} the total weight of all skyline tableaux over
// all pairs of order-preserving injections iota: [l(alpha)] -> [l(gamma)],
// jota: [l(beta)] -> [l(gamma)].

#include <vector>

#include "dqsym/compositions.hpp"
#include "dqsym/polyring.hpp"
#include "dqsym/qsym.hpp"
#include "dqsym/tableaux.hpp"

namespace dqsym {

Polynomial structure_coefficient(const Composition& alpha, const Composition& beta,
                                 const Composition& gamma,
                                 WeightConvention conv = kDefaultConvention);

/// Candidate gamma for the product: l(gamma) in [max l, l(alpha)+l(beta)],
/// |gamma| in [max(|alpha|,|beta|), |alpha|+|beta|], parts at most
/// max_part(alpha) + max_part(beta).  Graded-lex order.
std::vector<Composition> product_support(const Composition& alpha, const Composition& beta);

struct CoefficientRecord {
  Composition alpha;
  Composition beta;
  Composition gamma;
  Polynomial coeff;
};

/// One record per gamma in product_support, zero coefficients included.
std::vector<CoefficientRecord> coefficient_table(const Composition& alpha,
                                                 const Composition& beta,
                                                 WeightConvention conv = kDefaultConvention);

Expansion product_expand(const Composition& alpha, const Composition& beta,
                         WeightConvention conv = kDefaultConvention);

/// Smallest context in which the product identity for (alpha, beta) is
/// checked: n_x = l(alpha) + l(beta), n_y = |alpha| + |beta| + 1.
TruncationContext oracle_context(const Composition& alpha, const Composition& beta);

struct VerificationResult {
  /// M_alpha * M_beta == sum_gamma c^gamma M_gamma as polynomials.
  bool product_identity = false;
  /// expand_in_M(M_alpha * M_beta) == product_expand(alpha, beta).
  bool expansion_agrees = false;

  bool passed() const noexcept { return product_identity && expansion_agrees; }
  explicit operator bool() const noexcept { return passed(); }
};

/// Cross-checks product_expand against brute-force polynomial arithmetic in
/// oracle_context(alpha, beta).
VerificationResult verify_expansion(const Composition& alpha, const Composition& beta,
                                    WeightConvention conv = kDefaultConvention);

}  // namespace dqsym
