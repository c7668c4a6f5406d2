#pragma once

// Truncated double monomial quasisymmetric functions
//
//   M_alpha(x, y) = sum_{i_1 < ... < i_k} prod_l prod_{j <= alpha_l} (x_{i_l} - y_j)
//
// evaluated on the finite variable set x_1..x_{n_x}, y_1..y_{n_y}, and
// expansion of quasisymmetric polynomials in that basis.

#include <map>
#include <ostream>
#include <vector>

#include "dqsym/compositions.hpp"
#include "dqsym/polyring.hpp"

namespace dqsym {

struct TruncationContext {
  unsigned n_x = 0;
  unsigned n_y = 0;

  friend bool operator==(const TruncationContext&, const TruncationContext&) = default;
};

/// Finite Z[y]-linear combination sum_gamma c_gamma M_gamma.  Stored
/// coefficients are nonzero and x-free.
class Expansion {
 public:
  using CoefficientMap = std::map<Composition, Polynomial>;

  Expansion() = default;
  /// Drops zero entries; throws std::invalid_argument on an x-dependent
  /// coefficient.
  explicit Expansion(CoefficientMap coeffs);

  const CoefficientMap& coefficients() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Zero polynomial when gamma is absent.
  Polynomial coefficient(const Composition& gamma) const;

  void add(const Composition& gamma, const Polynomial& coeff);

  Expansion& operator+=(const Expansion& other);
  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend bool operator==(const Expansion&, const Expansion&) = default;

 private:
  CoefficientMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Expansion& e);

/// Throws TruncationTooSmall unless l(alpha) <= n_x and max part <= n_y.
Polynomial double_monomial(const Composition& alpha, const TruncationContext& ctx);

/// M_alpha(x), the y = 0 specialization of double_monomial.
Polynomial monomial_qsym(const Composition& alpha, const TruncationContext& ctx);

/// Memoizes double_monomial for a fixed context.
class DoubleMonomialCache {
 public:
  explicit DoubleMonomialCache(TruncationContext ctx) : ctx_(ctx) {}
  const TruncationContext& context() const noexcept { return ctx_; }
  const Polynomial& get(const Composition& alpha);

 private:
  TruncationContext ctx_;
  std::map<Composition, Polynomial> cache_;
};

/// Where the generating factors f(x) of a quasisymmetric ring vanish.
///
/// origin:   f(0) = 0, the classical quasisymmetric polynomials.
/// first_y:  f(y_1) = 0, the ring spanned by the truncated M_alpha(x, y);
///           every factor prod_{j<=a}(x - y_j) vanishes at x = y_1.
///
/// The two rings differ in finitely many variables: M_(2,1)(x, y) is not
/// classically quasisymmetric (its x_i^2 coefficient depends on i), and
/// x1^2*x2 + x1^2*x3 + x2^2*x3 is not in the span of the M_gamma(x, y).
enum class BasePoint { origin, first_y };

/// With u_i = x_i - b (b = 0 or y_1 per `base`): true iff the Z[y]-coefficient
/// of u_{i_1}^{e_1} ... u_{i_k}^{e_k} depends only on (e_1, ..., e_k) and not
/// on the increasing choice of indices in [1, n_x].  Polynomials mentioning
/// x_i with i > n_x are rejected.
bool is_quasisymmetric(const Polynomial& p, const TruncationContext& ctx,
                       BasePoint base = BasePoint::first_y);

/// sum_{k_1 < ... < k_s <= n_x} f_1(x_{k_1}) ... f_s(x_{k_s}).
///
/// Each f_l is written in the formal variable x_1 (y-variables may appear as
/// scalars) and must have no x-free part.  Throws NotInMaximalIdeal on a
/// nonzero x-free part, TruncationTooSmall when s > n_x, and
/// std::invalid_argument when f_l involves some x_i with i > 1.
Polynomial qsym_generator(const std::vector<Polynomial>& generators, const TruncationContext& ctx);

/// Writes p = sum_gamma c_gamma M_gamma(x, y) in the truncated basis by
/// peeling off the top x-degree, one degree per round.  Throws NotInSpan
/// when a round fails to lower the x-degree, and TruncationTooSmall when a
/// needed basis element does not fit in ctx.
Expansion expand_in_M(const Polynomial& p, const TruncationContext& ctx);

/// Same, reusing a basis cache (whose context is used).
Expansion expand_in_M(const Polynomial& p, DoubleMonomialCache& basis);

/// Sum_gamma c_gamma * M_gamma(x, y) evaluated in ctx.
Polynomial evaluate_expansion(const Expansion& e, DoubleMonomialCache& basis);

}  // namespace dqsym
