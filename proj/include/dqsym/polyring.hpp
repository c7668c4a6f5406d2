#pragma once

// Exact sparse polynomials over the integers in two indexed variable
// families x_1, x_2, ... and y_1, y_2, ...  The x-free polynomials form the
// coefficient ring Z[y_1, y_2, ...].

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dqsym {

using Integer = boost::multiprecision::cpp_int;

enum class VarFamily : std::uint8_t { x, y };

/// A single ring variable x_i or y_i (indices are 1-based).
struct Variable {
  VarFamily family;
  unsigned index;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

Variable x_var(unsigned index);
Variable y_var(unsigned index);

/// Sparse exponent list: (index, exponent) pairs sorted by index, no zero
/// exponents.
using ExponentList = std::vector<std::pair<unsigned, unsigned>>;

class Monomial {
 public:
  Monomial() = default;
  /// Pairs may come in any order; repeated indices are merged and zero
  /// exponents dropped.  Throws std::invalid_argument on index 0.
  Monomial(ExponentList x_exponents, ExponentList y_exponents);

  static Monomial of(Variable v, unsigned exponent = 1);
  /// x_1^{e_1} x_2^{e_2} ... from a dense exponent vector.
  static Monomial from_dense_x(const std::vector<unsigned>& exponents);

  const ExponentList& x_exponents() const noexcept { return x_; }
  const ExponentList& y_exponents() const noexcept { return y_; }

  unsigned x_degree() const noexcept;
  unsigned y_degree() const noexcept;
  unsigned degree() const noexcept { return x_degree() + y_degree(); }
  unsigned exponent(Variable v) const noexcept;

  bool is_one() const noexcept { return x_.empty() && y_.empty(); }
  bool is_x_free() const noexcept { return x_.empty(); }

  Monomial x_part() const { return Monomial(x_, {}); }
  Monomial y_part() const { return Monomial({}, y_); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  ExponentList x_;
  ExponentList y_;
};

/// Canonical term order: higher total degree first, ties broken
/// lexicographically on the exponent vector (x_1, x_2, ..., y_1, y_2, ...)
/// with larger exponents first.  `operator()` answers "a precedes b".
struct GradedLexOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GradedLexOrder>;

  Polynomial() = default;
  Polynomial(long long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& constant);
  Polynomial(const Monomial& m, const Integer& coeff);

  static Polynomial variable(Variable v);
  static Polynomial x(unsigned index) { return variable(x_var(index)); }
  static Polynomial y(unsigned index) { return variable(y_var(index)); }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Integer coefficient(const Monomial& m) const;
  /// Constant term.
  Integer constant_term() const { return coefficient(Monomial{}); }

  /// -1 for the zero polynomial.
  int max_x_degree() const noexcept;
  bool is_x_free() const noexcept;
  bool is_constant() const noexcept;
  /// True when every term has y-degree `d` (the zero polynomial qualifies).
  bool is_y_homogeneous(unsigned d) const noexcept;
  unsigned max_x_index() const noexcept;
  unsigned max_y_index() const noexcept;

  /// Adds coeff * m in place.
  void add_term(const Monomial& m, const Integer& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial negate(const Polynomial& p);
Polynomial pow(const Polynomial& p, unsigned exponent);

using Assignment = std::map<Variable, Polynomial>;

/// Simultaneous substitution; variables without an entry are left alone.
Polynomial substitute(const Polynomial& p, const Assignment& assignment);

/// Sets every y-variable of `p` to zero.
Polynomial specialize_y_to_zero(const Polynomial& p);

/// Sum of the terms of `p` whose total x-degree is `d`.
Polynomial x_degree_component(const Polynomial& p, unsigned d);

/// The Z[y]-coefficient of the pure x-monomial `xm` in `p`.
/// Throws std::invalid_argument if `xm` carries y-exponents.
Polynomial coefficient_of_x_monomial(const Polynomial& p, const Monomial& xm);

/// Groups the terms of `p` by their x-part.
std::map<Monomial, Polynomial, GradedLexOrder> split_by_x_monomial(const Polynomial& p);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace dqsym
