#include "dqsym/polyring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dqsym {

namespace {

ExponentList normalize(ExponentList list) {
  std::sort(list.begin(), list.end());
  ExponentList out;
  out.reserve(list.size());
  for (const auto& [index, exp] : list) {
    if (index == 0) throw std::invalid_argument("variable indices are 1-based");
    if (exp == 0) continue;
    if (!out.empty() && out.back().first == index)
      out.back().second += exp;
    else
      out.emplace_back(index, exp);
  }
  return out;
}

ExponentList merge_product(const ExponentList& a, const ExponentList& b) {
  ExponentList out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first == j->first) {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    } else if (i->first < j->first) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

unsigned total(const ExponentList& list) noexcept {
  unsigned d = 0;
  for (const auto& entry : list) d += entry.second;
  return d;
}

// +1 when `a` has the larger exponent at the first index where the dense
// exponent vectors differ, -1 for `b`, 0 when equal.
int lex_compare(const ExponentList& a, const ExponentList& b) noexcept {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second ? 1 : -1;
      ++i;
      ++j;
    } else {
      return i->first < j->first ? 1 : -1;
    }
  }
  if (i != a.end()) return 1;
  if (j != b.end()) return -1;
  return 0;
}

unsigned exponent_in(const ExponentList& list, unsigned index) noexcept {
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(index, 0u));
  return (it != list.end() && it->first == index) ? it->second : 0;
}

void print_factor(std::ostream& os, char name, unsigned index, unsigned exp, bool& first) {
  if (!first) os << '*';
  first = false;
  os << name << index;
  if (exp != 1) os << '^' << exp;
}

}  // namespace

Variable x_var(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices are 1-based");
  return {VarFamily::x, index};
}

Variable y_var(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices are 1-based");
  return {VarFamily::y, index};
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(ExponentList x_exponents, ExponentList y_exponents)
    : x_(normalize(std::move(x_exponents))), y_(normalize(std::move(y_exponents))) {}

Monomial Monomial::of(Variable v, unsigned exponent) {
  ExponentList e{{v.index, exponent}};
  return v.family == VarFamily::x ? Monomial(std::move(e), {}) : Monomial({}, std::move(e));
}

Monomial Monomial::from_dense_x(const std::vector<unsigned>& exponents) {
  ExponentList e;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    e.emplace_back(static_cast<unsigned>(i + 1), exponents[i]);
  return Monomial(std::move(e), {});
}

unsigned Monomial::x_degree() const noexcept { return total(x_); }
unsigned Monomial::y_degree() const noexcept { return total(y_); }

unsigned Monomial::exponent(Variable v) const noexcept {
  return exponent_in(v.family == VarFamily::x ? x_ : y_, v.index);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.x_ = merge_product(a.x_, b.x_);
  out.y_ = merge_product(a.y_, b.y_);
  return out;
}

bool GradedLexOrder::operator()(const Monomial& a, const Monomial& b) const noexcept {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  if (int c = lex_compare(a.x_exponents(), b.x_exponents()); c != 0) return c > 0;
  return lex_compare(a.y_exponents(), b.y_exponents()) > 0;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Integer& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

Polynomial Polynomial::variable(Variable v) { return Polynomial(Monomial::of(v), 1); }

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::max_x_degree() const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.x_degree()));
  return d;
}

bool Polynomial::is_x_free() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.is_x_free(); });
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_y_homogeneous(unsigned d) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.y_degree() == d; });
}

unsigned Polynomial::max_x_index() const noexcept {
  unsigned k = 0;
  for (const auto& [m, c] : terms_)
    if (!m.x_exponents().empty()) k = std::max(k, m.x_exponents().back().first);
  return k;
}

unsigned Polynomial::max_y_index() const noexcept {
  unsigned k = 0;
  for (const auto& [m, c] : terms_)
    if (!m.y_exponents().empty()) k = std::max(k, m.y_exponents().back().first);
  return k;
}

void Polynomial::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial negate(const Polynomial& p) { return -p; }

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Assignment& assignment) {
  if (assignment.empty()) return p;
  Polynomial out;
  // Powers of substituted variables are shared across terms.
  std::map<std::pair<Variable, unsigned>, Polynomial> power_cache;
  auto power_of = [&](Variable v, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end())
      it = power_cache.emplace(key, pow(assignment.at(v), e)).first;
    return it->second;
  };

  for (const auto& [m, c] : p.terms()) {
    ExponentList kept_x;
    ExponentList kept_y;
    std::vector<std::pair<Variable, unsigned>> replaced;
    for (const auto& [i, e] : m.x_exponents()) {
      if (assignment.count(x_var(i)))
        replaced.emplace_back(x_var(i), e);
      else
        kept_x.emplace_back(i, e);
    }
    for (const auto& [i, e] : m.y_exponents()) {
      if (assignment.count(y_var(i)))
        replaced.emplace_back(y_var(i), e);
      else
        kept_y.emplace_back(i, e);
    }
    Polynomial term(Monomial(std::move(kept_x), std::move(kept_y)), c);
    for (const auto& [v, e] : replaced) {
      term = term * power_of(v, e);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

Polynomial specialize_y_to_zero(const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.y_exponents().empty()) out.add_term(m, c);
  return out;
}

Polynomial x_degree_component(const Polynomial& p, unsigned d) {
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.x_degree() == d) out.add_term(m, c);
  return out;
}

Polynomial coefficient_of_x_monomial(const Polynomial& p, const Monomial& xm) {
  if (!xm.y_exponents().empty())
    throw std::invalid_argument("coefficient_of_x_monomial: expected a pure x-monomial");
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (m.x_exponents() == xm.x_exponents()) out.add_term(m.y_part(), c);
  return out;
}

std::map<Monomial, Polynomial, GradedLexOrder> split_by_x_monomial(const Polynomial& p) {
  std::map<Monomial, Polynomial, GradedLexOrder> out;
  for (const auto& [m, c] : p.terms()) out[m.x_part()].add_term(m.y_part(), c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  if (m.is_one()) return os << '1';
  bool first = true;
  for (const auto& [i, e] : m.x_exponents()) print_factor(os, 'x', i, e, first);
  for (const auto& [i, e] : m.y_exponents()) print_factor(os, 'y', i, e, first);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << magnitude;
    } else {
      if (magnitude != 1) os << magnitude << '*';
      os << m;
    }
  }
  return os;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::string to_string(const Polynomial& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

}  // namespace dqsym
