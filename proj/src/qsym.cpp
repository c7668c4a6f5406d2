#include "dqsym/qsym.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "dqsym/errors.hpp"

namespace dqsym {

namespace {

// prod_{j=1}^{a} (x_i - y_j)
Polynomial cell_class(unsigned i, unsigned a) {
  Polynomial out(1);
  for (unsigned j = 1; j <= a; ++j) out *= Polynomial::x(i) - Polynomial::y(j);
  return out;
}

void check_fits(const Composition& alpha, const TruncationContext& ctx) {
  if (alpha.length() > ctx.n_x || alpha.max_part() > ctx.n_y) {
    std::ostringstream os;
    os << "M" << alpha << " needs n_x >= " << alpha.length() << " and n_y >= "
       << alpha.max_part() << ", got (" << ctx.n_x << ", " << ctx.n_y << ")";
    throw TruncationTooSmall(os.str());
  }
}

std::vector<unsigned> exponent_word(const Monomial& xm) {
  std::vector<unsigned> word;
  for (const auto& entry : xm.x_exponents()) word.push_back(entry.second);
  return word;
}

Monomial place_word(const std::vector<unsigned>& word, const OrderedInjection& f) {
  ExponentList e;
  for (std::size_t k = 0; k < word.size(); ++k) e.emplace_back(f.images()[k], word[k]);
  return Monomial(std::move(e), {});
}

}  // namespace

// ----------------------------------------------------------------- Expansion

Expansion::Expansion(CoefficientMap coeffs) {
  for (auto& [gamma, c] : coeffs) add(gamma, c);
}

Polynomial Expansion::coefficient(const Composition& gamma) const {
  auto it = coeffs_.find(gamma);
  return it == coeffs_.end() ? Polynomial{} : it->second;
}

void Expansion::add(const Composition& gamma, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (!coeff.is_x_free())
    throw std::invalid_argument("expansion coefficients must be free of x-variables");
  auto [it, inserted] = coeffs_.try_emplace(gamma, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Expansion& Expansion::operator+=(const Expansion& other) {
  for (const auto& [gamma, c] : other.coeffs_) add(gamma, c);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Expansion& e) {
  if (e.empty()) return os << '0';
  bool first = true;
  for (const auto& [gamma, c] : e.coefficients()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ")*M" << gamma;
  }
  return os;
}

// ------------------------------------------------------------ construction

Polynomial double_monomial(const Composition& alpha, const TruncationContext& ctx) {
  check_fits(alpha, ctx);
  const std::size_t k = alpha.length();
  const unsigned n = ctx.n_x;
  // partial[j] holds M_{(alpha_1..alpha_j)} in x_1..x_i after processing
  // variable i; sweeping j downward reuses the previous column in place.
  std::vector<Polynomial> partial(k + 1);
  partial[0] = Polynomial(1);
  for (unsigned i = 1; i <= n; ++i) {
    for (std::size_t j = std::min<std::size_t>(k, i); j >= 1; --j) {
      if (partial[j - 1].is_zero()) continue;
      partial[j] += partial[j - 1] * cell_class(i, alpha.part(j));
    }
  }
  return partial[k];
}

Polynomial monomial_qsym(const Composition& alpha, const TruncationContext& ctx) {
  return specialize_y_to_zero(double_monomial(alpha, ctx));
}

const Polynomial& DoubleMonomialCache::get(const Composition& alpha) {
  auto it = cache_.find(alpha);
  if (it == cache_.end()) it = cache_.emplace(alpha, double_monomial(alpha, ctx_)).first;
  return it->second;
}

bool is_quasisymmetric(const Polynomial& p, const TruncationContext& ctx, BasePoint base) {
  if (p.max_x_index() > ctx.n_x) return false;
  Polynomial shifted = p;
  if (base == BasePoint::first_y) {
    Assignment to_u;
    for (unsigned i = 1; i <= ctx.n_x; ++i) to_u.emplace(x_var(i), Polynomial::x(i) + Polynomial::y(1));
    shifted = substitute(p, to_u);
  }
  const auto by_x = split_by_x_monomial(shifted);
  std::set<std::vector<unsigned>> words;
  for (const auto& entry : by_x) words.insert(exponent_word(entry.first));

  static const Polynomial zero;
  auto lookup = [&](const Monomial& xm) -> const Polynomial& {
    auto it = by_x.find(xm);
    return it == by_x.end() ? zero : it->second;
  };

  for (const auto& word : words) {
    const auto placements = enumerate_injections(word.size(), ctx.n_x);
    const Polynomial& reference = lookup(place_word(word, placements.front()));
    for (const auto& f : placements)
      if (lookup(place_word(word, f)) != reference) return false;
  }
  return true;
}

Polynomial qsym_generator(const std::vector<Polynomial>& generators,
                          const TruncationContext& ctx) {
  const std::size_t s = generators.size();
  if (s > ctx.n_x)
    throw TruncationTooSmall("qsym_generator: more factors than x-variables");
  for (const auto& f : generators) {
    if (f.max_x_index() > 1)
      throw std::invalid_argument("qsym_generator: factors must be written in x_1 only");
    if (!x_degree_component(f, 0).is_zero())
      throw NotInMaximalIdeal("qsym_generator: factor " + to_string(f) +
                              " has a nonzero constant term");
  }

  // f(x_k) for every factor and every k.
  std::vector<std::vector<Polynomial>> shifted(s, std::vector<Polynomial>(ctx.n_x + 1));
  for (std::size_t l = 0; l < s; ++l)
    for (unsigned k = 1; k <= ctx.n_x; ++k)
      shifted[l][k] = substitute(generators[l], {{x_var(1), Polynomial::x(k)}});

  Polynomial out;
  for (const auto& f : enumerate_injections(s, ctx.n_x)) {
    Polynomial term(1);
    for (std::size_t l = 0; l < s; ++l) term *= shifted[l][f.images()[l]];
    out += term;
  }
  return out;
}

// --------------------------------------------------------------- expansion

Expansion expand_in_M(const Polynomial& p, const TruncationContext& ctx) {
  DoubleMonomialCache basis(ctx);
  return expand_in_M(p, basis);
}

Expansion expand_in_M(const Polynomial& p, DoubleMonomialCache& basis) {
  Expansion out;
  Polynomial residual = p;
  while (!residual.is_zero()) {
    const int d = residual.max_x_degree();
    const Polynomial top = x_degree_component(residual, static_cast<unsigned>(d));

    // Candidate compositions are the exponent words in the top component,
    // processed in lexicographic order.
    std::set<std::vector<unsigned>> words;
    for (const auto& [m, c] : top.terms()) words.insert(exponent_word(m.x_part()));

    for (const auto& word : words) {
      const Polynomial coeff =
          coefficient_of_x_monomial(residual, Monomial::from_dense_x(word));
      if (coeff.is_zero()) continue;
      const Composition gamma(word);
      out.add(gamma, coeff);
      residual -= coeff * basis.get(gamma);
    }

    if (!residual.is_zero() && residual.max_x_degree() >= d) {
      std::ostringstream os;
      os << "expand_in_M: residual of x-degree " << residual.max_x_degree()
         << " is not in the span of the truncated basis";
      throw NotInSpan(os.str());
    }
  }
  return out;
}

Polynomial evaluate_expansion(const Expansion& e, DoubleMonomialCache& basis) {
  Polynomial out;
  for (const auto& [gamma, c] : e.coefficients()) out += c * basis.get(gamma);
  return out;
}

}  // namespace dqsym
