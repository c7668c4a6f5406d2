#pragma once

// Helpers shared by the test binaries: shorthand constructors, a seeded
// random polynomial generator, and a direct integer evaluator that reads
// the term map without going through the ring operations.

#include <random>
#include <vector>

#include "dqsym/polyring.hpp"

namespace dqsym::testing {

inline Polynomial X(unsigned i) { return Polynomial::x(i); }
inline Polynomial Y(unsigned i) { return Polynomial::y(i); }

struct Point {
  std::vector<long long> x;  // x[i-1] is the value of x_i
  std::vector<long long> y;
};

inline Integer evaluate(const Polynomial& p, const Point& pt) {
  Integer total = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer term = c;
    for (const auto& [i, e] : m.x_exponents())
      for (unsigned k = 0; k < e; ++k) term *= pt.x.at(i - 1);
    for (const auto& [i, e] : m.y_exponents())
      for (unsigned k = 0; k < e; ++k) term *= pt.y.at(i - 1);
    total += term;
  }
  return total;
}

/// Random polynomial in x_1..x_nx, y_1..y_ny with total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, unsigned nx, unsigned ny,
                                    unsigned max_degree, unsigned max_terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> terms(0, max_terms);
  std::uniform_int_distribution<unsigned> var(0, nx + ny - 1);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial p;
  for (unsigned t = terms(rng); t > 0; --t) {
    ExponentList xs, ys;
    for (unsigned d = deg(rng); d > 0; --d) {
      unsigned v = var(rng);
      if (v < nx)
        xs.emplace_back(v + 1, 1);
      else
        ys.emplace_back(v - nx + 1, 1);
    }
    p.add_term(Monomial(xs, ys), coeff(rng));
  }
  return p;
}

inline Point random_point(std::mt19937& rng, unsigned nx, unsigned ny) {
  std::uniform_int_distribution<long long> v(-7, 7);
  Point pt;
  for (unsigned i = 0; i < nx; ++i) pt.x.push_back(v(rng));
  for (unsigned i = 0; i < ny; ++i) pt.y.push_back(v(rng));
  return pt;
}

}  // namespace dqsym::testing
