#include "dqsym/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace dqsym {

std::string to_string(WeightConvention conv) {
  return conv == WeightConvention::paper_literal ? "paper-literal" : "oracle-consistent";
}

WeightConvention parse_convention(const std::string& text) {
  if (text == "paper-literal" || text == "paper_literal") return WeightConvention::paper_literal;
  if (text == "oracle-consistent" || text == "oracle_consistent")
    return WeightConvention::oracle_consistent;
  throw std::invalid_argument("unknown weight convention '" + text + "'");
}

SkewEdgeTableau::SkewEdgeTableau(unsigned c, unsigned a, std::vector<unsigned> edges)
    : c_(c), a_(a), edges_(std::move(edges)) {
  if (a_ > c_) throw std::invalid_argument("skew shape c/a needs a <= c");
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("at most one edge label per box");
  if (!edges_.empty() && (edges_.front() < 1 || edges_.back() > a_))
    throw std::invalid_argument("edge labels must sit on the leftmost a boxes");
}

unsigned SkewEdgeTableau::r_value(unsigned i) const {
  if (i < 1 || i > a_) throw std::out_of_range("r_value: box index outside [1, a]");
  const auto right_edges = edges_.end() - std::upper_bound(edges_.begin(), edges_.end(), i);
  return (c_ - a_) + static_cast<unsigned>(right_edges);
}

Polynomial weight(const SkewEdgeTableau& s, WeightConvention conv) {
  Polynomial w(1);
  for (unsigned i : s.edges()) {
    const unsigned partner = i + 1 + s.r_value(i);
    w *= conv == WeightConvention::paper_literal ? Polynomial::y(i) - Polynomial::y(partner)
                                                 : Polynomial::y(partner) - Polynomial::y(i);
  }
  return w;
}

std::vector<SkewEdgeTableau> enumerate_tableaux(unsigned c, unsigned a, unsigned b) {
  if (a > c) throw std::invalid_argument("enumerate_tableaux: needs a <= c");
  std::vector<SkewEdgeTableau> out;
  const unsigned filled = c - a;
  if (b < filled || b - filled > a) return out;
  const unsigned edge_count = b - filled;
  for (const auto& subset : enumerate_injections(edge_count, a)) {
    std::vector<unsigned> edges(subset.images().begin(), subset.images().end());
    out.emplace_back(c, a, std::move(edges));
  }
  return out;
}

std::map<unsigned, Polynomial> cp_product(unsigned a, unsigned b, WeightConvention conv) {
  if (a == 0 || b == 0) throw std::invalid_argument("cp_product: classes are indexed from 1");
  std::map<unsigned, Polynomial> out;
  for (unsigned c = std::max(a, b); c <= a + b; ++c) {
    Polynomial sum;
    for (const auto& s : enumerate_tableaux(c, a, b)) sum += weight(s, conv);
    if (!sum.is_zero()) out.emplace(c, std::move(sum));
  }
  return out;
}

RowShape row_shape(const Composition& alpha, const Composition& beta, const Composition& gamma,
                   const OrderedInjection& iota, const OrderedInjection& jota, std::size_t i) {
  const auto ia = iota.preimage(i);
  const auto jb = jota.preimage(i);
  return {gamma.part(i), ia ? alpha.part(*ia) : 0u, jb ? beta.part(*jb) : 0u};
}

std::vector<SkylineTableau> enumerate_skylines(const Composition& alpha, const Composition& beta,
                                               const Composition& gamma,
                                               const OrderedInjection& iota,
                                               const OrderedInjection& jota) {
  const std::size_t n = gamma.length();
  if (iota.source_size() != alpha.length() || jota.source_size() != beta.length() ||
      iota.target_size() != n || jota.target_size() != n)
    throw std::invalid_argument("enumerate_skylines: injection sizes do not match compositions");

  std::vector<std::vector<SkewEdgeTableau>> choices(n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (!iota.preimage(i) && !jota.preimage(i)) return {};
    const RowShape shape = row_shape(alpha, beta, gamma, iota, jota, i);
    if (shape.a > shape.c) return {};
    choices[i - 1] = enumerate_tableaux(shape.c, shape.a, shape.b);
    if (choices[i - 1].empty()) return {};
  }

  std::vector<SkylineTableau> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    SkylineTableau t{gamma, alpha, beta, iota, jota, {}};
    t.rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) t.rows.push_back(choices[i][pick[i]]);
    out.push_back(std::move(t));
    std::size_t k = n;
    while (k > 0 && pick[k - 1] + 1 == choices[k - 1].size()) pick[--k] = 0;
    if (k == 0) break;
    ++pick[k - 1];
  }
  return out;
}

Polynomial skyline_weight(const SkylineTableau& t, WeightConvention conv) {
  Polynomial w(1);
  for (const auto& row : t.rows) w *= weight(row, conv);
  return w;
}

std::ostream& operator<<(std::ostream& os, const SkewEdgeTableau& s) {
  os << s.total_boxes() << '/' << s.empty_boxes() << " E={";
  for (std::size_t k = 0; k < s.edges().size(); ++k) os << (k ? "," : "") << s.edges()[k];
  return os << '}';
}

}  // namespace dqsym
