#include "dqsym/lrcalc.hpp"

#include <algorithm>

#include "dqsym/errors.hpp"

namespace dqsym {

namespace {

bool within_support(const Composition& alpha, const Composition& beta, const Composition& gamma) {
  const std::size_t lo_len = std::max(alpha.length(), beta.length());
  const std::size_t hi_len = alpha.length() + beta.length();
  const unsigned lo_size = std::max(alpha.size(), beta.size());
  const unsigned hi_size = alpha.size() + beta.size();
  return gamma.length() >= lo_len && gamma.length() <= hi_len && gamma.size() >= lo_size &&
         gamma.size() <= hi_size;
}

// A row of shape c/a with content b has a nonzero-weight tableau iff
// max(a, b) <= c <= a + b.
bool row_admissible(unsigned c, unsigned a, unsigned b) {
  return c >= std::max(a, b) && c <= a + b;
}

}  // namespace

Polynomial structure_coefficient(const Composition& alpha, const Composition& beta,
                                 const Composition& gamma, WeightConvention conv) {
  Polynomial total;
  if (!within_support(alpha, beta, gamma)) return total;
  const std::size_t n = gamma.length();
  // Pairs whose images miss some row of gamma contribute the empty set, so
  // only covering pairs are visited.
  for_each_covering_pair(alpha.length(), beta.length(), n, [&](const InjectionPair& pair) {
    for (std::size_t i = 1; i <= n; ++i) {
      const RowShape s = row_shape(alpha, beta, gamma, pair.iota, pair.jota, i);
      if (!row_admissible(s.c, s.a, s.b)) return;
    }
    for (const auto& skyline : enumerate_skylines(alpha, beta, gamma, pair.iota, pair.jota))
      total += skyline_weight(skyline, conv);
  });
  return total;
}

std::vector<Composition> product_support(const Composition& alpha, const Composition& beta) {
  const unsigned max_part = alpha.max_part() + beta.max_part();
  const auto max_len = static_cast<unsigned>(alpha.length() + beta.length());
  std::vector<Composition> out;
  for (unsigned s = std::max(alpha.size(), beta.size()); s <= alpha.size() + beta.size(); ++s)
    for (auto& gamma : compositions_of(s, max_len, max_part))
      if (within_support(alpha, beta, gamma)) out.push_back(std::move(gamma));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CoefficientRecord> coefficient_table(const Composition& alpha,
                                                 const Composition& beta,
                                                 WeightConvention conv) {
  std::vector<CoefficientRecord> out;
  for (const auto& gamma : product_support(alpha, beta))
    out.push_back({alpha, beta, gamma, structure_coefficient(alpha, beta, gamma, conv)});
  return out;
}

Expansion product_expand(const Composition& alpha, const Composition& beta,
                         WeightConvention conv) {
  Expansion out;
  for (const auto& record : coefficient_table(alpha, beta, conv))
    out.add(record.gamma, record.coeff);
  return out;
}

TruncationContext oracle_context(const Composition& alpha, const Composition& beta) {
  return {static_cast<unsigned>(alpha.length() + beta.length()), alpha.size() + beta.size() + 1};
}

VerificationResult verify_expansion(const Composition& alpha, const Composition& beta,
                                    WeightConvention conv) {
  DoubleMonomialCache basis(oracle_context(alpha, beta));
  const Polynomial lhs = basis.get(alpha) * basis.get(beta);
  const Expansion rule = product_expand(alpha, beta, conv);

  VerificationResult result;
  result.product_identity = (evaluate_expansion(rule, basis) == lhs);
  try {
    result.expansion_agrees = (expand_in_M(lhs, basis) == rule);
  } catch (const NotInSpan&) {
    result.expansion_agrees = false;
  }
  return result;
}

}  // namespace dqsym
