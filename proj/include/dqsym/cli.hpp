#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dqsym/compositions.hpp"
#include "dqsym/polyring.hpp"
#include "dqsym/tableaux.hpp"

namespace dqsym::cli {

enum class OutputFormat { human, json };

struct CliConfig {
  WeightConvention convention = kDefaultConvention;
  OutputFormat format = OutputFormat::human;
  bool explicit_zeros = false;
  /// Worker threads for `verify`; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

int cmd_product(const Composition& alpha, const Composition& beta, const CliConfig& cfg,
                std::ostream& out);
int cmd_coefficient(const Composition& alpha, const Composition& beta, const Composition& gamma,
                    const CliConfig& cfg, std::ostream& out);
int cmd_table(unsigned max_size, unsigned max_length, const CliConfig& cfg, std::ostream& out);
int cmd_verify(unsigned max_size, unsigned max_length, const CliConfig& cfg, std::ostream& out);
int cmd_tableaux(unsigned c, unsigned a, unsigned b, const CliConfig& cfg, std::ostream& out);
int cmd_shuffles(const Composition& alpha, const Composition& beta, const CliConfig& cfg,
                 std::ostream& out);
int cmd_relation_check(const CliConfig& cfg, std::ostream& out);

/// One candidate relation among t = x1*x2, z = x1 + x2, w = x1^2*x2.
struct RelationCandidate {
  std::string name;
  Polynomial expanded;
  /// Value at x1 = x2 = 1.
  Integer value_at_ones;
  /// Largest x-degree among the three summands before cancellation.
  unsigned top_degree;

  bool vanishes() const noexcept { return expanded.is_zero(); }
};

/// The printed relation z^3 - tzw + w^2 and the corrected t^3 - tzw + w^2.
std::vector<RelationCandidate> qsym2_relation_candidates();

/// Every composition with |alpha| <= max_size and l(alpha) <= max_length,
/// in graded-lex order.
std::vector<Composition> compositions_up_to(unsigned max_size, unsigned max_length);

/// Parses argv and dispatches.  Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dqsym::cli
