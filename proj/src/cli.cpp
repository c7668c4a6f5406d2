#include "dqsym/cli.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "dqsym/errors.hpp"
#include "dqsym/json_io.hpp"
#include "dqsym/lrcalc.hpp"
#include "dqsym/qsym.hpp"

namespace dqsym::cli {

namespace {

void banner(const CliConfig& cfg, std::ostream& out) {
  out << "# convention: " << to_string(cfg.convention) << '\n';
}

struct PairOutcome {
  Composition alpha;
  Composition beta;
  VerificationResult result;
};

std::vector<PairOutcome> run_sweep(const std::vector<Composition>& comps, WeightConvention conv,
                                   unsigned threads) {
  std::vector<PairOutcome> outcomes;
  for (const auto& a : comps)
    for (const auto& b : comps) outcomes.push_back({a, b, {}});

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, outcomes.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < outcomes.size(); k = next++)
      outcomes[k].result = verify_expansion(outcomes[k].alpha, outcomes[k].beta, conv);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return outcomes;
}

}  // namespace

std::vector<Composition> compositions_up_to(unsigned max_size, unsigned max_length) {
  std::vector<Composition> out;
  for (unsigned s = 0; s <= max_size; ++s)
    for (auto& c : compositions_of(s, max_length, s)) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_product(const Composition& alpha, const Composition& beta, const CliConfig& cfg,
                std::ostream& out) {
  std::vector<CoefficientRecord> rows;
  for (auto& r : coefficient_table(alpha, beta, cfg.convention))
    if (cfg.explicit_zeros || !r.coeff.is_zero()) rows.push_back(std::move(r));

  if (cfg.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back({{"gamma", to_json(r.gamma)}, {"coeff", to_json(r.coeff)}});
    out << arr.dump() << '\n';
    return kExitOk;
  }
  banner(cfg, out);
  out << "# M" << alpha << " * M" << beta << '\n';
  for (const auto& r : rows) out << "gamma=" << r.gamma << " coeff=" << r.coeff << '\n';
  return kExitOk;
}

int cmd_coefficient(const Composition& alpha, const Composition& beta, const Composition& gamma,
                    const CliConfig& cfg, std::ostream& out) {
  CoefficientRecord r{alpha, beta, gamma, structure_coefficient(alpha, beta, gamma, cfg.convention)};
  if (cfg.format == OutputFormat::json) {
    out << to_json(r).dump() << '\n';
    return kExitOk;
  }
  banner(cfg, out);
  out << "c^" << gamma << "_{" << alpha << "," << beta << "} = " << r.coeff << '\n';
  return kExitOk;
}

int cmd_table(unsigned max_size, unsigned max_length, const CliConfig& cfg, std::ostream& out) {
  const auto comps = compositions_up_to(max_size, max_length);
  if (cfg.format == OutputFormat::human) banner(cfg, out);
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      for (const auto& r : coefficient_table(a, b, cfg.convention)) {
        if (!cfg.explicit_zeros && r.coeff.is_zero()) continue;
        if (cfg.format == OutputFormat::json)
          out << to_json(r).dump() << '\n';
        else
          out << "alpha=" << a << " beta=" << b << " gamma=" << r.gamma << " coeff=" << r.coeff
              << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_verify(unsigned max_size, unsigned max_length, const CliConfig& cfg, std::ostream& out) {
  const auto outcomes = run_sweep(compositions_up_to(max_size, max_length), cfg.convention, cfg.threads);
  std::size_t failed = 0;
  const PairOutcome* first = nullptr;
  for (const auto& o : outcomes) {
    if (!o.result.passed()) {
      ++failed;
      if (!first) first = &o;
    }
  }
  const std::size_t passed = outcomes.size() - failed;

  if (cfg.format == OutputFormat::json) {
    Json report{{"convention", to_string(cfg.convention)},
                {"max_size", max_size},
                {"max_length", max_length},
                {"checked", outcomes.size()},
                {"passed", passed},
                {"failed", failed},
                {"first_failure", nullptr}};
    if (first)
      report["first_failure"] = {{"alpha", to_json(first->alpha)},
                                 {"beta", to_json(first->beta)},
                                 {"product_identity", first->result.product_identity},
                                 {"expansion_agrees", first->result.expansion_agrees}};
    out << report.dump() << '\n';
  } else {
    banner(cfg, out);
    out << "checked " << outcomes.size() << " pairs (|alpha|,|beta| <= " << max_size
        << ", length <= " << max_length << "): " << passed << " passed, " << failed
        << " failed\n";
    if (first)
      out << "first counterexample: alpha=" << first->alpha << " beta=" << first->beta
          << " product_identity=" << (first->result.product_identity ? "ok" : "FAIL")
          << " expansion=" << (first->result.expansion_agrees ? "ok" : "FAIL") << '\n';
  }
  return failed == 0 ? kExitOk : kExitVerificationFailed;
}

int cmd_tableaux(unsigned c, unsigned a, unsigned b, const CliConfig& cfg, std::ostream& out) {
  const auto tableaux = enumerate_tableaux(c, a, b);
  if (cfg.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& s : tableaux) {
      Json j = to_json(s);
      j["weight"] = to_json(weight(s, cfg.convention));
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
    return kExitOk;
  }
  banner(cfg, out);
  out << "# shape " << c << '/' << a << ", content " << b << ": " << tableaux.size()
      << " tableaux\n";
  for (const auto& s : tableaux) out << s << " weight=" << weight(s, cfg.convention) << '\n';
  return kExitOk;
}

int cmd_shuffles(const Composition& alpha, const Composition& beta, const CliConfig& cfg,
                 std::ostream& out) {
  const auto shuffles = overlapping_shuffles(alpha, beta);
  if (cfg.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& [gamma, mult] : shuffles)
      arr.push_back({{"gamma", to_json(gamma)}, {"multiplicity", mult}});
    out << arr.dump() << '\n';
    return kExitOk;
  }
  out << "# overlapping shuffles of " << alpha << " and " << beta << '\n';
  for (const auto& [gamma, mult] : shuffles) out << "gamma=" << gamma << " multiplicity=" << mult << '\n';
  return kExitOk;
}

std::vector<RelationCandidate> qsym2_relation_candidates() {
  const TruncationContext ctx{2, 0};
  const Polynomial x = Polynomial::x(1);
  const Polynomial t = qsym_generator({x, x}, ctx);
  const Polynomial z = qsym_generator({x}, ctx);
  const Polynomial w = qsym_generator({x * x, x}, ctx);
  const Assignment ones{{x_var(1), Polynomial(1)}, {x_var(2), Polynomial(1)}};

  auto make = [&](std::string name, const Polynomial& lead) {
    const Polynomial middle = t * z * w;
    const Polynomial last = w * w;
    const Polynomial expanded = lead - middle + last;
    const int top = std::max({lead.max_x_degree(), middle.max_x_degree(), last.max_x_degree()});
    return RelationCandidate{std::move(name), expanded,
                             substitute(expanded, ones).constant_term(),
                             static_cast<unsigned>(top)};
  };
  return {make("z^3 - t*z*w + w^2", z * z * z), make("t^3 - t*z*w + w^2", t * t * t)};
}

int cmd_relation_check(const CliConfig& cfg, std::ostream& out) {
  const auto candidates = qsym2_relation_candidates();
  if (cfg.format == OutputFormat::json) {
    Json arr = Json::array();
    for (const auto& c : candidates)
      arr.push_back({{"relation", c.name},
                     {"expanded", to_json(c.expanded)},
                     {"vanishes", c.vanishes()},
                     {"value_at_ones", c.value_at_ones.str()},
                     {"top_degree", c.top_degree}});
    out << arr.dump() << '\n';
    return kExitOk;
  }
  out << "# t = x1*x2, z = x1 + x2, w = x1^2*x2\n";
  for (const auto& c : candidates) {
    out << c.name << ": ";
    if (c.vanishes())
      out << "vanishes identically";
    else
      out << "does not vanish (= " << c.expanded << "), value " << c.value_at_ones
          << " at x1 = x2 = 1";
    out << "; top degree " << c.top_degree << '\n';
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double monomial quasisymmetric functions: products, structure coefficients, "
               "tableaux and oracle checks"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string convention = to_string(kDefaultConvention);
  std::string format = "human";
  bool paper_literal = false;
  app.add_option("--convention", convention, "Weight sign convention")
      ->check(CLI::IsMember({"paper-literal", "oracle-consistent"}));
  app.add_flag("--paper-literal", paper_literal, "Shorthand for --convention paper-literal");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--explicit-zeros", cfg.explicit_zeros, "Also list zero coefficients");

  std::string alpha_text, beta_text, gamma_text;
  unsigned max_size = 4, max_length = 3;
  std::optional<unsigned> size_pos, length_pos;
  unsigned c = 0, a = 0, b = 0;

  auto* product = app.add_subcommand("product", "Expand M_alpha * M_beta");
  product->add_option("alpha", alpha_text, "Composition, e.g. 3,2 (empty string for ())")->required();
  product->add_option("beta", beta_text, "Composition")->required();

  auto* coefficient = app.add_subcommand("coefficient", "Structure coefficient c^gamma_{alpha,beta}");
  coefficient->add_option("alpha", alpha_text)->required();
  coefficient->add_option("beta", beta_text)->required();
  coefficient->add_option("gamma", gamma_text)->required();

  auto* table = app.add_subcommand("table", "All coefficients in a size range (JSON lines with --format json)");
  table->add_option("--max-size", max_size, "Bound on |alpha|, |beta|");
  table->add_option("--max-length", max_length, "Bound on l(alpha), l(beta)");

  auto* verify = app.add_subcommand("verify", "Check the rule against polynomial arithmetic");
  verify->add_option("max_size", size_pos, "Bound on |alpha|, |beta|");
  verify->add_option("max_length", length_pos, "Bound on l(alpha), l(beta)");
  verify->add_option("--max-size", max_size, "Bound on |alpha|, |beta|");
  verify->add_option("--max-length", max_length, "Bound on l(alpha), l(beta)");
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* tableaux = app.add_subcommand("tableaux", "List skew edge-labeled tableaux of shape c/a, content b");
  tableaux->add_option("c", c)->required();
  tableaux->add_option("a", a)->required();
  tableaux->add_option("b", b)->required();

  auto* shuffles = app.add_subcommand("shuffles", "Overlapping shuffles with multiplicities");
  shuffles->add_option("alpha", alpha_text)->required();
  shuffles->add_option("beta", beta_text)->required();

  auto* relation = app.add_subcommand("relation", "Check the relation among generators of QSym_2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  cfg.convention = paper_literal ? WeightConvention::paper_literal : parse_convention(convention);
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::human;

  try {
    auto parse = [](const std::string& text, const char* what) {
      try {
        return parse_composition(text);
      } catch (const ParseError& e) {
        throw ParseError(std::string(what) + ": " + e.detail(), e.position());
      }
    };
    if (product->parsed())
      return cmd_product(parse(alpha_text, "alpha"), parse(beta_text, "beta"), cfg, out);
    if (coefficient->parsed())
      return cmd_coefficient(parse(alpha_text, "alpha"), parse(beta_text, "beta"),
                             parse(gamma_text, "gamma"), cfg, out);
    if (table->parsed()) return cmd_table(max_size, max_length, cfg, out);
    if (verify->parsed())
      return cmd_verify(size_pos.value_or(max_size), length_pos.value_or(max_length), cfg, out);
    if (tableaux->parsed()) {
      if (a > c) {
        err << "error: tableaux needs a <= c\n";
        return kExitUsage;
      }
      return cmd_tableaux(c, a, b, cfg, out);
    }
    if (shuffles->parsed())
      return cmd_shuffles(parse(alpha_text, "alpha"), parse(beta_text, "beta"), cfg, out);
    if (relation->parsed()) return cmd_relation_check(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dqsym::cli
