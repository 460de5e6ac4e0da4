#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfrg/bfrg_io.hpp"
#include "bfrg/counting.hpp"
#include "bfrg/detector.hpp"
#include "bfrg/error.hpp"
#include "bfrg/families.hpp"
#include "bfrg/flow.hpp"
#include "bfrg/random.hpp"
#include "bfrg/rg.hpp"
#include "bfrg/serialize.hpp"
#include "bfrg/symmetric.hpp"

namespace bfrg::cli {

namespace {

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string out;
  bool json = false;
};

struct InputOptions {
  std::string family;
  std::string file;
  std::optional<unsigned> n;
  unsigned p = 3;
  double p0 = 0.5;
  unsigned xi = 1;
  double term_density = 0.5;
  double noise = 0.0;
  std::optional<std::uint64_t> flips;
  bool symmetric = false;
};

/// Exactly one of table / sym is set.
struct Input {
  std::optional<TruthTable> table;
  std::optional<SymmetricFunction> sym;
  std::optional<double> analytic_p0;
  std::optional<unsigned> modulus;
};

const std::vector<std::string> kFamilies = {"parity", "majority", "majority_geq", "mod_p",
                                            "random", "poly",     "planted"};

void add_input_options(CLI::App* app, InputOptions& in) {
  app->add_option("--family", in.family, "Function family")->check(CLI::IsMember(kFamilies));
  app->add_option("--file", in.file, "BFRG truth-table file");
  app->add_option("--n", in.n, "Arity");
  app->add_option("--p", in.p, "Odd prime modulus for mod_p");
  app->add_option("--p0", in.p0, "Output density of the random family");
  app->add_option("--xi", in.xi, "Degree bound for poly, planted, detect");
  app->add_option("--term-density", in.term_density, "Inclusion probability of each monomial");
  app->add_option("--noise", in.noise, "Bernoulli noise fraction for planted");
  app->add_option("--flips", in.flips, "Exact number of flipped outputs for planted");
  app->add_flag("--symmetric", in.symmetric, "Use the symmetric engine for symmetric families");
}

bool is_symmetric_family(const std::string& f) {
  return f == "parity" || f == "majority" || f == "majority_geq" || f == "mod_p";
}

SymmetricFunction symmetric_family(const std::string& family, unsigned n, unsigned p) {
  if (family == "parity") return SymmetricFunction::parity(n);
  if (family == "majority") return SymmetricFunction::majority(n);
  if (family == "majority_geq") return SymmetricFunction::majority_geq(n);
  return SymmetricFunction::mod_p(n, p);
}

TruthTable table_family(const InputOptions& o, unsigned n, std::uint64_t seed) {
  if (o.family == "parity") return parity(n);
  if (o.family == "majority") return majority(n);
  if (o.family == "majority_geq") return majority_geq(n);
  if (o.family == "mod_p") return mod_p(n, o.p);
  if (o.family == "random") return random_table(n, o.p0, seed);
  if (o.family == "poly") return anf_to_table(random_polynomial(n, o.xi, o.term_density, seed));
  if (o.flips) return planted_with_flips(n, o.xi, *o.flips, seed, o.term_density).table;
  return planted_near_polynomial(n, o.xi, o.noise, seed, o.term_density).table;
}

Input load_input(const InputOptions& o, std::uint64_t seed, bool allow_symmetric) {
  if (o.family.empty() == o.file.empty()) throw InvalidArgument("give exactly one of --family or --file");
  Input in;
  if (!o.file.empty()) {
    in.table = read_table(std::filesystem::path(o.file));
    return in;
  }
  if (!o.n) throw InvalidArgument("--family needs --n");
  const unsigned n = *o.n;
  if (o.family == "mod_p") in.modulus = o.p;
  if (is_symmetric_family(o.family) && (o.symmetric || n > TruthTable::kMaxArity)) {
    if (!allow_symmetric) {
      throw InvalidArgument("this command needs a truth table; arity " + std::to_string(n) +
                            " exceeds " + std::to_string(TruthTable::kMaxArity));
    }
    in.sym = symmetric_family(o.family, n, o.p);
    return in;
  }
  if (n > TruthTable::kMaxArity) {
    throw InvalidArgument("arity " + std::to_string(n) + " exceeds the table limit " +
                          std::to_string(TruthTable::kMaxArity));
  }
  if (o.family == "random") in.analytic_p0 = o.p0;
  in.table = table_family(o, n, seed);
  return in;
}

std::uint64_t resolve_seed(const GlobalOptions& g, std::ostream& err) {
  if (g.seed) return *g.seed;
  const std::uint64_t s = entropy_seed();
  err << "seed: " << s << '\n';
  return s;
}

void emit(const GlobalOptions& g, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (g.out.empty()) {
    write(out);
    out.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open " + g.out + " for writing");
  write(file);
  if (!file) throw InvalidArgument("write to " + g.out + " failed");
}

// ---- flow ----------------------------------------------------------------

struct FlowOptions {
  InputOptions input;
  std::optional<unsigned> steps;
  std::vector<unsigned> order;
  std::string policy = "fixed";
};

int cmd_flow(const FlowOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(g, err);
  const Input in = load_input(o.input, seed, true);

  if (in.sym) {
    const unsigned n = in.sym->arity();
    const unsigned steps = o.steps.value_or(std::min(n, 32u));
    const SymmetricFlow flow = sym_flow(*in.sym, steps, in.modulus);
    emit(g, out, [&](std::ostream& s) {
      if (g.json) {
        s << symmetric_flow_to_json(flow) << '\n';
      } else {
        write_trace_csv(s, flow.trace);
      }
    });
    return kOk;
  }

  const TruthTable& t = *in.table;
  const unsigned n = t.arity();
  if (!o.order.empty() && o.policy != "fixed") throw InvalidArgument("--order implies --order-policy fixed");
  if (o.steps && !o.order.empty() && *o.steps != o.order.size()) {
    throw InvalidArgument("--steps disagrees with the length of --order");
  }
  const unsigned steps = o.order.empty() ? o.steps.value_or(n) : static_cast<unsigned>(o.order.size());
  if (steps > n) throw InvalidArgument("more steps than variables");

  std::vector<DecimationOrder> orders;
  if (o.policy == "fixed") {
    std::vector<unsigned> vars = o.order;
    if (vars.empty()) {
      for (unsigned v = 1; v <= steps; ++v) vars.push_back(v);
    }
    orders.emplace_back(n, std::move(vars));
  } else if (o.policy == "random") {
    Rng rng(derive_seed(seed, 0));
    orders.emplace_back(n, rng.permutation_prefix(n, steps));
  } else {
    SamplingPolicy policy;
    policy.seed = seed;
    orders = sample_orders(n, steps, policy).orders;
  }

  std::vector<FlowTrace> traces;
  traces.reserve(orders.size());
  for (const auto& order : orders) traces.push_back(empirical_flow(t, order));

  emit(g, out, [&](std::ostream& s) {
    if (g.json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& tr : traces) arr.push_back(nlohmann::json::parse(trace_to_json(tr)));
      s << (traces.size() == 1 ? arr.front() : arr).dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (i > 0) s << '\n';
      write_trace_csv(s, traces[i], in.analytic_p0);
    }
  });
  return kOk;
}

// ---- classify ------------------------------------------------------------

struct ClassifyOptions {
  InputOptions input;
  ClassifyConfig config;
  std::optional<unsigned> annihilation_cap;
  unsigned exhaustive_max_arity = 8;
  std::size_t random_orders = 64;
};

int cmd_classify(const ClassifyOptions& o, const GlobalOptions& g, std::ostream& out,
                 std::ostream& err) {
  const std::uint64_t seed = resolve_seed(g, err);
  const Input in = load_input(o.input, seed, true);
  ClassifyConfig config = o.config;
  config.annihilation_cap = o.annihilation_cap;
  config.sampling.exhaustive_max_arity = o.exhaustive_max_arity;
  config.sampling.random_orders = o.random_orders;
  config.sampling.seed = derive_seed(seed, 1);
  ClassificationReport report = in.sym ? classify(*in.sym, config) : classify(*in.table, config);
  report.seed = seed;
  emit(g, out, [&](std::ostream& s) { s << report_to_json(report) << '\n'; });
  return kOk;
}

// ---- detect --------------------------------------------------------------

struct DetectOptions {
  InputOptions input;
  std::string method = "exhaustive";
  BoundParams bound;
  unsigned threads = 0;
  unsigned exhaustive_max_arity = 8;
  std::size_t random_orders = 64;
};

int cmd_detect(const DetectOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(g, err);
  const Input in = load_input(o.input, seed, false);
  const TruthTable& t = *in.table;
  const unsigned xi = o.input.xi;
  DecompositionReport report;
  switch (parse_method(o.method)) {
    case DecompositionMethod::kExhaustive:
      report = exhaustive_nearest_polynomial(t, xi, o.bound, o.threads);
      break;
    case DecompositionMethod::kAnfTruncation:
      report = anf_truncation(t, xi, o.bound);
      break;
    case DecompositionMethod::kDerivativeSieve: {
      SamplingPolicy policy;
      policy.exhaustive_max_arity = o.exhaustive_max_arity;
      policy.random_orders = o.random_orders;
      policy.seed = derive_seed(seed, 2);
      report = derivative_sieve(t, xi, policy, o.bound);
      break;
    }
  }
  emit(g, out, [&](std::ostream& s) { s << decomposition_to_json(report) << '\n'; });
  return report.meets_bound ? kOk : kBoundNotMet;
}

// ---- count ---------------------------------------------------------------

struct CountOptions {
  std::vector<unsigned> n;
  std::vector<unsigned> xi;
  bool xi_sqrt = false;
  double C = 1.0;
  double alpha = 1.0;
  std::vector<unsigned> adjust;
};

int cmd_count(const CountOptions& o, const GlobalOptions& g, std::ostream& out) {
  if (o.n.empty()) throw InvalidArgument("count needs --n");
  if (!o.adjust.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    emit(g, out, [&](std::ostream& s) {
      if (!g.json) s << "n,m,exponent,exceeds\n";
      for (unsigned n : o.n) {
        for (unsigned m : o.adjust) {
          const auto a = naive_adjustment_estimate(n, m);
          if (g.json) {
            arr.push_back({{"n", n}, {"m", m}, {"exponent", static_cast<double>(a.exponent)},
                           {"exceeds", a.exceeds}});
          } else {
            s << n << ',' << m << ',' << static_cast<double>(a.exponent) << ',' << (a.exceeds ? 1 : 0)
              << '\n';
          }
        }
      }
      if (g.json) s << arr.dump() << '\n';
    });
    return kOk;
  }
  if (o.xi.empty() == !o.xi_sqrt) throw InvalidArgument("give exactly one of --xi or --xi-sqrt");

  std::vector<CountRow> rows;
  for (unsigned n : o.n) {
    std::vector<unsigned> xis = o.xi;
    if (o.xi_sqrt) xis = {static_cast<unsigned>(std::ceil(std::sqrt(static_cast<double>(n))))};
    for (unsigned xi : xis) rows.push_back({n, xi, o.C, o.alpha, separation_margin(n, xi, o.C, o.alpha)});
  }
  emit(g, out, [&](std::ostream& s) {
    if (!g.json) {
      write_count_csv(s, rows);
      return;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      const auto pc = log2_perturbation_count(r.n, r.xi, r.C, r.alpha);
      nlohmann::json row{{"n", r.n},
                         {"xi", r.xi},
                         {"C", r.C},
                         {"alpha", r.alpha},
                         {"log2F", static_cast<double>(r.margin.log2F)},
                         {"log2M", static_cast<double>(r.margin.log2M)},
                         {"margin", static_cast<double>(r.margin.margin)},
                         {"phi", static_cast<double>(pc.phi)}};
      row["log2F_exact"] = pc.exact ? nlohmann::json(static_cast<double>(*pc.exact)) : nlohmann::json(nullptr);
      arr.push_back(std::move(row));
    }
    s << arr.dump() << '\n';
  });
  return kOk;
}

// ---- gen -----------------------------------------------------------------

int cmd_gen(const InputOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = resolve_seed(g, err);
  const Input in = load_input(o, seed, false);
  emit(g, out, [&](std::ostream& s) { write_table(*in.table, s); });
  return kOk;
}

// ---- sym-flow ------------------------------------------------------------

struct SymFlowOptions {
  std::string family;
  unsigned n = 0;
  unsigned p = 3;
  std::optional<unsigned> steps;
  std::optional<unsigned> modulus;
};

int cmd_sym_flow(const SymFlowOptions& o, const GlobalOptions& g, std::ostream& out) {
  const SymmetricFunction f = symmetric_family(o.family, o.n, o.p);
  std::optional<unsigned> modulus = o.modulus;
  if (!modulus && o.family == "mod_p") modulus = o.p;
  const SymmetricFlow flow = sym_flow(f, o.steps.value_or(std::min(o.n, 32u)), modulus);
  emit(g, out, [&](std::ostream& s) {
    if (g.json) {
      s << symmetric_flow_to_json(flow) << '\n';
    } else {
      write_trace_csv(s, flow.trace);
    }
  });
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Renormalization-group flows of Boolean functions", "bfrg"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--seed", global.seed, "RNG seed; drawn from entropy and printed when omitted");
  app.add_option("--out", global.out, "Write output to this file instead of standard output");
  app.add_flag("--json", global.json, "JSON instead of CSV where both exist");

  FlowOptions flow;
  auto* flow_cmd = app.add_subcommand("flow", "Density trace under repeated decimation");
  add_input_options(flow_cmd, flow.input);
  flow_cmd->add_option("--steps", flow.steps, "Number of decimations");
  flow_cmd->add_option("--order", flow.order, "Comma-separated variables (1-based)")->delimiter(',');
  flow_cmd->add_option("--order-policy", flow.policy, "fixed | random | all-when-small")
      ->check(CLI::IsMember({"fixed", "random", "all-when-small"}));

  ClassifyOptions cls;
  auto* cls_cmd = app.add_subcommand("classify", "Phase label with a JSON report");
  add_input_options(cls_cmd, cls.input);
  cls_cmd->add_option("--burn-in", cls.config.burn_in);
  cls_cmd->add_option("--generic-multiplier", cls.config.generic_multiplier);
  cls_cmd->add_option("--tau-min", cls.config.tau_min);
  cls_cmd->add_option("--composite-c", cls.config.composite_c);
  cls_cmd->add_option("--min-configurations", cls.config.min_configurations);
  cls_cmd->add_option("--trace-orders", cls.config.trace_orders);
  cls_cmd->add_option("--annihilation-cap", cls.annihilation_cap);
  cls_cmd->add_option("--symmetric-steps", cls.config.symmetric_steps);
  cls_cmd->add_option("--near-poly-max-xi", cls.config.near_poly_max_xi);
  cls_cmd->add_option("--C", cls.config.bound.C);
  cls_cmd->add_option("--alpha", cls.config.bound.alpha);
  cls_cmd->add_option("--exhaustive-max-arity", cls.exhaustive_max_arity);
  cls_cmd->add_option("--orders", cls.random_orders, "Random orders sampled above the exhaustive arity");

  DetectOptions det;
  auto* det_cmd = app.add_subcommand("detect", "Polynomial-plus-sparse-remainder decomposition");
  add_input_options(det_cmd, det.input);
  det_cmd->add_option("--method", det.method, "exhaustive | truncate | sieve")
      ->check(CLI::IsMember({"exhaustive", "truncate", "sieve"}));
  det_cmd->add_option("--C", det.bound.C);
  det_cmd->add_option("--alpha", det.bound.alpha);
  det_cmd->add_option("--threads", det.threads, "Worker threads for exhaustive search (0 = all)");
  det_cmd->add_option("--exhaustive-max-arity", det.exhaustive_max_arity);
  det_cmd->add_option("--orders", det.random_orders);

  CountOptions cnt;
  auto* cnt_cmd = app.add_subcommand("count", "Near-polynomial counting bounds");
  cnt_cmd->add_option("--n", cnt.n, "Arities")->delimiter(',');
  cnt_cmd->add_option("--xi", cnt.xi, "Degrees")->delimiter(',');
  cnt_cmd->add_flag("--xi-sqrt", cnt.xi_sqrt, "Use xi = ceil(sqrt(n))");
  cnt_cmd->add_option("--C", cnt.C);
  cnt_cmd->add_option("--alpha", cnt.alpha);
  cnt_cmd->add_option("--adjust", cnt.adjust, "Naive adjustment estimate for these M")->delimiter(',');

  InputOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a family member as a BFRG file");
  add_input_options(gen_cmd, gen);

  SymFlowOptions sym;
  auto* sym_cmd = app.add_subcommand("sym-flow", "Symmetric-engine flow with residue cycles");
  sym_cmd->add_option("--family", sym.family)
      ->required()
      ->check(CLI::IsMember({"parity", "majority", "majority_geq", "mod_p"}));
  sym_cmd->add_option("--n", sym.n)->required();
  sym_cmd->add_option("--p", sym.p);
  sym_cmd->add_option("--steps", sym.steps);
  sym_cmd->add_option("--modulus", sym.modulus, "Track residue patterns modulo this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*flow_cmd) return cmd_flow(flow, global, out, err);
    if (*cls_cmd) return cmd_classify(cls, global, out, err);
    if (*det_cmd) return cmd_detect(det, global, out, err);
    if (*cnt_cmd) return cmd_count(cnt, global, out);
    if (*gen_cmd) {
      if (global.out.empty()) throw InvalidArgument("gen needs --out");
      return cmd_gen(gen, global, out, err);
    }
    if (*sym_cmd) return cmd_sym_flow(sym, global, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace bfrg::cli
