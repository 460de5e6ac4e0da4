#include "bfrg/serialize.hpp"

#include <bit>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bfrg/error.hpp"

namespace bfrg {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_long_double(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

Density density_from(std::uint64_t num, std::uint64_t den) {
  if (den == 0 || !std::has_single_bit(den)) throw InvalidArgument("density denominator must be a power of two");
  return Density{num, static_cast<unsigned>(std::countr_zero(den))};
}

json trace_json(const FlowTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json row{{"step", s.step}, {"remaining_arity", s.remaining_arity}};
    row["decimated_var"] = s.decimated_var ? json(*s.decimated_var) : json(nullptr);
    if (s.exact) {
      row["density_num"] = s.exact->numerator();
      row["density_den"] = s.exact->denominator();
    } else {
      row["density_real"] = s.density;
    }
    steps.push_back(std::move(row));
  }
  return json{{"start_arity", trace.start_arity}, {"symmetric", trace.symmetric}, {"steps", steps}};
}

FlowTrace trace_parse(const json& j) {
  FlowTrace trace;
  trace.start_arity = j.at("start_arity").get<unsigned>();
  trace.symmetric = j.at("symmetric").get<bool>();
  for (const auto& row : j.at("steps")) {
    FlowStep s;
    s.step = row.at("step").get<unsigned>();
    s.remaining_arity = row.at("remaining_arity").get<unsigned>();
    if (!row.at("decimated_var").is_null()) s.decimated_var = row.at("decimated_var").get<unsigned>();
    if (row.contains("density_num")) {
      s.exact = density_from(row.at("density_num").get<std::uint64_t>(),
                             row.at("density_den").get<std::uint64_t>());
      s.density = s.exact->value();
    } else {
      s.density = row.at("density_real").get<double>();
    }
    trace.steps.push_back(s);
  }
  return trace;
}

json decomposition_json(const DecompositionReport& r) {
  json j;
  j["xi"] = r.xi;
  j["arity"] = r.arity;
  j["method"] = method_name(r.method);
  j["witness_monomials"] = r.witness ? json(r.witness->label_sets()) : json(nullptr);
  j["remainder_num"] = r.remainder_density.numerator();
  j["remainder_den"] = r.remainder_density.denominator();
  j["C"] = r.bound.C;
  j["alpha"] = r.bound.alpha;
  j["bound"] = remainder_bound(r.arity, r.xi, r.bound);
  j["meets_bound"] = r.meets_bound;
  if (r.sieve_density) {
    j["sieve_num"] = r.sieve_density->numerator();
    j["sieve_den"] = r.sieve_density->denominator();
    j["orders_checked"] = r.orders_checked;
  }
  return j;
}

DecompositionReport decomposition_parse(const json& j) {
  DecompositionReport r;
  r.xi = j.at("xi").get<unsigned>();
  r.arity = j.at("arity").get<unsigned>();
  r.method = parse_method(j.at("method").get<std::string>());
  if (!j.at("witness_monomials").is_null()) {
    r.witness = Anf::from_label_sets(r.arity, j.at("witness_monomials").get<std::vector<std::vector<unsigned>>>());
  }
  r.remainder_density = density_from(j.at("remainder_num").get<std::uint64_t>(),
                                     j.at("remainder_den").get<std::uint64_t>());
  r.bound.C = j.at("C").get<double>();
  r.bound.alpha = j.at("alpha").get<double>();
  r.meets_bound = j.at("meets_bound").get<bool>();
  if (j.contains("sieve_num")) {
    r.sieve_density = density_from(j.at("sieve_num").get<std::uint64_t>(),
                                   j.at("sieve_den").get<std::uint64_t>());
    r.orders_checked = j.at("orders_checked").get<std::size_t>();
  }
  return r;
}

PhaseLabel parse_phase(const std::string& name) {
  for (auto label : {PhaseLabel::kGeneric, PhaseLabel::kAnnihilated, PhaseLabel::kCompositeSuspect,
                     PhaseLabel::kNearPolynomial, PhaseLabel::kUnclassified}) {
    if (name == phase_name(label)) return label;
  }
  throw InvalidArgument("unknown phase label: " + name);
}

}  // namespace

void write_trace_csv(std::ostream& out, const FlowTrace& trace, std::optional<double> analytic_p0) {
  out << "step,remaining_arity,decimated_var,";
  out << (trace.symmetric ? "density_real" : "density_num,density_den");
  if (analytic_p0) out << ",analytic_density";
  out << '\n';
  for (const auto& s : trace.steps) {
    out << s.step << ',' << s.remaining_arity << ',';
    if (s.decimated_var) {
      out << *s.decimated_var;
    } else if (trace.symmetric && s.step > 0) {
      out << "SYMMETRIC";
    }
    out << ',';
    if (trace.symmetric) {
      out << format_double(s.density);
    } else {
      out << s.exact->numerator() << ',' << s.exact->denominator();
    }
    if (analytic_p0) out << ',' << format_double(analytic_density(*analytic_p0, s.step));
    out << '\n';
  }
}

FlowTrace read_trace_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidArgument("empty trace CSV");
  const auto header = split(strip_cr(line), ',');
  if (header.size() < 4 || header[0] != "step" || header[1] != "remaining_arity" ||
      header[2] != "decimated_var") {
    throw InvalidArgument("unrecognized trace CSV header");
  }
  FlowTrace trace;
  trace.symmetric = header[3] == "density_real";
  if (!trace.symmetric && (header[3] != "density_num" || header.size() < 5 || header[4] != "density_den")) {
    throw InvalidArgument("unrecognized trace CSV header");
  }
  bool first = true;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) {
      if (!trace.steps.empty()) break;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() < header.size()) throw InvalidArgument("short trace CSV row: " + line);
    FlowStep s;
    s.step = static_cast<unsigned>(std::stoul(f[0]));
    s.remaining_arity = static_cast<unsigned>(std::stoul(f[1]));
    if (!f[2].empty() && f[2] != "SYMMETRIC") s.decimated_var = static_cast<unsigned>(std::stoul(f[2]));
    if (trace.symmetric) {
      s.density = std::stod(f[3]);
    } else {
      s.exact = density_from(std::stoull(f[3]), std::stoull(f[4]));
      s.density = s.exact->value();
    }
    if (first) {
      trace.start_arity = s.remaining_arity + s.step;
      first = false;
    }
    trace.steps.push_back(s);
  }
  return trace;
}

std::string trace_to_json(const FlowTrace& trace) { return trace_json(trace).dump(); }

FlowTrace trace_from_json(const std::string& text) { return trace_parse(json::parse(text)); }

std::string report_to_json(const ClassificationReport& r) {
  json j;
  j["label"] = r.label_string();
  j["xi"] = r.xi ? json(*r.xi) : json(nullptr);
  j["thresholds"] = r.thresholds;
  json traces = json::array();
  for (const auto& t : r.traces) traces.push_back(trace_json(t));
  j["traces"] = std::move(traces);
  if (r.remainder_density) {
    j["remainder_num"] = r.remainder_density->numerator();
    j["remainder_den"] = r.remainder_density->denominator();
  }
  j["detector"] = r.detector ? decomposition_json(*r.detector) : json(nullptr);
  j["annihilation_depth"] = r.annihilation_depth ? json(*r.annihilation_depth) : json(nullptr);
  j["orders_checked"] = r.orders_checked;
  j["orders_exhaustive"] = r.orders_exhaustive;
  j["seed"] = r.seed;
  j["reason"] = r.reason;
  return j.dump();
}

ClassificationReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  ClassificationReport r;
  std::string label = j.at("label").get<std::string>();
  if (const auto paren = label.find('('); paren != std::string::npos) label.resize(paren);
  r.label = parse_phase(label);
  if (!j.at("xi").is_null()) r.xi = j.at("xi").get<unsigned>();
  r.thresholds = j.at("thresholds").get<std::map<std::string, double>>();
  for (const auto& t : j.at("traces")) r.traces.push_back(trace_parse(t));
  if (j.contains("remainder_num")) {
    r.remainder_density = density_from(j.at("remainder_num").get<std::uint64_t>(),
                                       j.at("remainder_den").get<std::uint64_t>());
  }
  if (j.contains("detector") && !j.at("detector").is_null()) r.detector = decomposition_parse(j.at("detector"));
  if (j.contains("annihilation_depth") && !j.at("annihilation_depth").is_null()) {
    r.annihilation_depth = j.at("annihilation_depth").get<unsigned>();
  }
  r.orders_checked = j.value("orders_checked", std::size_t{0});
  r.orders_exhaustive = j.value("orders_exhaustive", false);
  r.seed = j.value("seed", std::uint64_t{0});
  r.reason = j.value("reason", std::string{});
  return r;
}

std::string decomposition_to_json(const DecompositionReport& report) {
  return decomposition_json(report).dump();
}

DecompositionReport decomposition_from_json(const std::string& text) {
  return decomposition_parse(json::parse(text));
}

std::string symmetric_flow_to_json(const SymmetricFlow& flow) {
  json j;
  j["trace"] = trace_json(flow.trace);
  j["modulus"] = flow.modulus ? json(*flow.modulus) : json(nullptr);
  json patterns = json::array();
  for (const auto& p : flow.patterns) {
    if (!p) {
      patterns.push_back(nullptr);
      continue;
    }
    std::vector<unsigned> residues;
    for (unsigned r = 0; r < p->size(); ++r) {
      if ((*p)[r]) residues.push_back(r);
    }
    patterns.push_back(residues);
  }
  j["residue_patterns"] = std::move(patterns);
  if (flow.cycle) {
    j["cycle"] = json{{"start", flow.cycle->start}, {"period", flow.cycle->period}};
  } else {
    j["cycle"] = nullptr;
  }
  return j.dump();
}

void write_count_csv(std::ostream& out, const std::vector<CountRow>& rows) {
  out << "n,xi,C,alpha,log2F,log2M,margin\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.xi << ',' << format_double(r.C) << ',' << format_double(r.alpha) << ','
        << format_long_double(r.margin.log2F) << ',' << format_long_double(r.margin.log2M) << ','
        << format_long_double(r.margin.margin) << '\n';
  }
}

std::vector<CountRow> read_count_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || strip_cr(line) != "n,xi,C,alpha,log2F,log2M,margin") {
    throw InvalidArgument("unrecognized count CSV header");
  }
  std::vector<CountRow> rows;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw InvalidArgument("bad count CSV row: " + line);
    CountRow r;
    r.n = static_cast<unsigned>(std::stoul(f[0]));
    r.xi = static_cast<unsigned>(std::stoul(f[1]));
    r.C = std::stod(f[2]);
    r.alpha = std::stod(f[3]);
    r.margin.log2F = std::stold(f[4]);
    r.margin.log2M = std::stold(f[5]);
    r.margin.margin = std::stold(f[6]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace bfrg
