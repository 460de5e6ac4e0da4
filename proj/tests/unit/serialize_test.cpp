#include <gtest/gtest.h>

#include <sstream>

#include "bfrg/error.hpp"
#include "bfrg/families.hpp"
#include "bfrg/flow.hpp"
#include "bfrg/serialize.hpp"

using namespace bfrg;

namespace {

void expect_same(const FlowTrace& a, const FlowTrace& b) {
  ASSERT_EQ(a.start_arity, b.start_arity);
  ASSERT_EQ(a.symmetric, b.symmetric);
  ASSERT_EQ(a.steps.size(), b.steps.size());
  for (std::size_t i = 0; i < a.steps.size(); ++i) {
    EXPECT_EQ(a.steps[i].step, b.steps[i].step);
    EXPECT_EQ(a.steps[i].remaining_arity, b.steps[i].remaining_arity);
    EXPECT_EQ(a.steps[i].decimated_var, b.steps[i].decimated_var);
    EXPECT_EQ(a.steps[i].exact, b.steps[i].exact);
    EXPECT_EQ(a.steps[i].density, b.steps[i].density);
  }
}

}  // namespace

TEST(TraceCsv, HeaderAndRows) {
  const auto trace = empirical_flow(parity(4), DecimationOrder(4, {2, 1}));
  std::ostringstream out;
  write_trace_csv(out, trace);
  EXPECT_EQ(out.str(),
            "step,remaining_arity,decimated_var,density_num,density_den\n"
            "0,4,,8,16\n"
            "1,3,2,8,8\n"
            "2,2,1,0,4\n");
}

TEST(TraceCsv, RoundTripTable) {
  const auto trace = empirical_flow(random_table(12, 0.3, 5), DecimationOrder(12, {4, 7, 1, 12}));
  std::stringstream ss;
  write_trace_csv(ss, trace, 0.3);
  expect_same(read_trace_csv(ss), trace);
}

TEST(TraceCsv, RoundTripSymmetric) {
  const auto flow = sym_flow(SymmetricFunction::majority(777), 9);
  std::stringstream ss;
  write_trace_csv(ss, flow.trace);
  EXPECT_NE(ss.str().find("density_real"), std::string::npos);
  EXPECT_NE(ss.str().find("SYMMETRIC"), std::string::npos);
  expect_same(read_trace_csv(ss), flow.trace);
}

TEST(TraceCsv, ConcatenatedBlocks) {
  const auto a = empirical_flow(parity(5), DecimationOrder(5, {1, 2}));
  const auto b = empirical_flow(majority(5), DecimationOrder(5, {3}));
  std::stringstream ss;
  write_trace_csv(ss, a);
  ss << '\n';
  write_trace_csv(ss, b);
  expect_same(read_trace_csv(ss), a);
  expect_same(read_trace_csv(ss), b);
}

TEST(TraceCsv, Malformed) {
  std::stringstream bad_header("a,b,c\n");
  EXPECT_THROW(read_trace_csv(bad_header), InvalidArgument);
  std::stringstream bad_den("step,remaining_arity,decimated_var,density_num,density_den\n0,2,,1,3\n");
  EXPECT_THROW(read_trace_csv(bad_den), InvalidArgument);
  std::stringstream short_row("step,remaining_arity,decimated_var,density_num,density_den\n0,2\n");
  EXPECT_THROW(read_trace_csv(short_row), InvalidArgument);
}

TEST(TraceJson, RoundTrip) {
  const auto trace = empirical_flow(random_table(10, 0.5, 8), DecimationOrder(10, {10, 9, 8}));
  expect_same(trace_from_json(trace_to_json(trace)), trace);
  const auto sym = sym_flow(SymmetricFunction::mod_p(500, 3), 12, 3).trace;
  expect_same(trace_from_json(trace_to_json(sym)), sym);
}

TEST(ReportJson, RoundTripClassification) {
  for (const auto& t : {random_table(14, 0.5, 2), parity(10)}) {
    ClassifyConfig c;
    c.sampling.seed = 0xFFFFFFFFFFFFFFF1ULL;
    const auto r = classify(t, c);
    const auto back = report_from_json(report_to_json(r));
    EXPECT_EQ(back.label, r.label);
    EXPECT_EQ(back.xi, r.xi);
    EXPECT_EQ(back.thresholds, r.thresholds);
    EXPECT_EQ(back.annihilation_depth, r.annihilation_depth);
    EXPECT_EQ(back.seed, r.seed);
    EXPECT_EQ(back.reason, r.reason);
    ASSERT_EQ(back.traces.size(), r.traces.size());
    for (std::size_t i = 0; i < r.traces.size(); ++i) expect_same(back.traces[i], r.traces[i]);
    EXPECT_EQ(report_to_json(back), report_to_json(r));
  }
}

TEST(ReportJson, RoundTripWithDetector) {
  const auto p = planted_near_polynomial(14, 1, 1.0 / 1024, 8);
  const auto r = classify(p.table);
  ASSERT_TRUE(r.detector.has_value());
  EXPECT_EQ(report_to_json(report_from_json(report_to_json(r))), report_to_json(r));
}

TEST(ReportJson, RequiredFields) {
  const auto j = report_to_json(classify(parity(8)));
  for (const char* key : {"\"label\"", "\"xi\"", "\"thresholds\"", "\"traces\""}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
  EXPECT_NE(j.find("ANNIHILATED(1)"), std::string::npos);
}

TEST(DecompositionJson, RoundTrip) {
  const auto p = planted_with_flips(6, 2, 1, 3);
  const auto ex = exhaustive_nearest_polynomial(p.table, 2);
  const auto back = decomposition_from_json(decomposition_to_json(ex));
  EXPECT_EQ(back.witness, ex.witness);
  EXPECT_EQ(back.remainder_density, ex.remainder_density);
  EXPECT_EQ(back.method, ex.method);
  EXPECT_EQ(back.meets_bound, ex.meets_bound);
  EXPECT_EQ(decomposition_to_json(back), decomposition_to_json(ex));

  const auto sv = derivative_sieve(random_table(12, 0.5, 4), 2);
  const auto back2 = decomposition_from_json(decomposition_to_json(sv));
  EXPECT_EQ(back2.sieve_density, sv.sieve_density);
  EXPECT_EQ(back2.orders_checked, sv.orders_checked);
  EXPECT_FALSE(back2.witness.has_value());
}

TEST(DecompositionJson, RequiredFields) {
  const auto j = decomposition_to_json(anf_truncation(parity(6), 2));
  for (const char* key : {"xi", "method", "witness_monomials", "remainder_num", "remainder_den", "\"C\"",
                          "alpha", "meets_bound"}) {
    EXPECT_NE(j.find(key), std::string::npos) << key;
  }
}

TEST(SymmetricFlowJson, CarriesCycle) {
  const auto j = symmetric_flow_to_json(sym_flow(SymmetricFunction::mod_p(1000, 3), 30, 3));
  EXPECT_NE(j.find("\"cycle\":{"), std::string::npos);
  EXPECT_NE(j.find("residue_patterns"), std::string::npos);
}

TEST(CountCsv, RoundTrip) {
  std::vector<CountRow> rows;
  for (unsigned n : {64u, 256u}) rows.push_back({n, 8, 1.0, 1.0, separation_margin(n, 8, 1.0, 1.0)});
  std::stringstream ss;
  write_count_csv(ss, rows);
  EXPECT_EQ(ss.str().substr(0, 31), "n,xi,C,alpha,log2F,log2M,margin");
  const auto back = read_count_csv(ss);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].n, rows[i].n);
    EXPECT_EQ(back[i].margin.log2F, rows[i].margin.log2F);
    EXPECT_EQ(back[i].margin.log2M, rows[i].margin.log2M);
    EXPECT_EQ(back[i].margin.margin, rows[i].margin.margin);
  }
}
