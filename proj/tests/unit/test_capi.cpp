#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <thread>
#include <vector>

#include "esdg/esdg.h"

namespace {

struct ConfigHandle {
  esdg_config* p = nullptr;
  ~ConfigHandle() { esdg_config_free(p); }
};

TEST(CApi, NullArgumentsReportErrors) {
  EXPECT_EQ(esdg_config_new("run", nullptr), ESDG_ERR_ARGUMENT);
  EXPECT_NE(std::string(esdg_last_error()), "");
  EXPECT_EQ(esdg_config_load_string(nullptr, "{}"), ESDG_ERR_ARGUMENT);
  esdg_report* rep = nullptr;
  EXPECT_EQ(esdg_run(nullptr, &rep), ESDG_ERR_ARGUMENT);
  EXPECT_EQ(rep, nullptr);
  EXPECT_EQ(esdg_report_passed(nullptr), 0);
  EXPECT_STREQ(esdg_report_summary(nullptr), "");
  EXPECT_EQ(esdg_solver_size(nullptr), 0u);
  esdg_config_free(nullptr);
  esdg_report_free(nullptr);
  esdg_solver_free(nullptr);
  EXPECT_STREQ(esdg_status_name(ESDG_ERR_CONFIG), "configuration error");
  EXPECT_NE(std::string(esdg_build_id()), "");
}

TEST(CApi, ConfigErrorsMapToStatusCodes) {
  ConfigHandle c;
  EXPECT_EQ(esdg_config_new("cylinder", &c.p), ESDG_ERR_CONFIG);
  EXPECT_EQ(c.p, nullptr);
  ASSERT_EQ(esdg_config_new("run", &c.p), ESDG_OK);
  EXPECT_STREQ(esdg_last_error(), "");
  EXPECT_EQ(esdg_config_load_string(c.p, R"({"gas": {"Mach": 0.1}})"), ESDG_ERR_CONFIG);
  EXPECT_NE(std::string(esdg_last_error()).find("gas.Mach"), std::string::npos);
  EXPECT_EQ(esdg_config_set_p(c.p, 0), ESDG_ERR_DEGREE);
  EXPECT_EQ(esdg_config_set_p(c.p, 99), ESDG_ERR_DEGREE);
  EXPECT_EQ(esdg_config_set_model(c.p, "navier"), ESDG_ERR_CONFIG);
  EXPECT_EQ(esdg_config_set_beta0(c.p, -1.0), ESDG_ERR_CONFIG);
  const int bad[] = {4, 0};
  EXPECT_EQ(esdg_config_set_elements(c.p, bad, 2), ESDG_ERR_CONFIG);
  EXPECT_EQ(esdg_config_load_file(c.p, "/nonexistent/cfg.json"), ESDG_ERR_CONFIG);
}

TEST(CApi, LastErrorIsThreadLocal) {
  ConfigHandle c;
  ASSERT_EQ(esdg_config_new("run", &c.p), ESDG_OK);
  ASSERT_EQ(esdg_config_load_string(c.p, R"({"bogus": 1})"), ESDG_ERR_CONFIG);
  const std::string mine = esdg_last_error();
  std::string other = "unset";
  std::thread([&] { other = esdg_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_EQ(std::string(esdg_last_error()), mine);
}

TEST(CApi, JsonBufferSizing) {
  ConfigHandle c;
  ASSERT_EQ(esdg_config_new("entropy-audit", &c.p), ESDG_OK);
  ASSERT_EQ(esdg_config_set_p(c.p, 3), ESDG_OK);
  size_t needed = 0;
  ASSERT_EQ(esdg_config_to_json(c.p, nullptr, 0, &needed), ESDG_OK);
  ASSERT_GT(needed, 10u);
  std::vector<char> small(needed - 1);
  EXPECT_EQ(esdg_config_to_json(c.p, small.data(), small.size(), nullptr), ESDG_ERR_ARGUMENT);
  std::vector<char> buf(needed);
  ASSERT_EQ(esdg_config_to_json(c.p, buf.data(), buf.size(), nullptr), ESDG_OK);
  EXPECT_EQ(buf.back(), '\0');
  const std::string js(buf.data());
  EXPECT_NE(js.find("\"p\": 3"), std::string::npos);

  // The emitted JSON loads back into a fresh handle unchanged.
  ConfigHandle d;
  ASSERT_EQ(esdg_config_new("entropy-audit", &d.p), ESDG_OK);
  ASSERT_EQ(esdg_config_load_string(d.p, js.c_str()), ESDG_OK);
  std::vector<char> again(needed);
  ASSERT_EQ(esdg_config_to_json(d.p, again.data(), again.size(), nullptr), ESDG_OK);
  EXPECT_EQ(js, std::string(again.data()));
}

TEST(CApi, ElementsOverrideShape) {
  ConfigHandle c;
  ASSERT_EQ(esdg_config_new("blast", &c.p), ESDG_OK);
  const int seq[] = {8, 16, 32};
  ASSERT_EQ(esdg_config_set_elements(c.p, seq, 3), ESDG_OK);
  std::vector<char> buf(1 << 16);
  ASSERT_EQ(esdg_config_to_json(c.p, buf.data(), buf.size(), nullptr), ESDG_OK);
  EXPECT_NE(std::string(buf.data()).find("8,"), std::string::npos);

  ConfigHandle r;
  ASSERT_EQ(esdg_config_new("run", &r.p), ESDG_OK);
  ASSERT_EQ(esdg_config_load_string(r.p, R"({"ndim": 2})"), ESDG_OK);
  EXPECT_EQ(esdg_config_set_elements(r.p, seq, 3), ESDG_ERR_CONFIG);
  EXPECT_EQ(esdg_config_set_elements(r.p, seq, 2), ESDG_OK);
}

TEST(CApi, SolverRhsAndBudget) {
  ConfigHandle c;
  ASSERT_EQ(esdg_config_new("entropy-audit", &c.p), ESDG_OK);
  ASSERT_EQ(esdg_config_set_p(c.p, 2), ESDG_OK);
  const int ne[] = {3};
  ASSERT_EQ(esdg_config_set_elements(c.p, ne, 1), ESDG_OK);
  ASSERT_EQ(esdg_config_load_string(c.p, R"({"initial": {"kind": "random", "amplitude": 0.05}})"), ESDG_OK);
  esdg_solver* s = nullptr;
  ASSERT_EQ(esdg_solver_new(c.p, &s), ESDG_OK) << esdg_last_error();
  const size_t n = esdg_solver_size(s);
  EXPECT_EQ(n, 9u * 9u * 4u);
  std::vector<double> q(n), dq(n);
  EXPECT_EQ(esdg_solver_initial_state(s, q.data(), n - 1), ESDG_ERR_SHAPE);
  ASSERT_EQ(esdg_solver_initial_state(s, q.data(), n), ESDG_OK);
  ASSERT_EQ(esdg_solver_rhs(s, q.data(), n, 0.0, dq.data()), ESDG_OK);
  double norm = 0.0;
  for (double v : dq) norm = std::max(norm, std::abs(v));
  EXPECT_GT(norm, 0.0);
  esdg_budget b{};
  ASSERT_EQ(esdg_solver_budget(s, q.data(), n, 0.0, &b), ESDG_OK);
  EXPECT_LE(std::abs(b.residual), 1e-11 * std::max(1.0, std::abs(b.DT)));
  EXPECT_GE(b.DT, 0.0);
  EXPECT_EQ(esdg_solver_rhs(s, q.data(), n - 4, 0.0, dq.data()), ESDG_ERR_SHAPE);
  q[0] = -1.0;
  EXPECT_EQ(esdg_solver_rhs(s, q.data(), n, 0.0, dq.data()), ESDG_ERR_NONPHYSICAL);
  esdg_solver_free(s);
}

TEST(CApi, RunSelftest) {
  ConfigHandle c;
  ASSERT_EQ(esdg_config_new("selftest", &c.p), ESDG_OK);
  esdg_report* rep = nullptr;
  ASSERT_EQ(esdg_run(c.p, &rep), ESDG_OK) << esdg_last_error();
  EXPECT_EQ(esdg_report_passed(rep), 1);
  EXPECT_GT(esdg_report_line_count(rep), 0u);
  EXPECT_STREQ(esdg_report_line(rep, 100000), "");
  EXPECT_EQ(esdg_report_file_count(rep), 0u);
  esdg_report_free(rep);
}

}  // namespace
