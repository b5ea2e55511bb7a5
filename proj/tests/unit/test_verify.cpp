#include "btg/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <stdexcept>

using namespace btg;

TEST(Verify, SuitesListed) {
  const auto& s = verify_suites();
  EXPECT_EQ(s.size(), 7u);
  EXPECT_THROW(run_verify("nope"), std::invalid_argument);
}

TEST(Verify, PassingSuites) {
  for (const char* s : {"zariski", "simplicial", "gauss", "partition"}) {
    VerifyReport r = run_verify(s);
    EXPECT_FALSE(r.checks.empty()) << s;
    EXPECT_TRUE(r.passed()) << s;
    for (const auto& c : r.checks) EXPECT_EQ(c.suite, s);
  }
}

TEST(Verify, Table1SuiteReportsMismatches) {
  VerifyReport r = run_verify("table1");
  EXPECT_FALSE(r.passed());
  EXPECT_GT(r.failures(), 0u);
}

TEST(Verify, JsonShape) {
  VerifyReport r = run_verify("partition");
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_TRUE(j.at("passed").get<bool>());
  ASSERT_FALSE(j.at("checks").empty());
  for (const char* k : {"suite", "name", "passed", "witness"}) EXPECT_TRUE(j["checks"][0].contains(k)) << k;
}
