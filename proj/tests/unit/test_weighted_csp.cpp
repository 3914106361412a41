#include <gtest/gtest.h>

#include "helpers.hpp"
#include "w1/error.hpp"
#include "w1/weighted_csp.hpp"

using namespace w1;
using w1::testing::boolean_instance;
using w1::testing::support;

namespace {

WeightedCspInstance xyz(const std::string& target) {
  return WeightedCspInstance(boolean_instance(R"("variables": ["x", "y", "z"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "1"]]}},
      "constraints": [{"relation": "R", "vars": ["x", "y"]}], "k": 2,
      "weights": {"x": "2", "y": "3", "z": "5"}, "target": ")" + target + "\""));
}

}  // namespace

TEST(Wcsp, Examples) {
  auto a = xyz("5");
  EXPECT_EQ(solve_wcsp(a).witness, std::optional(support(a.base(), "x=1,y=1")));
  EXPECT_EQ(oracle_wcsp(a), std::optional(support(a.base(), "x=1,y=1")));

  auto b = xyz("7");
  EXPECT_FALSE(solve_wcsp(b).witness);
  EXPECT_FALSE(oracle_wcsp(b));

  WeightedCspInstance c(boolean_instance(R"("variables": ["v1", "v2", "v3"], "relations": {}, "constraints": [],
      "k": 2, "weights": {"v1": "1", "v2": "2", "v3": "4"}, "target": "3")"));
  EXPECT_EQ(solve_wcsp(c).witness, std::optional(support(c.base(), "v1=1,v2=1")));
  EXPECT_EQ(oracle_wcsp(c), std::optional(support(c.base(), "v1=1,v2=1")));
}

TEST(Wcsp, TrivialCases) {
  WeightedCspInstance empty(boolean_instance(R"("variables": ["a"], "relations": {}, "constraints": [],
      "k": 0, "weights": {"a": "4"}, "target": "0")"));
  EXPECT_EQ(solve_wcsp(empty).witness, std::optional(Assignment()));
  EXPECT_EQ(oracle_wcsp(empty), std::optional(Assignment()));

  WeightedCspInstance big(boolean_instance(R"("variables": ["a"], "relations": {}, "constraints": [],
      "k": 2, "weights": {"a": "4"}, "target": "8")"));
  EXPECT_FALSE(solve_wcsp(big).witness);
  EXPECT_FALSE(oracle_wcsp(big));
}

TEST(Wcsp, WeightFailureDoesNoLookups) {
  auto a = xyz("5");
  auto tables = build_weighted_tables(a);
  auto fail = check_weighted_candidate(support(a.base(), "x=1,z=1"), a, tables);
  EXPECT_FALSE(fail.weight_ok);
  EXPECT_EQ(fail.stats, LookupStats{});
  auto pass = check_weighted_candidate(support(a.base(), "x=1,y=1"), a, tables);
  EXPECT_TRUE(pass.weight_ok);
  EXPECT_TRUE(pass.accepted);
  EXPECT_GT(pass.stats.d_lookups, 0u);
}

TEST(Wcsp, WeightBaseIsVariableCount) {
  auto a = xyz("5");
  EXPECT_EQ(build_weighted_tables(a).weights.base, 3u);
}

TEST(Wcsp, RequiresBooleanDomainWeightsAndTarget) {
  EXPECT_THROW(WeightedCspInstance(boolean_instance(R"("variables": ["a"], "relations": {}, "constraints": [],
      "k": 1, "target": "1")")),
               UsageError);
  EXPECT_THROW(WeightedCspInstance(boolean_instance(R"("variables": ["a", "b"], "relations": {}, "constraints": [],
      "k": 1, "weights": {"a": "1"}, "target": "1")")),
               UsageError);
  EXPECT_THROW(WeightedCspInstance(parse_instance(R"({"domain": ["0", "1", "2"], "free_value": "0",
      "variables": ["a"], "relations": {}, "constraints": [], "k": 1, "weights": {"a": "1"}, "target": "1"})")),
               UsageError);
}
