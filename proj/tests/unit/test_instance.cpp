#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "w1/error.hpp"
#include "w1/generator.hpp"

using namespace w1;
using w1::testing::boolean_instance;
using w1::testing::support;

namespace {

ParseError::Kind parse_kind(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST(Instance, MinimalDocument) {
  auto inst = boolean_instance(R"("variables": ["x"], "relations": {"R": {"arity": 1, "tuples": [["1"]]}},
                                  "constraints": [{"relation": "R", "vars": ["x"]}], "k": 1)");
  EXPECT_EQ(inst.constraints().size(), 1u);
  EXPECT_EQ(inst.k(), 1u);
  EXPECT_EQ(inst.nonzero_values(), std::vector<ValueId>{1});
}

TEST(Instance, UndeclaredVariableIsSchemaViolation) {
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": ["x"],
      "relations": {"R": {"arity": 1, "tuples": [["1"]]}},
      "constraints": [{"relation": "R", "vars": ["q"]}], "k": 1})"),
            ParseError::Kind::Schema);
}

TEST(Instance, TupleOutsideDomainIsInvariantViolation) {
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": ["x"],
      "relations": {"R": {"arity": 1, "tuples": [["2"]]}},
      "constraints": [{"relation": "R", "vars": ["x"]}], "k": 1})"),
            ParseError::Kind::Invariant);
}

TEST(Instance, SyntaxErrorReportsPosition) {
  try {
    parse_instance(R"({"domain": ["0", "1"],, })");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_TRUE(e.position().has_value());
  }
}

TEST(Instance, UnknownFieldRejected) {
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": [],
      "relations": {}, "constraints": [], "k": 0, "comment": "x"})"),
            ParseError::Kind::Schema);
}

TEST(Instance, OtherInvariants) {
  // free value outside the domain
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "z", "variables": [], "relations": {},
      "constraints": [], "k": 0})"),
            ParseError::Kind::Invariant);
  // arity mismatch in a constraint
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": ["x"],
      "relations": {"R": {"arity": 2, "tuples": [["1", "1"]]}},
      "constraints": [{"relation": "R", "vars": ["x"]}], "k": 0})"),
            ParseError::Kind::Invariant);
  // duplicate variable names
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": ["x", "x"], "relations": {},
      "constraints": [], "k": 0})"),
            ParseError::Kind::Invariant);
  // negative k
  EXPECT_EQ(parse_kind(R"({"domain": ["0", "1"], "free_value": "0", "variables": [], "relations": {},
      "constraints": [], "k": -1})"),
            ParseError::Kind::Invariant);
}

TEST(Instance, DuplicateTuplesWarnAndDedupe) {
  auto inst = boolean_instance(R"("variables": ["x"], "relations": {"R": {"arity": 1, "tuples": [["1"], ["1"]]}},
                                  "constraints": [{"relation": "R", "vars": ["x"]}], "k": 1)");
  EXPECT_EQ(inst.relations()[0].tuples().size(), 1u);
  EXPECT_EQ(inst.warnings().size(), 1u);
}

TEST(Satisfies, DirectTupleLookup) {
  auto inst = boolean_instance(R"("variables": ["x", "y"], "relations": {"R": {"arity": 2, "tuples": [["1", "0"]]}},
                                  "constraints": [{"relation": "R", "vars": ["x", "y"]}], "k": 1)");
  const auto& c = inst.constraints()[0];
  EXPECT_TRUE(satisfies(support(inst, "x=1"), c, inst));
  EXPECT_FALSE(satisfies(support(inst, "{}"), c, inst));
}

TEST(Satisfies, RepeatedVariableReadsSameValue) {
  auto inst = boolean_instance(R"("variables": ["x"], "relations": {"R": {"arity": 2, "tuples": [["1", "1"]]}},
                                  "constraints": [{"relation": "R", "vars": ["x", "x"]}], "k": 1)");
  EXPECT_TRUE(satisfies(support(inst, "x=1"), inst.constraints()[0], inst));
}

TEST(Satisfies, ForeignValueIsUsageError) {
  auto inst = boolean_instance(R"("variables": ["x"], "relations": {}, "constraints": [], "k": 1)");
  EXPECT_THROW(satisfies_all(Assignment({{0, 7}}), inst), UsageError);
  EXPECT_THROW(satisfies_all(Assignment({{0, 0}}), inst), UsageError);  // free value in a support
}

TEST(Satisfies, AgreesWithIndependentEvaluator) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 1000; ++round) {
    GeneratorConfig g;
    g.variables = static_cast<unsigned>(draw(rng, 1, 5));
    g.domain = static_cast<unsigned>(draw(rng, 2, 4));
    g.constraints = 1;
    g.max_arity = 3;
    g.density = 0.5;
    g.k = 0;
    const auto spec = random_instance_spec(g, rng);
    const auto inst = CspInstance::from_spec(spec);
    // Random assignment over labels.
    std::map<std::string, std::string> value;
    std::vector<Pair> pairs;
    for (VarId v = 0; v < g.variables; ++v) {
      const auto d = static_cast<ValueId>(draw(rng, 0, g.domain - 1));
      value[spec.variables[v]] = spec.domain[d];
      if (d != 0) pairs.push_back({v, d});
    }
    // Label-level evaluation straight off the parsed document.
    const auto& cs = spec.constraints[0];
    std::vector<std::string> tuple;
    for (const auto& v : cs.vars) tuple.push_back(value[v]);
    const auto& tuples = spec.relations.at(cs.relation).tuples;
    const bool expected = std::find(tuples.begin(), tuples.end(), tuple) != tuples.end();
    EXPECT_EQ(satisfies(Assignment(pairs), inst.constraints()[0], inst), expected);
  }
}

TEST(Restrict, Examples) {
  const Assignment xz({{0, 1}, {2, 1}});
  EXPECT_EQ(restrict(xz, {0, 1}), Assignment({{0, 1}}));
  EXPECT_EQ(restrict(Assignment(), {0, 1, 2}), Assignment());
  EXPECT_EQ(restrict(Assignment({{0, 1}}), {0}), Assignment({{0, 1}}));
}

TEST(Restrict, Idempotent) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<Pair> pairs;
    VarSet s;
    for (VarId v = 0; v < 6; ++v) {
      if (coin(rng, 1, 2)) pairs.push_back({v, static_cast<ValueId>(draw(rng, 1, 3))});
      if (coin(rng, 1, 2)) s.push_back(v);
    }
    const Assignment a(pairs);
    const auto once = restrict(a, s);
    EXPECT_EQ(restrict(once, s), once);
    EXPECT_TRUE(once.subset_of(a));
  }
}

TEST(Assignment, RejectsRepeatedVariable) { EXPECT_THROW(Assignment({{0, 1}, {0, 2}}), UsageError); }

TEST(Assignment, FormatAndParse) {
  auto inst = boolean_instance(R"("variables": ["x", "y", "z"], "relations": {}, "constraints": [], "k": 2)");
  EXPECT_EQ(format_assignment(support(inst, "z=1,x=1"), inst), "x=1,z=1");
  EXPECT_EQ(format_assignment(Assignment(), inst), "{}");
  EXPECT_EQ(support(inst, "x=0,y=1"), Assignment({{1, 1}}));  // free-value pairs drop out
  EXPECT_THROW(support(inst, "q=1"), UsageError);
}

TEST(Instance, SerializeRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorConfig g;
    g.seed = seed;
    g.variables = 5;
    g.k = 2;
    g.weights = seed % 2 == 0;
    g.target = seed % 4 == 0;
    const auto inst = random_instance(g);
    const auto text = serialize_instance(inst);
    const auto again = parse_instance(text);
    EXPECT_EQ(serialize_instance(again), text);
  }
}
