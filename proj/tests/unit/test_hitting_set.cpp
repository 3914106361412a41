#include <gtest/gtest.h>

#include "w1/error.hpp"
#include "w1/hitting_set.hpp"

using namespace w1;

namespace {

HypergraphFamilyInstance abc(std::int64_t k) {
  return parse_hypergraph_family(R"({"ground": ["a", "b", "c"],
      "hypergraphs": [{"vertices": ["a", "b"], "edges": [["a"], ["a", "b"]]}], "k": )" + std::to_string(k) + "}");
}

}  // namespace

TEST(Reduce, CharacteristicVectors) {
  auto csp = reduce(abc(1));
  ASSERT_EQ(csp.constraints().size(), 1u);
  const auto& rel = csp.relation_of(csp.constraints()[0]);
  const ValueId one = *csp.find_value("1");
  const ValueId zero = *csp.find_value("0");
  EXPECT_EQ(rel.tuples(), (std::vector<std::vector<ValueId>>{{one, zero}, {one, one}}));
  EXPECT_EQ(csp.k(), 1u);
  EXPECT_EQ(csp.constraints()[0].vars, (std::vector<VarId>{*csp.find_variable("a"), *csp.find_variable("b")}));
}

TEST(Reduce, EmptyEdgeSetAndEmptyEdge) {
  auto none = parse_hypergraph_family(R"({"ground": ["a", "b"],
      "hypergraphs": [{"vertices": ["a"], "edges": []}], "k": 1})");
  auto csp = reduce(none);
  EXPECT_TRUE(csp.relation_of(csp.constraints()[0]).tuples().empty());
  EXPECT_FALSE(solve_hitting(none));

  auto with_empty = parse_hypergraph_family(R"({"ground": ["a", "b"],
      "hypergraphs": [{"vertices": ["a", "b"], "edges": [[]]}], "k": 0})");
  auto csp2 = reduce(with_empty);
  const ValueId zero = *csp2.find_value("0");
  EXPECT_EQ(csp2.relation_of(csp2.constraints()[0]).tuples(), (std::vector<std::vector<ValueId>>{{zero, zero}}));
}

TEST(SolveHitting, Examples) {
  EXPECT_EQ(solve_hitting(abc(1)), std::optional(HittingSet{"a"}));
  EXPECT_EQ(oracle_hitting(abc(1)), std::optional(HittingSet{"a"}));

  auto contradiction = parse_hypergraph_family(R"({"ground": ["a", "b"],
      "hypergraphs": [{"vertices": ["a"], "edges": [["a"]]}, {"vertices": ["a", "b"], "edges": [["b"]]}], "k": 1})");
  EXPECT_FALSE(solve_hitting(contradiction));
  EXPECT_FALSE(oracle_hitting(contradiction));

  auto vacuous = parse_hypergraph_family(R"({"ground": ["a", "b"],
      "hypergraphs": [{"vertices": ["a"], "edges": [[]]}, {"vertices": [], "edges": [[]]}], "k": 0})");
  EXPECT_EQ(solve_hitting(vacuous), std::optional(HittingSet{}));
}

TEST(SolveHitting, EmptyVertexSetWithoutEmptyEdgeIsUnsatisfiable) {
  auto h = parse_hypergraph_family(R"({"ground": ["a"], "hypergraphs": [{"vertices": [], "edges": []}], "k": 0})");
  EXPECT_FALSE(solve_hitting(h));
  EXPECT_FALSE(oracle_hitting(h));
}

TEST(Validate, Errors) {
  EXPECT_THROW(parse_hypergraph_family(R"({"ground": ["a"],
      "hypergraphs": [{"vertices": ["a"], "edges": [["b"]]}], "k": 0})"),
               ParseError);
  EXPECT_THROW(parse_hypergraph_family(R"({"ground": ["a"],
      "hypergraphs": [{"vertices": ["z"], "edges": []}], "k": 0})"),
               ParseError);
  EXPECT_THROW(parse_hypergraph_family(R"({"ground": ["a"], "hypergraphs": [], "k": 0, "extra": 1})"), ParseError);
  EXPECT_THROW(parse_hypergraph_family(R"({"ground": ["a", "a"], "hypergraphs": [], "k": 0})"), ParseError);
}
