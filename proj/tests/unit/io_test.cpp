#include <gtest/gtest.h>

#include "gtmod/errors.hpp"
#include "gtmod/io.hpp"
#include "gtmod/verify.hpp"

using namespace gtmod;

TEST(Io, TableauRoundTrip) {
  for (auto list : {reference_seeds(), extra_seeds(), generic_seeds()})
    for (const auto& [name, seed] : list) {
      TableauInput in = parse_tableau(tableau_to_json(seed));
      EXPECT_EQ(in.seed, seed) << name;
      EXPECT_TRUE(in.z0.is_zero());
    }
}

TEST(Io, RawTableauIsNormalized) {
  TableauInput in = parse_tableau(R"({"n": 3, "rows": [["1/3","1/5","1/7"], ["3","1"], ["1/2"]]})");
  EXPECT_EQ(in.seed.t(), 1);
  EXPECT_EQ(in.z0.at(2, 1), 2);
}

TEST(Io, TableauErrors) {
  EXPECT_THROW(parse_tableau("{"), ParseError);
  EXPECT_THROW(parse_tableau(R"({"n": 3, "rows": [["1/3","x","1/7"], ["3","1"], ["1/2"]]})"), ParseError);
  EXPECT_THROW(parse_tableau(R"({"n": 3, "rows": [["0","1","1/2"], ["0","0"], ["0"]], "singular": []})"),
               SeedValidationError);
}

TEST(Io, PatternsAndIndices) {
  IntegerPattern z(4);
  z.set(3, 2, -2);
  z.set(1, 1, 5);
  EXPECT_EQ(pattern_to_json(z), "[[0,-2,0],[0,0],[5]]");
  EXPECT_EQ(parse_pattern(4, pattern_to_json(z)), z);
  EXPECT_THROW(parse_pattern(4, "[[0,0],[0,0],[0]]"), ParseError);
  EXPECT_EQ(parse_index(3, "[1,3]"), 5u);
  EXPECT_EQ(parse_index(3, "[]"), 0u);
  EXPECT_THROW(parse_index(2, "[3]"), ParseError);
}

TEST(Io, ModuleElementRoundTrip) {
  SeedTableau seed = reference_seeds()[1].seed;
  SingularModule m(seed);
  for (const auto& b : sample_vectors(seed, 10, 2, 1))
    for (int r = 1; r <= 4; ++r) {
      ModuleElement e = m.act({r, r == 4 ? 1 : r + 1}, b);
      const std::string text = module_element_to_json(e);
      EXPECT_EQ(parse_module_element(4, text), e);
      EXPECT_EQ(module_element_to_json(parse_module_element(4, text)), text);
    }
}

TEST(Io, RationalsArePQ) {
  ModuleElement e{{CanonicalBasisVector{0, IntegerPattern(2)}, ExactScalar(3)}};
  EXPECT_NE(module_element_to_json(e).find("\"3/1\""), std::string::npos);
}
