#include "tork/io.hpp"
#include "tork/koszul.hpp"

#include <gtest/gtest.h>

namespace tork {
namespace {

SimplicialComplex square() { return SimplicialComplex::from_facets(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

TEST(ComplexJson, RoundTrip) {
  for (const auto& k : enumerate_complexes(3)) EXPECT_EQ(complex_from_json(complex_to_json(k)), k);
  for (const auto& k : sample_complexes(6, 50, 4)) EXPECT_EQ(complex_from_json(Json::parse(complex_to_json(k).dump())), k);
}

TEST(ComplexJson, CanonicalForm) {
  EXPECT_EQ(complex_to_json(square()).dump(), R"({"facets":[[1,2],[2,3],[1,4],[3,4]],"m":4})");
  EXPECT_EQ(complex_to_json(SimplicialComplex(2)).dump(), R"({"facets":[],"m":2})");
}

TEST(ComplexJson, SchemaErrors) {
  EXPECT_THROW(complex_from_json(Json::parse(R"({"facets":[[1]]})")), SchemaError);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"m":2,"facets":[[3]]})")), SchemaError);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"m":2,"facets":[["a"]]})")), SchemaError);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"m":2,"facets":{}})")), SchemaError);
  EXPECT_THROW(complex_from_json(Json::parse(R"({"m":-1,"facets":[]})")), SchemaError);
  EXPECT_THROW(complex_from_json(Json::parse(R"([1,2])")), SchemaError);
}

TEST(ModuleJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GradedModule m = random_artinian_module(1 + static_cast<int>(seed % 4), seed, 3);
    EXPECT_EQ(module_from_json(Json::parse(module_to_json(m).dump())), m);
  }
}

TEST(ModuleJson, ParsesRationalStrings) {
  const Json j = Json::parse(R"({"m":1,"levels":[1,2],"mult":[{"var":1,"level":0,"entries":[[0,0,"2/4"],[1,0,-3]]}]})");
  const GradedModule m = module_from_json(j);
  EXPECT_EQ(m.mult(0, 0).at(0, 0), Rational(1, 2));
  EXPECT_EQ(m.mult(0, 0).at(1, 0), Rational(-3));
  EXPECT_TRUE(validate(m).empty());
}

TEST(ModuleJson, OmittedOperatorsAreZero) {
  const GradedModule m = module_from_json(Json::parse(R"({"m":3,"levels":[1]})"));
  EXPECT_EQ(m, GradedModule::residue_field(3));
}

TEST(ModuleJson, SchemaErrors) {
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[1,1],"mult":[{"var":2,"level":0,"entries":[]}]})")),
               SchemaError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[1,1],"mult":[{"var":1,"level":1,"entries":[]}]})")),
               SchemaError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[1,1],"mult":[{"var":1,"level":0,"entries":[[1,0,"1"]]}]})")),
               SchemaError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[1,1],"mult":[{"var":1,"level":0,"entries":[[0,0,"x"]]}]})")),
               SchemaError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[1,1],"mult":[{"var":1,"level":0,"entries":[[0,0,"1"],[0,0,"2"]]}]})")),
               SchemaError);
  EXPECT_THROW(module_from_json(Json::parse(R"({"m":1,"levels":[-1]})")), SchemaError);
}

TEST(InputJson, DetectsKind) {
  EXPECT_TRUE(std::holds_alternative<SimplicialComplex>(input_from_json(complex_to_json(square()))));
  EXPECT_TRUE(std::holds_alternative<GradedModule>(input_from_json(module_to_json(GradedModule::residue_field(2)))));
  EXPECT_THROW(input_from_json(Json::parse(R"({"m":2})")), SchemaError);
  EXPECT_THROW(input_from_json(Json::parse(R"({"m":2,"facets":[],"levels":[1]})")), SchemaError);
}

TEST(TableFormats, SquareTsvAndJson) {
  const BettiTable b = stanley_reisner_betti(square());
  EXPECT_EQ(table_to_tsv(b), "i\t2j\tbeta\n0\t0\t1\n1\t4\t2\n2\t8\t1\n");
  EXPECT_EQ(table_to_json(b).dump(),
            R"({"entries":[{"beta":1,"i":0,"j2":0},{"beta":2,"i":1,"j2":4},{"beta":1,"i":2,"j2":8}],"m":4})");
  EXPECT_EQ(table_from_json(Json::parse(table_to_json(b).dump())), b);
  EXPECT_EQ(poincare_to_tsv({1, 0, 2}), "k\tdim\n0\t1\n1\t0\n2\t2\n");
}

TEST(TableFormats, RoundTripOnSamples) {
  for (const auto& k : sample_complexes(5, 30, 6)) {
    const BettiTable b = stanley_reisner_betti(k);
    EXPECT_EQ(table_from_json(Json::parse(table_to_json(b).dump())), b);
  }
  EXPECT_THROW(table_from_json(Json::parse(R"({"m":2,"entries":[{"i":0,"j2":1,"beta":1}]})")), SchemaError);
  EXPECT_THROW(table_from_json(Json::parse(R"({"m":2,"entries":[{"i":3,"j2":2,"beta":1}]})")), SchemaError);
}

TEST(ReportJson, Shape) {
  BettiTable b(6, 6);
  b.set(0, 0, 64);
  const Json j = report_to_json(check_avramov_buchweitz(b, ModuleFacts::finite_module()));
  EXPECT_EQ(j.at("suite"), "ab");
  EXPECT_EQ(j.at("overall"), "pass");
  EXPECT_EQ(j.at("rows")[0].at("rhs"), "91/2");
  EXPECT_EQ(j.at("rows")[0].at("lhs"), 64);
  EXPECT_EQ(j.at("params").at("rhs_ceiling"), 46);
  const Json t = report_to_json(check_toral_rank_zk(stanley_reisner_betti(square()), 2));
  EXPECT_EQ(t.at("rows")[0].at("rhs"), 4);
}

}  // namespace
}  // namespace tork
