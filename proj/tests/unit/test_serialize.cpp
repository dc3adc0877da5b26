#include <gtest/gtest.h>

#include "generators.hpp"
#include "symlie/serialize.hpp"

using namespace symlie;
using namespace symlie::testing;

namespace {

const Field kQ = Field::rational();

LieTable unipotent_table() {
  return structure_constants(validate_seed(Matrix::from_ints(kQ, {{1, 0}, {1, 1}}), q_vec({0, 1})), 2);
}

TEST(Serialize, MatrixShape) {
  Json j = to_json(Matrix::from_ints(kQ, {{1, 0}, {2, 3}}));
  EXPECT_EQ(j.dump(), R"({"field":"Q","rows":[["1","0"],["2","3"]]})");
}

TEST(Serialize, TableShape) {
  Json j = to_json(unipotent_table());
  EXPECT_EQ(j["dim"], 3);
  EXPECT_EQ(j["labels"], Json::parse(R"(["x1^2","x1*x2","x2^2"])"));
  EXPECT_EQ(j["constants"].dump(),
            R"([{"i":0,"j":2,"coeffs":[{"k":0,"value":"1"}]},{"i":1,"j":2,"coeffs":[{"k":0,"value":"1"},{"k":1,"value":"1"}]}])");
  EXPECT_EQ(j["provenance"]["d"], 2);
  EXPECT_EQ(j["provenance"]["lambda"], "1");
}

TEST(Serialize, TableRoundTrip) {
  Rng rng(1);
  for (const Field& f : {Field::rational(), Field::gaussian(), Field::prime(7)})
    for (int k = 0; k < 10; ++k) {
      unsigned n = static_cast<unsigned>(uniform(rng, 1, 3)), d = static_cast<unsigned>(uniform(rng, 1, 3));
      LieTable t = structure_constants(random_seed(rng, f, n), d);
      Json j = to_json(t);
      LieTable back = table_from_json(Json::parse(j.dump()));
      EXPECT_TRUE(same_structure(t, back));
      EXPECT_EQ(to_json(back).dump(), j.dump());
      EXPECT_EQ(table_id(back), table_id(t));
    }
}

TEST(Serialize, GradedRoundTrip) {
  LieTable t = graded_table(validate_seed(Matrix::from_ints(kQ, {{-1, 0}, {0, -1}}), q_vec({1, 0})), 2);
  Json j = to_json(t);
  EXPECT_TRUE(j["provenance"]["d"].is_null());
  EXPECT_EQ(j["provenance"]["max_degree"], 2);
  EXPECT_EQ(to_json(table_from_json(j)).dump(), j.dump());
}

TEST(Serialize, DumpsAreByteStable) {
  EXPECT_EQ(to_json(unipotent_table()).dump(2), to_json(unipotent_table()).dump(2));
  EXPECT_EQ(analysis_json(unipotent_table()).dump(), analysis_json(unipotent_table()).dump());
}

TEST(Serialize, TableIdTracksStructureOnly) {
  LieTable a = unipotent_table();
  LieTable b(kQ, {"p", "q", "r"});
  for (const auto& [key, v] : a.constants()) b.set_bracket(key.first, key.second, v);
  EXPECT_EQ(table_id(a), table_id(b));
  EXPECT_EQ(table_id(a).size(), 16u);
  b.set_bracket(0, 1, q_vec({1, 0, 0}));
  EXPECT_NE(table_id(a), table_id(b));
}

TEST(Serialize, RejectsMalformedTables) {
  auto parse_code = [](const char* text) {
    try {
      table_from_json(Json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(parse_code(R"({"dim":2,"field":"Q","constants":[{"i":1,"j":0,"coeffs":[]}]})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"dim":2,"field":"Q","constants":[{"i":0,"j":1,"coeffs":[{"k":5,"value":"1"}]}]})"),
            ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"dim":2,"field":"Q","constants":[{"i":0,"j":1,"coeffs":[{"k":0,"value":"x"}]}]})"),
            ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"({"field":"Q"})"), ErrorCode::Parse);
  EXPECT_EQ(parse_code(R"([1,2])"), ErrorCode::Parse);
}

TEST(Serialize, HomPolyRoundTrip) {
  HomPoly f(monomial_basis(3, 2), q_vec({1, -2, 0, 3, 0, 5}));
  Json j = to_json(f);
  EXPECT_EQ(j["basis"]["n"], 3);
  EXPECT_EQ(j["basis"]["d"], 2);
  EXPECT_EQ(hompoly_from_json(j), f);
}

TEST(ParseMatrix, InlineForms) {
  EXPECT_EQ(parse_matrix(kQ, "[[1,0],[1/2,-3]]"), Matrix::from_rows(kQ, {q_vec({1, 0}), {Scalar::parse(kQ, "1/2"), Scalar::from_int(kQ, -3)}}));
  const Field qi = Field::gaussian();
  Matrix m = parse_matrix(qi, "[[ 1+i , \"-i\" ], [0, 2/3i]]");
  EXPECT_EQ(m(0, 0), Scalar::gaussian(1, 1));
  EXPECT_EQ(m(0, 1), -Scalar::imaginary_unit());
  EXPECT_EQ(m(1, 1), Scalar::gaussian(0, mpq_class(2, 3)));
  const Field f5 = Field::prime(5);
  EXPECT_EQ(parse_matrix(f5, "[[1 mod 5, 7]]"), Matrix::from_rows(f5, {field_vec(f5, {1, 2})}));
}

TEST(ParseMatrix, JsonObject) {
  Matrix m = Matrix::from_ints(kQ, {{1, 2}, {3, 4}});
  EXPECT_EQ(parse_matrix(kQ, to_json(m).dump()), m);
  EXPECT_THROW(parse_matrix(Field::prime(5), to_json(m).dump()), Error);
}

TEST(ParseMatrix, Errors) {
  for (const char* bad : {"[[1,0],[1]]", "[[1,0]", "1,0", "[[1,x]]", "[]", "[[1,0]] trailing"}) {
    try {
      parse_matrix(kQ, bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
}

TEST(ParseVector, Forms) {
  EXPECT_EQ(parse_vector(kQ, "[0,1]"), q_vec({0, 1}));
  EXPECT_EQ(parse_vector(kQ, R"(["3","4"])"), q_vec({3, 4}));
  EXPECT_EQ(parse_vector(kQ, R"({"field":"Q","vector":["5"]})"), q_vec({5}));
  EXPECT_THROW(parse_vector(kQ, "[[1,2],[3,4]]"), Error);
}

TEST(Serialize, AnalysisShape) {
  Json j = analysis_json(unipotent_table());
  EXPECT_EQ(j["jacobi"]["ok"], true);
  EXPECT_EQ(j["derived_series"]["dims"], Json::parse("[3,2,0]"));
  EXPECT_EQ(j["lower_central_series"]["terminated_at_zero"], false);
  EXPECT_EQ(j["solvable"], true);
  EXPECT_EQ(j["nilpotent"], false);
  EXPECT_EQ(j["center"]["dim"], 0);
}

TEST(Serialize, ClassificationShape) {
  const Field qi = Field::gaussian();
  SeedPair s = validate_seed(Matrix::from_ints(qi, {{5, 1}, {0, 5}}), field_vec(qi, {1, 0}));
  Json j = to_json(classify(s, 2));
  EXPECT_EQ(j["family"], "G3");
  EXPECT_EQ(j["c"], "5");
  EXPECT_EQ(j["witness"]["verified"], true);
}

TEST(Serialize, OrbitReportShape) {
  Json j = to_json(gl_orbits(1, 2, true));
  EXPECT_EQ(j["pair_count"], 4);
  EXPECT_EQ(j["orbits"].size(), 4u);
  EXPECT_EQ(j["orbits"][0]["size"], 1);
}

}  // namespace
