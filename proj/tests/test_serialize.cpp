#include "doctest.h"

#include "lielab/error.hpp"
#include "lielab/serialize.hpp"

using namespace lielab;

TEST_CASE("rational vectors and matrices as strings") {
  Vec v(3);
  v << Rational(1, 2), Rational(-3), Rational(0);
  CHECK(to_json(v).dump() == R"(["1/2","-3","0"])");
  CHECK(vec_from_json(to_json(v)) == v);
  Mat m(2, 2);
  m << Rational(1), Rational(2, 3), Rational(-5, 7), Rational(0);
  CHECK(mat_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(vec_from_json(Json::parse(R"(["1/0"])")), ParseError);
  CHECK_THROWS_AS(vec_from_json(Json::parse(R"([0.5])")), ParseError);
  CHECK_THROWS_AS(mat_from_json(Json::parse(R"([["1"],["1","2"]])")), ParseError);
}

TEST_CASE("finite matrices as signed triples") {
  const FinMatrix x = unit(1, -2) + Rational(3, 4) * unit(-1, 1);
  const Json j = to_json(x);
  CHECK(j.dump() == R"([[1,-2,"1"],[-1,1,"3/4"]])");
  CHECK(fin_matrix_from_json(j) == x);
  CHECK_THROWS_AS(fin_matrix_from_json(Json::parse(R"([[1,0,"1"]])")), ParseError);
  CHECK_THROWS_AS(fin_matrix_from_json(Json::parse(R"([[1,2,"1"],[1,2,"2"]])")), ParseError);
}

TEST_CASE("algebra specs round-trip bit-exactly") {
  StructureConstants c(3);
  c.set(0, 1, 2, Rational(1, 3));
  c.set(1, 0, 2, Rational(-1, 3));
  for (const AlgebraSpec& spec :
       {AlgebraSpec::sl(3), AlgebraSpec::o(2), AlgebraSpec::sp(1), AlgebraSpec::custom(c),
        AlgebraSpec{Family::sl, IndexSet{2, 5, 7}, {}}}) {
    const std::string text = to_json(spec).dump();
    const AlgebraSpec back = spec_from_json(parse_json_text(text));
    CHECK(back == spec);
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("spec files are validated") {
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"family":"sl","indices":[1,2]})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"schema_version":2,"family":"sl","indices":[1,2]})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"schema_version":1,"family":"gl","indices":[1,2]})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"schema_version":1,"family":"sl","indices":[1,-2]})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"schema_version":1,"family":"sl","indices":[1,1]})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(Json::parse(R"({"schema_version":1,"family":"custom","dim":2,"constants":[]})")),
                  ParseError);
}

TEST_CASE("syntax errors report line and column") {
  try {
    parse_json_text("{\n  \"a\": 1,\n  oops\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("structure checksums separate algebras") {
  const auto a = structure_checksum(LieAlgebra::build(AlgebraSpec::sl(3)).constants());
  const auto b = structure_checksum(LieAlgebra::build(AlgebraSpec::sl(3)).constants());
  const auto c = structure_checksum(LieAlgebra::build(AlgebraSpec::sp(2)).constants());
  CHECK(a == b);
  CHECK(a != c);
  CHECK(a.size() == 16);
}
