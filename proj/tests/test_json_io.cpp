#include <doctest.h>

#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"

using namespace cayley;

TEST_CASE("pencil and covector round trip") {
  const Json j = Json::parse(R"({"rows": [["1", "0", "2"], ["-1/3", 4, "5"]]})");
  const ResultantPencil f = pencil_from_json(j);
  CHECK(f.w(1, 0) == Rational(-1, 3));
  CHECK(f.w(1, 1) == 4);
  CHECK(pencil_from_json(pencil_to_json(f)).w == f.w);
  const DualCovector c = covector_from_json(Json::parse(R"({"f": ["1", "-2", "1/3"]})"));
  CHECK(c.f[2] == Rational(1, 3));
  CHECK(covector_to_json(c).dump() == R"({"f":["1","-2","1/3"]})");
  CHECK_THROWS_AS(pencil_from_json(Json::parse(R"({"rows": [["1"], ["1", "2"]]})")), InputError);
  CHECK_THROWS_AS(covector_from_json(Json::parse(R"({"g": []})")), InputError);
  CHECK_THROWS_AS(covector_from_json(Json::parse(R"({"f": ["x"]})")), InputError);
}

TEST_CASE("complex round trip") {
  const Json j = Json::parse(R"({"dims": [1, 2, 1], "boundaries": [["1", "2"], ["-2", "1"]]})");
  const BasedComplex c = complex_from_json(j);
  CHECK(c.dims() == std::vector<std::size_t>{1, 2, 1});
  CHECK(torsion(c).value == 1);
  CHECK(complex_to_json(c) == j);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"dims": [1, 2], "boundaries": [["1"]]})")), InputError);
}

TEST_CASE("variety spec round trip") {
  const VarietySpec s = variety_spec_from_json(read_json_file(std::filesystem::path(CAYLEY_DATA_DIR) / "twisted_cubic.json"));
  CHECK(s.N == 3);
  CHECK(s.ideal.size() == 3);
  CHECK(s.dual_degree == 4);
  const VarietySpec back = variety_spec_from_json(variety_spec_to_json(s));
  CHECK(back.param_map == s.param_map);
  CHECK(back.ideal == s.ideal);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("report omits absent fields") {
  RunReport r;
  r.command = "chow";
  r.inputs_hash = "00";
  r.exact = false;
  r.failure = "pencil meets X";
  const Json j = report_to_json(r);
  CHECK_FALSE(j.contains("result"));
  CHECK_FALSE(j.contains("seconds"));
  CHECK(j["failure"] == "pencil meets X");
}
