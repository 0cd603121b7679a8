#include <doctest.h>

#include "cayley/errors.hpp"
#include "cayley/exterior.hpp"
#include "cayley/json_io.hpp"
#include "cayley/twist.hpp"
#include "cayley/variety.hpp"

using namespace cayley;

namespace {

Variety load(const std::string& name) {
  return Variety(variety_spec_from_json(read_json_file(std::filesystem::path(CAYLEY_DATA_DIR) / (name + ".json"))));
}

}  // namespace

TEST_CASE("shipped specs validate") {
  for (const char* name : {"conic", "twisted_cubic", "rnc4", "veronese_p2"}) {
    const VarietySpec spec = variety_spec_from_json(read_json_file(std::filesystem::path(CAYLEY_DATA_DIR) / (std::string(name) + ".json")));
    const ValidationReport r = validate(spec);
    CHECK_MESSAGE(r.ok, name << ": " << r.message);
  }
}

TEST_CASE("validation names the failing generator") {
  VarietySpec spec = load("conic").spec();
  spec.ideal = {MultiPoly::parse("x0*x1 - x2^2", ambient_variables(2))};
  const ValidationReport r = validate(spec);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("x0*x1") != std::string::npos);
  CHECK_THROWS_AS(Variety{spec}, ValidationError);
}

TEST_CASE("validation rejects inhomogeneous or mismatched maps") {
  VarietySpec spec = load("conic").spec();
  spec.param_map[0] = MultiPoly::parse("s^2 + s", spec.params);
  CHECK_FALSE(validate(spec).ok);
  spec = load("conic").spec();
  spec.param_map.pop_back();
  CHECK_FALSE(validate(spec).ok);
}

TEST_CASE("graded pieces have the expected dimensions") {
  const Variety conic = load("conic");
  const Variety cubic = load("twisted_cubic");
  const Variety ver = load("veronese_p2");
  for (int m = 0; m <= 6; ++m) {
    CHECK(conic.graded_basis(m).dimension() == static_cast<std::size_t>(2 * m + 1));
    CHECK(cubic.graded_basis(m).dimension() == static_cast<std::size_t>(3 * m + 1));
  }
  for (int m = 0; m <= 3; ++m) CHECK(ver.graded_basis(m).dimension() == static_cast<std::size_t>((2 * m + 1) * (2 * m + 2) / 2));
  CHECK(conic.graded_basis(-1).dimension() == 0);
}

TEST_CASE("shuffled bases span the same space") {
  const Variety cubic = load("twisted_cubic");
  const GradedBasis b = cubic.graded_basis_shuffled(3, 99);
  CHECK(b.dimension() == cubic.graded_basis(3).dimension());
  for (const auto& p : b.basis) CHECK_NOTHROW(cubic.coordinates(3, p));
}

TEST_CASE("multiplication by a variable") {
  const Variety conic = load("conic");
  const QMatrix& m = conic.variable_multiplication(1, 2);
  CHECK(m.rows() == 5);
  CHECK(m.cols() == 3);
  CHECK(rank(m) == 3);
  CHECK_THROWS_AS(conic.multiply_by_form(MultiPoly::parse("x0^2", conic.ambient()), 2), InputError);
}

TEST_CASE("twist bookkeeping") {
  const TwistBook conic{2, 1, {0, 1}};
  CHECK(conic.resultant_term_twist(4, 0) == 2);
  CHECK(conic.resultant_term_twist(4, 2) == 4);
  CHECK(conic.exterior_degree(0) == 2);
  CHECK(conic.cone_section_twist(4) == 4);
  CHECK(conic.tangent_twist(4, 1) == 3);
  CHECK(conic.parameter_degree(3) == 6);
  CHECK(conic.euler_target_degree(1, 3) == 7);
  CHECK(conic.euler_source_degree(1, 3) == 6);
  const TwistBook shifted{3, 1, {2, 2}};
  CHECK(shifted.resultant_term_twist(4, 0) == 4);
  CHECK(shifted.cone_section_twist(4) == 6);
  CHECK(shifted.tangent_twist(4, 2) == 4);
  CHECK(shifted.parameter_degree(2) == 6);
  const TwistBook surface{2, 2, {0, 1}};
  CHECK(surface.exterior_degree(0) == 3);
  CHECK(surface.resultant_term_twist(5, 0) == 2);
}

TEST_CASE("exterior bases and contractions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  const ExteriorBasis b(4, 2);
  CHECK(b.size() == 6);
  CHECK(b.subset(0) == std::vector<std::size_t>{0, 1});
  CHECK(b.index_of({2, 3}) == 5);
  CHECK_THROWS_AS(b.index_of({3, 2}), InputError);
  // iota_phi iota_phi = 0
  const std::vector<Rational> phi{1, -2, 3, Rational(1, 2)};
  const QMatrix c2 = contraction_matrix(4, 2, phi);
  const QMatrix c3 = contraction_matrix(4, 3, phi);
  CHECK((c2 * c3).is_zero());
  // e_0 ^ e_1 -> phi_0 e_1 - phi_1 e_0
  CHECK(c2(1, 0) == 1);
  CHECK(c2(0, 0) == 2);
}
