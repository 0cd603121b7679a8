#include <doctest.h>

#include <random>

#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/oracles.hpp"
#include "cayley/resultant.hpp"

using namespace cayley;

namespace {

Variety load(const std::string& name) {
  return Variety(variety_spec_from_json(read_json_file(std::filesystem::path(CAYLEY_DATA_DIR) / (name + ".json"))));
}

ResultantPencil generic(const Variety& x, std::mt19937_64& rng) {
  for (;;) {
    ResultantPencil f = random_pencil(x, rng);
    if (chow_oracle(x, f) != 0) return f;
  }
}

}  // namespace

TEST_CASE("resultant complex dimensions") {
  const Variety conic = load("conic");
  CHECK(resultant_dims(conic, {}, 4) == std::vector<std::size_t>{5, 14, 9});
  CHECK(resultant_dims(conic, {0, 2}, 4) == std::vector<std::size_t>{10, 28, 18});
  CHECK(resultant_dims(conic, {1, 1}, 3) == std::vector<std::size_t>{5, 14, 9});
  const Variety ver = load("veronese_p2");
  CHECK(resultant_dims(ver, {}, 5) == std::vector<std::size_t>{15, 84, 135, 66});
  CHECK(resultant_degree_check(conic, {}, 4) == 4);
  CHECK(resultant_degree_check(ver, {}, 5) == 12);
  CHECK_THROWS_AS(resultant_dims(conic, {0, 0}, 4), InputError);
}

TEST_CASE("resultant boundaries compose to zero and are linear in the pencil") {
  const Variety cubic = load("twisted_cubic");
  std::mt19937_64 rng(41);
  const ResultantPencil f = random_pencil(cubic, rng);
  const ResultantPencil g = random_pencil(cubic, rng);
  ResultantPencil sum{f.w + g.w};
  const BasedComplex cf = build_resultant_complex(cubic, {}, 4, f);
  const BasedComplex cg = build_resultant_complex(cubic, {}, 4, g);
  const BasedComplex cs = build_resultant_complex(cubic, {}, 4, sum);
  for (std::size_t i = 0; i < cf.boundaries().size(); ++i) {
    CHECK(cs.boundaries()[i] == cf.boundaries()[i] + cg.boundaries()[i]);
  }
  CHECK((cf.boundaries()[1] * cf.boundaries()[0]).is_zero());
  CHECK(cf.fingerprint() == cg.fingerprint());
}

TEST_CASE("conic resultant is proportional to the Sylvester resultant") {
  const Variety conic = load("conic");
  std::mt19937_64 rng(42);
  const ResultantPencil f0 = generic(conic, rng);
  for (int m : {3, 4, 5}) {
    const Rational c = x_resultant(conic, {}, m, f0).value / chow_oracle(conic, f0);
    for (int k = 0; k < 5; ++k) {
      const ResultantPencil f = generic(conic, rng);
      CHECK(x_resultant(conic, {}, m, f).value == c * chow_oracle(conic, f));
    }
  }
}

TEST_CASE("pencil meeting X is rejected") {
  const Variety conic = load("conic");
  std::mt19937_64 rng(43);
  const QVector point{2, -3};
  const ResultantPencil f = incident_pencil(conic, point, rng);
  CHECK(chow_oracle(conic, f) == 0);
  CHECK_FALSE(check_exact(build_resultant_complex(conic, {}, 4, f)).exact);
  CHECK_THROWS_AS(x_resultant(conic, {}, 4, f), PencilMeetsX);
  const ResultantPencil wrong{QMatrix(3, 3)};
  CHECK_THROWS_AS(build_resultant_complex(conic, {}, 4, wrong), InputError);
}

TEST_CASE("property: rank r gives the r-th power") {
  std::mt19937_64 rng(44);
  for (const char* name : {"conic", "twisted_cubic"}) {
    const Variety x = load(name);
    const ResultantPencil f = generic(x, rng);
    const Rational one = x_resultant(x, {0, 1}, 4, f).value;
    CHECK(x_resultant(x, {0, 2}, 4, f).value == one * one);
    CHECK(x_resultant(x, {0, 3}, 4, f).value == one * one * one);
  }
}

TEST_CASE("property: scaling degree is d(n+1)r") {
  std::mt19937_64 rng(45);
  const Variety cubic = load("twisted_cubic");
  const ResultantPencil f = generic(cubic, rng);
  const Rational base = x_resultant(cubic, {}, 4, f).value;
  for (int k = 0; k < 5; ++k) {
    const Rational mu = random_nonzero_rational(rng, 7, 3);
    CHECK(x_resultant(cubic, {}, 4, ResultantPencil{f.w * mu}).value == pow(mu, 6) * base);
  }
}

TEST_CASE("modular determinants agree on the resultant") {
  const Variety conic = load("conic");
  std::mt19937_64 rng(46);
  const ResultantPencil f = generic(conic, rng);
  CHECK(x_resultant(conic, {}, 4, f, TorsionOptions{true}).value == x_resultant(conic, {}, 4, f).value);
}

TEST_CASE("stable twist search") {
  CHECK(stable_resultant_twist(load("conic"), {}) == 4);
  CHECK(stable_resultant_twist(load("conic"), {}, 2) >= 2);
}

TEST_CASE("Chow form of the conic by interpolation") {
  const Variety conic = load("conic");
  const MultiPoly chow = reconstruct_chow_form(conic, {}, 4);
  CHECK(chow.is_homogeneous());
  CHECK(chow.total_degree() == 4);
  std::mt19937_64 rng(47);
  for (int k = 0; k < 3; ++k) {
    const ResultantPencil f = random_pencil(conic, rng);
    QVector w(f.w.entries().begin(), f.w.entries().end());
    const Rational value = chow.eval(w);
    if (chow_oracle(conic, f) == 0) {
      CHECK(value == 0);
    } else {
      CHECK(value == x_resultant(conic, {}, 4, f).value);
    }
  }
  CHECK_THROWS_AS(reconstruct_chow_form(conic, {}, 4, 1, 20), InputError);
}
