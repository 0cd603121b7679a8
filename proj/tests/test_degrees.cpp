#include <doctest.h>

#include <random>

#include "cayley/degrees.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/resultant.hpp"

using namespace cayley;

namespace {

using Dir = DifferenceOperator::Direction;

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("difference operator values") {
  CHECK(apply_difference({Dir::backward, 3}, UniPoly::power(3), 17) == 6);
  CHECK(apply_difference({Dir::backward, 4}, UniPoly::power(2), 5) == 0);
  CHECK(apply_difference({Dir::forward, 2}, UniPoly::power(2), 0) == -2);
  CHECK(apply_difference({Dir::backward, 0}, UniPoly::power(2), 3) == 9);
  CHECK_THROWS_AS(apply_difference({Dir::backward, -1}, UniPoly::power(2), 3), InputError);
}

TEST_CASE("property: difference table for l <= k <= 6") {
  std::mt19937_64 rng(61);
  for (int k = 0; k <= 6; ++k) {
    for (int l = 0; l <= k; ++l) {
      for (int s = 0; s < 5; ++s) {
        const Rational m = random_nonzero_rational(rng, 30, 7);
        const Rational back = apply_difference({Dir::backward, k}, UniPoly::power(l), m);
        const Rational fwd = apply_difference({Dir::forward, k}, UniPoly::power(l), m);
        if (l < k) {
          CHECK(back == 0);
          CHECK(fwd == 0);
        } else {
          CHECK(back == factorial(k));
          CHECK(fwd == (k % 2 == 1 ? 1 : -1) * factorial(k));
        }
      }
    }
  }
}

TEST_CASE("forward sum is a signed iterated difference") {
  // Iterated f(m+1) - f(m), computed directly.
  const UniPoly f({3, -1, 0, 2, 1});
  for (int k = 0; k <= 5; ++k) {
    std::vector<Rational> vals;
    for (int j = 0; j <= k; ++j) vals.push_back(f.eval(7 + j));
    for (int step = 0; step < k; ++step)
      for (std::size_t j = 0; j + 1 < vals.size() - step; ++j) vals[j] = vals[j + 1] - vals[j];
    const Rational iterated = vals[0];
    CHECK(apply_difference({Dir::forward, k}, f, 7) == (k % 2 == 1 ? iterated : Rational(-iterated)));
  }
}

TEST_CASE("Hilbert data fit and predicted resultant degree") {
  const std::vector<std::pair<int, long>> conic{{3, 7}, {4, 9}, {5, 11}};
  const HilbertData hd = fit_hilbert_data(conic, 1);
  CHECK(hd.b == std::vector<Rational>{1, 2});
  CHECK(predicted_resultant_degree(hd, 1, 1) == 4);
  const std::vector<std::pair<int, long>> cubic{{4, 13}, {5, 16}};
  CHECK(predicted_resultant_degree(fit_hilbert_data(cubic, 1), 1, 2) == 12);
  const std::vector<std::pair<int, long>> bad{{1, 3}, {2, 5}, {3, 8}};
  CHECK_THROWS_AS(fit_hilbert_data(bad, 1), ConsistencyError);
}

TEST_CASE("direct summation matches the closed form for m in 4..9") {
  const std::filesystem::path dir(CAYLEY_DATA_DIR);
  for (const char* name : {"conic", "twisted_cubic", "rnc4", "veronese_p2"}) {
    const Variety x(variety_spec_from_json(read_json_file(dir / (std::string(name) + ".json"))));
    std::vector<std::pair<int, long>> samples;
    for (int t = 2; t <= 2 + x.n() + 1; ++t) samples.emplace_back(t, static_cast<long>(x.graded_basis(t).dimension()));
    const HilbertData hd = fit_hilbert_data(samples, x.n());
    CHECK(hd.b.back() * factorial(x.n()) == x.degree());
    for (int r : {1, 2}) {
      const Rational closed = predicted_resultant_degree(hd, x.n(), r);
      CHECK(closed == x.degree() * (x.n() + 1) * r);
      for (int m = 4; m <= 9; ++m) CHECK(direct_resultant_degree(hd, x.n(), r, m) == closed);
    }
  }
}

TEST_CASE("degree measurement by interpolation") {
  CHECK(measure_degree([](const Rational& mu) -> Rational { return pow(mu, 5) * Rational(-3, 7); }, 8) == 5);
  CHECK(measure_degree([](const Rational&) -> Rational { return 2; }, 3) == 0);
  CHECK_THROWS_AS(measure_degree([](const Rational& mu) -> Rational { return mu + 1; }, 3), ConsistencyError);
}

TEST_CASE("Chern root ring basics") {
  const ChernRootRing ring(2);
  const auto roots = ring.roots();
  CHECK(ring.wedge_roots(roots, 2).size() == 1);
  CHECK(ring.elementary(roots, 2) == ring.lambda(1) * ring.lambda(2));
  CHECK(ring.exp(ring.lambda(1)) ==
        ring.constant(1) + ring.lambda(1) + ring.lambda(1) * ring.lambda(1) * Rational(1, 2));
  CHECK(ring.truncate(ring.lambda(1) * ring.lambda(1) * ring.lambda(2)).is_zero());
  // n = 1: sum (-1)^i Ch(Lambda^i) = 1 - e^l, truncated = -l
  const ChernRootRing one(1);
  const auto r1 = one.roots();
  CHECK(one.constant(1) - one.ch(r1) == -one.lambda(1));
}

TEST_CASE("Chern character identities for n = 1..5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& c : verify_chern_lemma(n)) CHECK_MESSAGE(c.ok, c.name << " n=" << n << ": " << c.lhs << " vs " << c.rhs);
}

TEST_CASE("alternate closed form of the weighted sum holds only for n = 1") {
  for (int n = 1; n <= 4; ++n) {
    const ChernRootRing ring(n);
    const auto e = ring.roots();
    MultiPoly weighted(ring.variables());
    for (int i = 0; i <= n; ++i) weighted += Rational(i % 2 == 0 ? i : -i) * ring.ch(ring.wedge_roots(e, i));
    CHECK((weighted == chern_lemma_alternate_rhs(ring)) == (n == 1));
  }
}

TEST_CASE("jet Chern identity for n = 1..4") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : verify_jet_chern_identity(n)) CHECK_MESSAGE(c.ok, c.name << " n=" << n << ": " << c.lhs << " vs " << c.rhs);
  // Curves: the top-degree part is 2w - l.
  const ChernRootRing ring(1);
  const auto checks = verify_jet_chern_identity(1);
  CHECK(MultiPoly::parse(checks[0].rhs, ring.variables()) == ring.omega() * Rational(2) - ring.lambda(1));
}
