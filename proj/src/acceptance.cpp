#include "cayley/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "cayley/degrees.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/oracles.hpp"

#ifndef CAYLEY_DATA_DIR
#define CAYLEY_DATA_DIR "data"
#endif

namespace cayley {

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && passed) {
      passed = false;
      detail << "failed: " << what;
    }
  }
};

Variety load(const std::filesystem::path& dir, const std::string& name) {
  return Variety(variety_spec_from_json(read_json_file(dir / (name + ".json"))));
}

ResultantPencil random_rational_pencil(const Variety& x, std::mt19937_64& rng) {
  ResultantPencil f = random_pencil(x, rng);
  for (std::size_t i = 0; i < f.w.rows(); ++i)
    for (std::size_t j = 0; j < f.w.cols(); ++j) f.w(i, j) = random_nonzero_rational(rng, 9, 4);
  return f;
}

DualCovector random_rational_covector(const Variety& x, std::mt19937_64& rng) {
  DualCovector f;
  for (int j = 0; j <= x.N(); ++j) f.f.push_back(random_nonzero_rational(rng, 9, 4));
  return f;
}

/// A pencil with nonzero oracle value.
ResultantPencil generic_pencil(const Variety& x, std::mt19937_64& rng) {
  for (;;) {
    ResultantPencil f = random_rational_pencil(x, rng);
    if (chow_oracle(x, f) != 0) return f;
  }
}

DualCovector generic_covector(const Variety& x, std::mt19937_64& rng) {
  for (;;) {
    DualCovector f = random_rational_covector(x, rng);
    if (discriminant_oracle(x, f) != 0) return f;
  }
}

ResultantPencil scaled(ResultantPencil f, const Rational& mu) {
  f.w *= mu;
  return f;
}

DualCovector scaled(DualCovector f, const Rational& mu) {
  for (auto& v : f.f) v *= mu;
  return f;
}

std::vector<std::size_t> random_kappas(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> length(2, 5);
  std::uniform_int_distribution<int> kappa(1, 4);
  const int terms = length(rng);
  std::vector<std::size_t> k;
  for (int i = 0; i + 1 < terms; ++i) k.push_back(static_cast<std::size_t>(kappa(rng)));
  return k;
}

void scaling_law(Outcome& out) {
  std::mt19937_64 rng(101);
  int checks = 0;
  for (int c = 0; c < 50; ++c) {
    const BasedComplex cx = random_exact_complex(random_kappas(rng), rng);
    const Rational base = torsion(cx).value;
    const long d = torsion_scaling_exponent(cx.dims());
    for (int k = 0; k < 5; ++k) {
      const Rational mu = random_nonzero_rational(rng, 7, 5);
      out.expect(torsion(cx.scaled(mu)).value == pow(mu, d) * base,
                 "complex " + std::to_string(c) + " at mu=" + to_string(mu));
      ++checks;
    }
  }
  out.detail << checks << " scalings on 50 complexes";
}

void choice_independence(Outcome& out) {
  std::mt19937_64 rng(202);
  int checks = 0;
  for (int c = 0; c < 50; ++c) {
    const BasedComplex cx = random_exact_complex(random_kappas(rng), rng);
    const Rational base = torsion(cx).value;
    for (int k = 0; k < 20; ++k) {
      out.expect(torsion_with_selection(cx, random_selection(cx, rng)).value == base,
                 "complex " + std::to_string(c) + " selection " + std::to_string(k));
      ++checks;
    }
  }
  out.detail << checks << " alternative selections";
}

void conic_resultant(Outcome& out, const std::filesystem::path& dir) {
  const Variety x = load(dir, "conic");
  std::mt19937_64 rng(303);
  std::size_t largest = 0;
  for (int m : {4, 5}) {
    for (auto d : resultant_dims(x, {}, m)) largest = std::max(largest, d);
    for (int p = 0; p < 10; ++p) {
      const ResultantPencil f = generic_pencil(x, rng);
      const ResultantPencil g = generic_pencil(x, rng);
      const Rational lhs = x_resultant(x, {}, m, f).value / x_resultant(x, {}, m, g).value;
      out.expect(lhs == chow_oracle(x, f) / chow_oracle(x, g), "pair " + std::to_string(p) + " at m=" + std::to_string(m));
    }
  }
  out.expect(largest <= 20, "term dimension " + std::to_string(largest) + " above 20");
  out.detail << "20 pairs at m=4,5; largest term " << largest;
}

void resultant_degrees(Outcome& out, const std::filesystem::path& dir) {
  std::mt19937_64 rng(404);
  std::vector<std::future<std::string>> jobs;
  for (const char* name : {"conic", "twisted_cubic", "rnc4"}) {
    for (int r : {1, 2}) {
      const Variety x = load(dir, name);
      const ResultantPencil f = random_pencil(x, rng);
      jobs.push_back(std::async(std::launch::async, [x, f, r]() -> std::string {
        const TwistSpec tw{0, r};
        const int m = stable_resultant_twist(x, tw);
        const long expected = static_cast<long>(x.degree()) * (x.n() + 1) * r;
        const long measured = measure_degree(
            [&](const Rational& mu) { return x_resultant(x, tw, m, scaled(f, mu)).value; }, static_cast<int>(expected) + 2);
        std::vector<std::pair<int, long>> samples;
        for (int t = m; t <= m + x.n() + 1; ++t) samples.emplace_back(t, static_cast<long>(x.graded_basis(t).dimension()));
        const Rational predicted = predicted_resultant_degree(fit_hilbert_data(samples, x.n()), x.n(), r);
        std::string tag = x.name() + " r=" + std::to_string(r);
        if (measured != expected) return tag + ": measured " + std::to_string(measured);
        if (predicted != expected) return tag + ": predicted " + to_string(predicted);
        if (resultant_degree_check(x, tw, m) != expected) return tag + ": dimension count";
        return {};
      }));
    }
  }
  int ok = 0;
  for (auto& j : jobs) {
    const std::string err = j.get();
    out.expect(err.empty(), err);
    if (err.empty()) ++ok;
  }
  out.detail << ok << "/6 degrees equal d(n+1)r";
}

void rank_exponent(Outcome& out, const std::filesystem::path& dir) {
  std::mt19937_64 rng(505);
  int checks = 0;
  for (const char* name : {"conic", "twisted_cubic", "rnc4"}) {
    const Variety x = load(dir, name);
    const int m = stable_resultant_twist(x, {});
    for (int p = 0; p < 5; ++p) {
      const ResultantPencil f = generic_pencil(x, rng);
      const Rational one = x_resultant(x, {0, 1}, m, f).value;
      out.expect(x_resultant(x, {0, 2}, m, f).value == one * one, x.name() + " pencil " + std::to_string(p));
      ++checks;
    }
  }
  out.detail << checks << " pencils, Tor(O^2) = Tor(O)^2";
}

void conic_discriminant(Outcome& out, const std::filesystem::path& dir) {
  const Variety x = load(dir, "conic");
  std::mt19937_64 rng(606);
  const int m = stable_discriminant_twist(x, {});
  for (int p = 0; p < 10; ++p) {
    const DualCovector f = generic_covector(x, rng);
    const DualCovector g = generic_covector(x, rng);
    const Rational lhs = x_discriminant(x, {}, m, f).value / x_discriminant(x, {}, m, g).value;
    const Rational df = f.f[1] * f.f[1] - 4 * f.f[0] * f.f[2];
    const Rational dg = g.f[1] * g.f[1] - 4 * g.f[0] * g.f[2];
    out.expect(lhs == df / dg, "pair " + std::to_string(p));
  }
  int tangent = 0;
  for (int p = 0; p < 5; ++p) {
    const QVector point{random_integer(rng, -6, 6), random_nonzero_rational(rng, 6, 1)};
    const DualCovector f = tangent_covector(x, point, rng);
    try {
      x_discriminant(x, {}, m, f);
      out.expect(false, "tangent covector gave a torsion");
    } catch (const CovectorTangent&) {
      ++tangent;
    }
  }
  out.detail << "10 pairs at m=" << m << "; " << tangent << "/5 tangent covectors rejected";
}

void cubic_discriminant(Outcome& out, const std::filesystem::path& dir) {
  const Variety x = load(dir, "twisted_cubic");
  std::mt19937_64 rng(707);
  const int m = stable_discriminant_twist(x, {});
  for (int p = 0; p < 10; ++p) {
    const DualCovector f = generic_covector(x, rng);
    const DualCovector g = generic_covector(x, rng);
    const Rational lhs = x_discriminant(x, {}, m, f).value / x_discriminant(x, {}, m, g).value;
    out.expect(lhs == discriminant_oracle(x, f) / discriminant_oracle(x, g), "pair " + std::to_string(p));
  }
  const DualCovector f = generic_covector(x, rng);
  const long measured =
      measure_degree([&](const Rational& mu) { return x_discriminant(x, {}, m, scaled(f, mu)).value; }, 6);
  out.expect(measured == 2L * x.degree() - 2, "measured degree " + std::to_string(measured));
  out.expect(discriminant_degree_check(x, {}, m) == 4, "dimension count");
  out.detail << "10 pairs at m=" << m << "; measured degree " << measured;
}

void split_h0(Outcome& out, const std::filesystem::path& dir) {
  int checks = 0;
  for (const char* name : {"conic", "twisted_cubic"}) {
    const Variety x = load(dir, name);
    const int m0 = stable_discriminant_twist(x, {});
    for (int m : {m0, m0 + 1}) {
      for (long i = 0; i <= x.n() + 1; ++i) {
        try {
          split_h0_check(x, {}, m, i);
        } catch (const ConsistencyError& e) {
          out.expect(false, e.what());
        }
        ++checks;
      }
    }
  }
  out.detail << checks << " integer identities";
}

void combinatorics(Outcome& out) {
  std::mt19937_64 rng(909);
  using Dir = DifferenceOperator::Direction;
  int table = 0;
  for (int k = 0; k <= 6; ++k) {
    for (int l = 0; l <= k; ++l) {
      const UniPoly f = UniPoly::power(l);
      for (int s = 0; s < 5; ++s) {
        const Rational m = random_integer(rng, -20, 20);
        Rational fact = 1;
        for (int q = 2; q <= k; ++q) fact *= q;
        const Rational back = l == k ? fact : Rational(0);
        const Rational fwd = l == k ? (k % 2 == 1 ? fact : Rational(-fact)) : Rational(0);
        out.expect(apply_difference({Dir::backward, k}, f, m) == back, "backward k=" + std::to_string(k));
        out.expect(apply_difference({Dir::forward, k}, f, m) == fwd, "forward k=" + std::to_string(k));
        table += 2;
      }
    }
  }
  std::vector<std::future<std::vector<IdentityCheck>>> jobs;
  for (int n = 1; n <= 5; ++n) jobs.push_back(std::async(std::launch::async, verify_chern_lemma, n));
  for (int n = 1; n <= 4; ++n) jobs.push_back(std::async(std::launch::async, verify_jet_chern_identity, n));
  int identities = 0;
  for (auto& j : jobs) {
    for (const auto& c : j.get()) {
      out.expect(c.ok, c.name + " at n=" + std::to_string(c.n));
      ++identities;
    }
  }
  out.detail << table << " difference values, " << identities << " symbolic identities";
}

void veronese_smoke(Outcome& out, const std::filesystem::path& dir) {
  const Variety x = load(dir, "veronese_p2");
  std::mt19937_64 rng(1010);
  const int m = stable_resultant_twist(x, {});
  const ResultantPencil f = generic_pencil(x, rng);
  out.expect(check_exact(build_resultant_complex(x, {}, m, f)).exact, "not exact at a generic pencil");
  const long measured = measure_degree([&](const Rational& mu) { return x_resultant(x, {}, m, scaled(f, mu)).value; }, 14);
  out.expect(measured == 12, "measured degree " + std::to_string(measured));
  for (int p = 0; p < 2; ++p) {
    const ResultantPencil a = generic_pencil(x, rng);
    const ResultantPencil b = generic_pencil(x, rng);
    const Rational lhs = x_resultant(x, {}, m, a).value / x_resultant(x, {}, m, b).value;
    out.expect(lhs == chow_oracle(x, a) / chow_oracle(x, b), "oracle pair " + std::to_string(p));
  }
  out.detail << "m=" << m << ", dims";
  for (auto d : resultant_dims(x, {}, m)) out.detail << " " << d;
  out.detail << ", measured degree " << measured << ", 2 Macaulay pairs";
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  std::function<void(Outcome&, const std::filesystem::path&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "torsion scaling law", 10, [](Outcome& o, const auto&) { scaling_law(o); }},
      {2, "choice independence", 10, [](Outcome& o, const auto&) { choice_independence(o); }},
      {3, "conic resultant ratios", 30, conic_resultant},
      {4, "resultant degree d(n+1)r", 120, resultant_degrees},
      {5, "rank exponent", 60, rank_exponent},
      {6, "conic discriminant", 30, conic_discriminant},
      {7, "twisted cubic discriminant", 120, cubic_discriminant},
      {8, "split h0 identity", 60, split_h0},
      {9, "combinatorics", 30, [](Outcome& o, const auto&) { combinatorics(o); }},
      {10, "veronese surface smoke test", 600, veronese_smoke},
  };
  return all;
}

}  // namespace

std::filesystem::path default_data_dir() { return CAYLEY_DATA_DIR; }

CriterionResult run_criterion(int id, const std::filesystem::path& data_dir) {
  for (const auto& c : criteria()) {
    if (c.id != id) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    r.budget_seconds = c.budget;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out, data_dir);
    } catch (const std::exception& e) {
      out.passed = false;
      out.detail << " exception: " << e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = out.passed && r.seconds < r.budget_seconds;
    r.detail = out.detail.str();
    if (out.passed && !r.passed) r.detail += " (over time budget)";
    return r;
  }
  throw InputError("no criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite, const std::filesystem::path& data_dir) {
  std::vector<int> ids;
  if (suite == "torsion") ids = {1, 2};
  else if (suite == "resultant") ids = {3, 4, 5, 10};
  else if (suite == "discriminant") ids = {6, 7, 8};
  else if (suite == "combinatorics") ids = {9};
  else if (suite == "all") ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  else throw InputError("unknown suite \"" + suite + "\" (torsion, resultant, discriminant, combinatorics, all)");
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, data_dir));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-4s %2d  %-30s (%.2f s / %.0f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds, r.budget_seconds);
  return buf + r.detail;
}

}  // namespace cayley
