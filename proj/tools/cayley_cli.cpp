#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cayley/acceptance.hpp"
#include "cayley/degrees.hpp"
#include "cayley/errors.hpp"
#include "cayley/json_io.hpp"
#include "cayley/oracles.hpp"

using namespace cayley;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVanishing = 2;

struct CommonOptions {
  std::string variety;
  int m = -1;
  int r = 1;
  int a = 0;
  bool oracle = false;
  bool modp = false;
  bool timing = false;
};

std::string file_contents(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string inputs_hash(const std::vector<std::string>& files, const std::string& extra) {
  std::uint64_t h = fnv1a(extra);
  for (const auto& f : files) h = fnv1a(file_contents(f), h);
  return hex64(h);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--variety", o.variety, "variety JSON")->required();
  cmd->add_option("-m", o.m, "twist m (default: smallest stable m from n+3)");
  cmd->add_option("-r", o.r, "rank of V = O(a)^r")->check(CLI::PositiveNumber);
  cmd->add_option("--twist-a", o.a, "twist a of V = O(a)^r");
  cmd->add_flag("--oracle", o.oracle, "compare against the classical resultant or discriminant");
  cmd->add_flag("--modp", o.modp, "multi-modular determinants");
  cmd->add_flag("--timing", o.timing, "include wall-clock seconds in the report");
}

using Clock = std::chrono::steady_clock;

int run_chow(const CommonOptions& o, const std::string& pencil_path, bool reconstruct) {
  const auto start = Clock::now();
  const Variety x(variety_spec_from_json(read_json_file(o.variety)));
  const ResultantPencil f = pencil_from_json(read_json_file(pencil_path));
  const TwistSpec tw{o.a, o.r};
  RunReport rep;
  rep.command = "chow";
  rep.inputs_hash = inputs_hash({o.variety, pencil_path}, "chow m=" + std::to_string(o.m) + " r=" + std::to_string(o.r) +
                                                              " a=" + std::to_string(o.a));
  rep.variety = x.name();
  rep.m = o.m >= 0 ? o.m : stable_resultant_twist(x, tw);
  rep.twist = tw;
  rep.expected_degree = static_cast<long>(x.degree()) * (x.n() + 1) * o.r;
  const BasedComplex c = build_resultant_complex(x, tw, rep.m, f);
  rep.dims = c.dims();
  rep.degree = torsion_scaling_exponent(rep.dims);
  const ExactnessReport ex = check_exact(c);
  rep.exact = ex.exact;
  rep.rank_profile = ex.rank_profile;
  int code = kOk;
  if (!ex.exact) {
    rep.failure = PencilMeetsX().what();
    std::cerr << "cayley: pencil meets X\n";
    code = kVanishing;
  } else {
    const TorsionResult t = torsion(c, TorsionOptions{o.modp});
    rep.result = to_string(t.value);
    rep.basis_fingerprint = hex64(t.basis_fingerprint);
    if (o.oracle) {
      const Rational ov = chow_oracle(x, f);
      rep.oracle = OracleComparison{x.n() == 1 ? "sylvester" : "macaulay", to_string(ov),
                                    ov == 0 ? "undefined" : to_string(t.value / ov)};
    }
    if (reconstruct) rep.chow_form = reconstruct_chow_form(x, tw, rep.m).to_string();
  }
  if (o.timing) rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(report_to_json(rep));
  return code;
}

int run_disc(const CommonOptions& o, const std::string& covector_path) {
  const auto start = Clock::now();
  const Variety x(variety_spec_from_json(read_json_file(o.variety)));
  const DualCovector f = covector_from_json(read_json_file(covector_path));
  const TwistSpec tw{o.a, o.r};
  RunReport rep;
  rep.command = "disc";
  rep.inputs_hash = inputs_hash({o.variety, covector_path}, "disc m=" + std::to_string(o.m) + " r=" +
                                                                std::to_string(o.r) + " a=" + std::to_string(o.a));
  rep.variety = x.name();
  rep.m = o.m >= 0 ? o.m : stable_discriminant_twist(x, tw);
  rep.twist = tw;
  if (x.spec().dual_degree != 0) rep.expected_degree = static_cast<long>(x.spec().dual_degree) * o.r;
  const BasedComplex c = build_discriminant_complex(x, tw, rep.m, f);
  rep.dims = c.dims();
  rep.degree = torsion_scaling_exponent(rep.dims);
  if (rep.degree == 0) throw DegenerateDual();
  const ExactnessReport ex = check_exact(c);
  rep.exact = ex.exact;
  rep.rank_profile = ex.rank_profile;
  int code = kOk;
  if (!ex.exact) {
    rep.failure = CovectorTangent().what();
    std::cerr << "cayley: f tangent to X\n";
    code = kVanishing;
  } else {
    const TorsionResult t = torsion(c, TorsionOptions{o.modp});
    rep.result = to_string(t.value);
    rep.basis_fingerprint = hex64(t.basis_fingerprint);
    if (o.oracle) {
      const Rational ov = discriminant_oracle(x, f);
      rep.oracle = OracleComparison{"binary discriminant", to_string(ov), ov == 0 ? "undefined" : to_string(t.value / ov)};
    }
  }
  if (o.timing) rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  emit(report_to_json(rep));
  return code;
}

int run_torsion(const std::string& path, bool modp) {
  const BasedComplex c = complex_from_json(read_json_file(path));
  RunReport rep;
  rep.command = "torsion";
  rep.inputs_hash = inputs_hash({path}, "torsion");
  rep.dims = c.dims();
  rep.degree = torsion_scaling_exponent(rep.dims);
  const ExactnessReport ex = check_exact(c);
  rep.exact = ex.exact;
  rep.rank_profile = ex.rank_profile;
  if (!ex.exact) {
    rep.failure = "complex is not exact";
    emit(report_to_json(rep));
    std::cerr << "cayley: complex is not exact\n";
    return kVanishing;
  }
  const TorsionResult t = torsion(c, TorsionOptions{modp});
  rep.result = to_string(t.value);
  rep.basis_fingerprint = hex64(t.basis_fingerprint);
  emit(report_to_json(rep));
  return kOk;
}

int run_verify(const std::string& suite, const std::string& data_dir) {
  const auto results = run_suite(suite, data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir));
  bool all = true;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    all = all && r.passed;
  }
  return all ? kOk : kInputError;
}

int run_verify_combinatorics(int max_n) {
  if (max_n < 1) throw InputError("--max-n must be at least 1");
  bool all = true;
  using Dir = DifferenceOperator::Direction;
  for (int k = 0; k <= 6; ++k) {
    bool row = true;
    for (int l = 0; l <= k; ++l) {
      Rational fact = 1;
      for (int q = 2; q <= k; ++q) fact *= q;
      const Rational back = apply_difference({Dir::backward, k}, UniPoly::power(l), 3);
      const Rational fwd = apply_difference({Dir::forward, k}, UniPoly::power(l), 3);
      row = row && back == (l == k ? fact : Rational(0)) &&
            fwd == (l == k ? (k % 2 == 1 ? fact : Rational(-fact)) : Rational(0));
    }
    std::cout << (row ? "PASS" : "FAIL") << "  difference operators k=" << k << ", l<=k\n";
    all = all && row;
  }
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& c : verify_chern_lemma(n)) {
      std::cout << (c.ok ? "PASS" : "FAIL") << "  n=" << n << "  " << c.name << "\n";
      all = all && c.ok;
    }
  }
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    for (const auto& c : verify_jet_chern_identity(n)) {
      std::cout << (c.ok ? "PASS" : "FAIL") << "  n=" << n << "  " << c.name << "\n";
      all = all && c.ok;
    }
  }
  return all ? kOk : kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resultants and discriminants of projective varieties as torsions of complexes"};
  app.require_subcommand(1);

  CommonOptions chow_opts;
  std::string pencil_path;
  bool reconstruct = false;
  auto* chow = app.add_subcommand("chow", "X-resultant of a pencil");
  add_common(chow, chow_opts);
  chow->add_option("--pencil", pencil_path, "pencil JSON")->required();
  chow->add_flag("--reconstruct", reconstruct, "interpolate the Chow form as a polynomial");

  CommonOptions disc_opts;
  std::string covector_path;
  auto* disc = app.add_subcommand("disc", "X-discriminant of a covector");
  add_common(disc, disc_opts);
  disc->add_option("--covector", covector_path, "covector JSON")->required();

  std::string complex_path;
  bool torsion_modp = false;
  auto* tor = app.add_subcommand("torsion", "torsion of a based complex");
  tor->add_option("--complex", complex_path, "complex JSON")->required();
  tor->add_flag("--modp", torsion_modp, "multi-modular determinants");

  std::string suite;
  std::string data_dir;
  auto* verify = app.add_subcommand("verify", "acceptance suites");
  verify->add_option("suite", suite, "torsion, resultant, discriminant, combinatorics or all")->required();
  verify->add_option("--data", data_dir, "directory of variety files");

  int max_n = 5;
  auto* comb = app.add_subcommand("verify-combinatorics", "difference operator and Chern identity table");
  comb->add_option("--max-n", max_n, "largest rank for the Chern identities");

  std::string p_text, q_text;
  auto* oracle = app.add_subcommand("oracle", "classical resultant and discriminant of binary forms in s, t");
  oracle->require_subcommand(1);
  auto* ores = oracle->add_subcommand("res", "Sylvester resultant");
  ores->add_option("--p", p_text)->required();
  ores->add_option("--q", q_text)->required();
  auto* odisc = oracle->add_subcommand("disc", "binary discriminant");
  odisc->add_option("--p", p_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*chow) return run_chow(chow_opts, pencil_path, reconstruct);
    if (*disc) return run_disc(disc_opts, covector_path);
    if (*tor) return run_torsion(complex_path, torsion_modp);
    if (*verify) return run_verify(suite, data_dir);
    if (*comb) return run_verify_combinatorics(max_n);
    if (*ores) {
      const Rational v = sylvester_resultant(parse_binary_form(p_text), parse_binary_form(q_text));
      emit(Json{{"command", "oracle res"}, {"p", p_text}, {"q", q_text}, {"result", to_string(v)}});
      return kOk;
    }
    if (*odisc) {
      const Rational v = binary_discriminant(parse_binary_form(p_text));
      emit(Json{{"command", "oracle disc"}, {"p", p_text}, {"result", to_string(v)}});
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "cayley: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
