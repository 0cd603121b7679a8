#include "cayley/json_io.hpp"

#include <fstream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw InputError(std::string("field \"") + key + "\" must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

QVector rational_list(const Json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array");
  QVector out;
  for (const auto& e : v) out.push_back(rational_from_json(e));
  return out;
}

Json rational_strings(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational as a string or an integer, got " + j.dump());
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

VarietySpec variety_spec_from_json(const Json& j) {
  VarietySpec s;
  s.name = j.value("name", std::string("X"));
  s.n = int_field(j, "n");
  s.N = int_field(j, "N");
  s.d = int_field(j, "d");
  if (j.contains("dual_degree")) s.dual_degree = int_field(j, "dual_degree");
  s.params = string_list(j, "params");
  for (const auto& t : string_list(j, "param_map")) s.param_map.push_back(MultiPoly::parse(t, s.params));
  const auto amb = ambient_variables(s.N);
  for (const auto& t : string_list(j, "ideal")) s.ideal.push_back(MultiPoly::parse(t, amb));
  return s;
}

Json variety_spec_to_json(const VarietySpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["n"] = spec.n;
  j["N"] = spec.N;
  j["d"] = spec.d;
  if (spec.dual_degree != 0) j["dual_degree"] = spec.dual_degree;
  j["params"] = spec.params;
  Json pm = Json::array();
  for (const auto& p : spec.param_map) pm.push_back(p.to_string());
  j["param_map"] = pm;
  Json id = Json::array();
  for (const auto& p : spec.ideal) id.push_back(p.to_string());
  j["ideal"] = id;
  return j;
}

ResultantPencil pencil_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.empty()) throw InputError("\"rows\" must be a nonempty array");
  std::vector<QVector> parsed;
  for (const auto& r : rows) parsed.push_back(rational_list(r, "pencil row"));
  const std::size_t cols = parsed.front().size();
  ResultantPencil f{QMatrix(parsed.size(), cols)};
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (parsed[i].size() != cols) throw InputError("pencil rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) f.w(i, k) = parsed[i][k];
  }
  return f;
}

Json pencil_to_json(const ResultantPencil& f) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < f.w.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < f.w.cols(); ++k) r.push_back(to_string(f.w(i, k)));
    rows.push_back(r);
  }
  return Json{{"rows", rows}};
}

DualCovector covector_from_json(const Json& j) { return DualCovector{rational_list(field(j, "f"), "\"f\"")}; }

Json covector_to_json(const DualCovector& f) { return Json{{"f", rational_strings(f.f)}}; }

BasedComplex complex_from_json(const Json& j) {
  const Json& dims_j = field(j, "dims");
  if (!dims_j.is_array() || dims_j.size() < 2) throw InputError("\"dims\" needs at least two entries");
  std::vector<std::size_t> dims;
  for (const auto& d : dims_j) {
    if (!d.is_number_unsigned()) throw InputError("\"dims\" must hold nonnegative integers");
    dims.push_back(d.get<std::size_t>());
  }
  const Json& bj = field(j, "boundaries");
  if (!bj.is_array() || bj.size() + 1 != dims.size()) throw InputError("need one boundary per consecutive pair of terms");
  std::vector<QMatrix> boundaries;
  for (std::size_t i = 0; i < bj.size(); ++i) {
    QVector entries = rational_list(bj[i], "boundary");
    if (entries.size() != dims[i + 1] * dims[i]) {
      throw InputError("boundary " + std::to_string(i) + " has " + std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(dims[i + 1] * dims[i]));
    }
    boundaries.emplace_back(dims[i + 1], dims[i], std::move(entries));
  }
  return BasedComplex::from_dims(std::move(dims), std::move(boundaries));
}

Json complex_to_json(const BasedComplex& c) {
  Json bj = Json::array();
  for (const auto& b : c.boundaries()) bj.push_back(rational_strings(b.entries()));
  return Json{{"dims", c.dims()}, {"boundaries", bj}};
}

Json report_to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["inputs_hash"] = r.inputs_hash;
  if (!r.variety.empty()) j["variety"] = r.variety;
  if (r.m != 0) j["m"] = r.m;
  j["twist"] = Json{{"a", r.twist.a}, {"r", r.twist.r}};
  j["dims"] = r.dims;
  j["exactness"] = Json{{"exact", r.exact}, {"rank_profile", r.rank_profile}};
  j["degree"] = r.degree;
  if (r.expected_degree) j["expected_degree"] = *r.expected_degree;
  if (r.result) j["result"] = *r.result;
  if (r.failure) j["failure"] = *r.failure;
  if (!r.basis_fingerprint.empty()) j["basis_fingerprint"] = r.basis_fingerprint;
  if (r.oracle) {
    j["oracle"] = Json{{"name", r.oracle->oracle}, {"value", r.oracle->oracle_value}, {"ratio", r.oracle->ratio}};
  }
  if (r.chow_form) j["chow_form"] = *r.chow_form;
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

}  // namespace cayley
