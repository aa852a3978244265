#include "specvar/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "specvar/error.hpp"

namespace specvar {

using nlohmann::json;

json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const cplx& z : m.entries()) entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"n", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
    throw ParseError("matrix JSON needs the keys \"n\" and \"entries\"");
  }
  const json& jn = j.at("n");
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const auto n = jn.get<std::size_t>();
  const json& e = j.at("entries");
  if (!e.is_array() || e.size() != n * n) {
    throw ParseError("\"entries\" must be an array of n*n = " + std::to_string(n * n) + " pairs");
  }
  std::vector<cplx> vals;
  vals.reserve(n * n);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const json& p = e[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw ParseError("entry " + std::to_string(k) + " is not a [re, im] pair");
    }
    vals.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return ComplexMatrix(n, std::move(vals));
}

ComplexMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return matrix_from_json(j);
}

std::string dump_matrix(const ComplexMatrix& m) { return to_json(m).dump(); }

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path + "'");
  out << dump_matrix(m) << '\n';
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const BoundInputs& in) {
  return json{{"normA", in.normA}, {"normB", in.normB}, {"rhoB", in.rhoB},
              {"diffNorm", in.diffNorm}, {"m", in.m}, {"n", in.n}};
}

json to_json(const BoundReport& r, const ConstantChoice& constant) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    verdicts.push_back({{"bound", v.bound}, {"evaluated", v.evaluated}, {"pass", v.pass}, {"note", v.note}});
  }
  const int n = r.inputs.n;
  return json{{"inputs", to_json(r.inputs)},
              {"distances", {{"dE", opt(r.dE)}, {"dH", opt(r.dH)}}},
              {"bounds",
               {{"euclid", r.euclid},
                {"hyperExact", opt(r.hyperExact)},
                {"hyperSimple", opt(r.hyperSimple)},
                {"hyperVacuous", r.hyperVacuous},
                {"krause", opt(r.krause)},
                {"krauseApplicable", r.krauseApplicable},
                {"krauseThreshold", opt(r.krauseThreshold)},
                {"genericEuclid", finite_or_null(generic_euclid_radius(r.inputs, constant))}}},
              {"constants",
               {{"euclidConstant", constant.name()},
                {"C_n", constant.value(n)},
                {"bek", std::pow(2.0, 2.0 - 1.0 / n)},
                {"inv_alpha_n", n >= 1 ? json(1.0 / krause_alpha(n)) : json(nullptr)}}},
              {"tolerance", r.tolerance},
              {"verdicts", verdicts},
              {"allPass", r.all_pass()}};
}

json to_json(const LocalizationDisk& d) {
  return json{{"eigenvalue", json::array({d.eigenvalue.real(), d.eigenvalue.imag()})},
              {"center", json::array({d.center.real(), d.center.imag()})},
              {"radius", d.radius},
              {"nominal_radius", d.nominal_radius},
              {"mode", to_string(d.mode)},
              {"vacuous", d.vacuous}};
}

}  // namespace specvar
