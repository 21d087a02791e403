#include "palais/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace palais {

namespace {

using nlohmann::json;

json series_to_json(const LaurentSeries& series) {
  json triples = json::array();
  if (series.is_zero()) return triples;
  for (int p = series.lowest_index(); p <= series.truncation_degree(); ++p) {
    const Complex c = series.coeff(p);
    triples.push_back(json::array({p, c.real(), c.imag()}));
  }
  return triples;
}

LaurentSeries series_from_json(const json& triples, const char* name) {
  if (!triples.is_array()) {
    throw ConfigError(std::string("config: series '") + name +
                      "' must be an array of [index, re, im] triples");
  }
  LaurentSeries out;
  for (const json& triple : triples) {
    if (!triple.is_array() || triple.size() != 3 ||
        !triple[0].is_number_integer()) {
      throw ConfigError(std::string("config: bad triple in series '") + name +
                        "'");
    }
    out = out + LaurentSeries::monomial(
                    triple[0].get<int>(),
                    Complex{triple[1].get<double>(), triple[2].get<double>()});
  }
  return out;
}

void check_tolerance(const char* name, double value) {
  if (!(value >= 1e-13 && value <= 1e-4)) {
    throw ConfigError(std::string("config: ") + name +
                      " must lie in [1e-13, 1e-4]");
  }
}

}  // namespace

RunConfig RunConfig::from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ConfigError(std::string("config: JSON parse error: ") + err.what());
  }
  RunConfig config;
  try {
    config.version = j.value("version", 1);
    if (j.contains("params")) {
      const json& p = j.at("params");
      config.params.a = p.value("a", 1);
      config.params.b = p.value("b", 1);
      config.params.m = p.value("m", 1);
      config.params.n = p.value("n", 1);
      config.params.f = p.contains("f") ? series_from_json(p.at("f"), "f")
                                        : LaurentSeries::zero();
      config.params.g = p.contains("g") ? series_from_json(p.at("g"), "g")
                                        : LaurentSeries::constant(1.0);
    }
    if (j.contains("tolerances")) {
      const json& t = j.at("tolerances");
      config.tolerances.ode_tol = t.value("ode_tol", config.tolerances.ode_tol);
      config.tolerances.fit_tol = t.value("fit_tol", config.tolerances.fit_tol);
      config.tolerances.report_tol =
          t.value("report_tol", config.tolerances.report_tol);
    }
    config.loop_radius = j.value("loop_radius", 1.0);
    config.output_dir = j.value("output_dir", std::string{});
    if (j.contains("options")) {
      const json& o = j.at("options");
      config.generator = o.value("generator", config.generator);
      config.epsilon = o.value("epsilon", config.epsilon);
      if (o.contains("deltas")) {
        config.deltas = o.at("deltas").get<std::vector<double>>();
      }
      config.u1_mode = o.value("u1_mode", false);
    }
  } catch (const json::exception& err) {
    throw ConfigError(std::string("config: ") + err.what());
  }
  config.check();
  return config;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json_string(buffer.str());
}

std::string RunConfig::to_json_string(int indent) const {
  json j;
  j["version"] = version;
  j["params"] = {{"a", params.a}, {"b", params.b}, {"m", params.m},
                 {"n", params.n}, {"f", series_to_json(params.f)},
                 {"g", series_to_json(params.g)}};
  j["tolerances"] = {{"ode_tol", tolerances.ode_tol},
                     {"fit_tol", tolerances.fit_tol},
                     {"report_tol", tolerances.report_tol}};
  j["loop_radius"] = loop_radius;
  j["output_dir"] = output_dir;
  j["options"] = {{"generator", generator},
                  {"epsilon", epsilon},
                  {"deltas", deltas},
                  {"u1_mode", u1_mode}};
  return j.dump(indent);
}

void RunConfig::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("config: cannot write '" + path + "'");
  out << to_json_string(2) << '\n';
}

void RunConfig::check() const {
  if (version != 1) {
    throw ConfigError("config: unsupported version " + std::to_string(version));
  }
  check_tolerance("ode_tol", tolerances.ode_tol);
  check_tolerance("fit_tol", tolerances.fit_tol);
  check_tolerance("report_tol", tolerances.report_tol);
  if (!(loop_radius > 0.0 && loop_radius <= 10.0)) {
    throw ConfigError("config: loop_radius must lie in (0, 10]");
  }
  if (!(epsilon > 0.0 && epsilon <= 2.0)) {
    throw ConfigError("config: epsilon must lie in (0, 2]");
  }
}

}  // namespace palais
