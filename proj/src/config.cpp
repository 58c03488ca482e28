#include "qcoex/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qcoex {

using nlohmann::json;

double dbm_to_watts(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

std::string config_digest(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }
  const std::string canonical = parsed.dump();  // object keys come out sorted
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& why) {
  throw ConfigError("config: " + key + ": " + why);
}

double require_number(const json& j, const std::string& key, double fallback,
                      bool has_fallback = true) {
  if (!j.contains(key)) {
    if (has_fallback) return fallback;
    fail(key, "missing");
  }
  if (!j.at(key).is_number()) fail(key, "must be a number");
  return j.at(key).get<double>();
}

MatrixSpec parse_matrix(const json& j, const std::string& where) {
  MatrixSpec spec;
  if (!j.contains("matrix")) return spec;  // defaults to gravity
  const json& m = j.at("matrix");
  if (m.is_string()) {
    if (m.get<std::string>() != "gravity") fail(where + ".matrix", "unknown matrix kind");
    return spec;
  }
  if (!m.is_object()) fail(where + ".matrix", "must be \"gravity\" or an object");
  const std::string kind = m.value("type", std::string("gravity"));
  if (kind == "gravity") {
    spec.kind = MatrixSpec::Kind::gravity;
    if (m.contains("weights")) {
      for (const auto& [node, w] : m.at("weights").items()) {
        if (!w.is_number() || !(w.get<double>() > 0))
          fail(where + ".matrix.weights." + node, "must be > 0");
        int node_id = 0;
        try {
          node_id = std::stoi(node);
        } catch (...) {
          fail(where + ".matrix.weights", "keys must be integer node ids");
        }
        spec.weights[node_id] = w.get<double>();
      }
    }
  } else if (kind == "explicit") {
    spec.kind = MatrixSpec::Kind::explicit_demands;
    if (!m.contains("demands") || !m.at("demands").is_array() || m.at("demands").empty())
      fail(where + ".matrix.demands", "must be a non-empty array");
    int id = 0;
    for (const json& d : m.at("demands")) {
      Demand dem;
      dem.id = id++;
      dem.origin = static_cast<int>(require_number(d, "from", 0, false));
      dem.destination = static_cast<int>(require_number(d, "to", 0, false));
      dem.offered_bps = require_number(d, "offered_bps", 0, false);
      if (!(dem.offered_bps > 0))
        fail(where + ".matrix.demands[" + std::to_string(dem.id) + "].offered_bps",
             "must be > 0");
      spec.demands.push_back(dem);
    }
  } else {
    fail(where + ".matrix.type", "must be \"gravity\" or \"explicit\"");
  }
  return spec;
}

TopologySpec parse_topology(const json& j) {
  TopologySpec spec;
  if (!j.contains("topology")) return spec;  // spain7
  const json& t = j.at("topology");
  if (t.is_string()) {
    spec.name = t.get<std::string>();
    if (spec.name != "spain7") fail("topology", "unknown topology name \"" + spec.name + "\"");
    return spec;
  }
  if (!t.is_object()) fail("topology", "must be a name or an object");
  spec.name = "custom";
  if (!t.contains("nodes") || !t.at("nodes").is_array()) fail("topology.nodes", "missing array");
  for (const json& n : t.at("nodes")) {
    Node node;
    node.id = static_cast<int>(require_number(n, "id", 0, false));
    node.name = n.value("name", std::to_string(node.id));
    spec.nodes.push_back(node);
  }
  if (!t.contains("links") || !t.at("links").is_array()) fail("topology.links", "missing array");
  for (const json& l : t.at("links")) {
    TopologySpec::BiLink b;
    b.a = static_cast<int>(require_number(l, "a", 0, false));
    b.b = static_cast<int>(require_number(l, "b", 0, false));
    b.length_km = require_number(l, "length_km", 0, false);
    b.wdm_slots = static_cast<int>(require_number(l, "wdm_slots", 40));
    spec.bilinks.push_back(b);
  }
  return spec;
}

QkdParams parse_qkd_params(const json& root) {
  QkdParams p;  // struct initializers are the documented defaults
  if (!root.contains("qkd_params")) return p;
  const json& q = root.at("qkd_params");
  p.f_sym = require_number(q, "f_sym", p.f_sym);
  p.beta = require_number(q, "beta", p.beta);
  p.mu = static_cast<int>(require_number(q, "mu", p.mu));
  p.xi_0 = require_number(q, "xi_0", p.xi_0);
  p.xi_r = require_number(q, "xi_r", p.xi_r);
  if (q.contains("p_opt_w") && q.contains("p_opt_dbm"))
    fail("qkd_params", "give p_opt_w or p_opt_dbm, not both");
  if (q.contains("p_opt_dbm"))
    p.p_opt_w = dbm_to_watts(require_number(q, "p_opt_dbm", 0.0));
  else
    p.p_opt_w = require_number(q, "p_opt_w", p.p_opt_w);
  p.alpha_0_db = require_number(q, "alpha_0_db", p.alpha_0_db);
  p.alpha_l_db_per_km = require_number(q, "alpha_l_db_per_km", p.alpha_l_db_per_km);
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: qkd_params.") + e.what());
  }
  return p;
}

std::vector<double> parse_axis(const json& s, const std::string& key) {
  std::vector<double> axis;
  if (!s.contains(key)) return axis;
  if (!s.at(key).is_array()) fail("sweep." + key, "must be an array of numbers");
  for (const json& v : s.at(key)) {
    if (!v.is_number()) fail("sweep." + key, "must be an array of numbers");
    axis.push_back(v.get<double>());
  }
  if (axis.empty()) fail("sweep." + key, "must not be empty");
  return axis;
}

}  // namespace

SweepAxes default_sweep_axes() {
  SweepAxes axes;
  axes.lambda = {0.01, 0.05, 0.1, 0.2};
  for (int e = -20; e <= 2; ++e) axes.xi_r.push_back(std::pow(10.0, e));
  axes.margin = {0.0, 0.01, 0.05, 0.10};
  for (double v : {1e7, 3e7, 1e8, 3e8, 1e9, 3e9, 1e10}) axes.offered_qkd_bps.push_back(v);
  for (double v : {2e12, 5e12, 8e12, 10e12, 13e12, 16e12, 20e12, 25e12, 32e12, 40e12})
    axes.offered_classical_bps.push_back(v);
  return axes;
}

LoadedConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config: top level must be an object");

  LoadedConfig out;
  out.digest = config_digest(text);
  ScenarioConfig& c = out.base;
  c.scenario_id = root.value("scenario_id", std::string("scenario"));
  c.topology = parse_topology(root);
  c.lambda = require_number(root, "lambda", c.lambda);
  c.k = static_cast<int>(require_number(root, "k", c.k));
  c.margin = require_number(root, "margin", c.margin);
  c.qkd = parse_qkd_params(root);

  if (root.contains("classical")) {
    c.classical_matrix = parse_matrix(root.at("classical"), "classical");
    double sum = 0;
    for (const Demand& d : c.classical_matrix.demands) sum += d.offered_bps;
    c.offered_classical_bps = require_number(root.at("classical"), "total_bps",
                                             sum > 0 ? sum : c.offered_classical_bps);
  }
  if (root.contains("qkd")) {
    c.qkd_matrix = parse_matrix(root.at("qkd"), "qkd");
    double sum = 0;
    for (const Demand& d : c.qkd_matrix.demands) sum += d.offered_bps;
    c.offered_qkd_bps =
        require_number(root.at("qkd"), "total_bps", sum > 0 ? sum : c.offered_qkd_bps);
  }

  if (root.contains("sweep")) {
    const json& s = root.at("sweep");
    if (s.is_string()) {
      if (s.get<std::string>() != "default") fail("sweep", "must be \"default\" or an object");
      out.axes = default_sweep_axes();
    } else if (s.is_object()) {
      out.axes.lambda = parse_axis(s, "lambda");
      out.axes.xi_r = parse_axis(s, "xi_r");
      out.axes.offered_qkd_bps = parse_axis(s, "offered_qkd_bps");
      out.axes.offered_classical_bps = parse_axis(s, "offered_classical_bps");
      out.axes.margin = parse_axis(s, "margin");
    } else {
      fail("sweep", "must be \"default\" or an object");
    }
  }

  try {
    c.validate();
    build_topology(c.topology, c.lambda);  // surfaces bad custom topologies at load
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return out;
}

LoadedConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

}  // namespace qcoex
