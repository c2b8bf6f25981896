#include "coapprox/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coapprox/errors.hpp"

namespace coapprox {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ConfigError("config field '" + field + "': " + what);
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Vec parse_vec(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of numbers");
  Vec v;
  for (const auto& e : j) {
    if (!e.is_number()) fail(field, "expected an array of numbers");
    v.push_back(e.get<double>());
  }
  if (v.empty()) fail(field, "must not be empty");
  return v;
}

SpaceConfig parse_space(const json& j, const std::string& field) {
  SpaceConfig s;
  if (!j.is_object()) fail(field, "expected an object");
  if (j.contains("kind")) s.kind = j.at("kind").get<std::string>();
  if (s.kind != "l1" && s.kind != "l2" && s.kind != "lp" && s.kind != "linf")
    fail(field + ".kind", "must be one of l1, l2, lp, linf");
  if (j.contains("p")) {
    const auto& pj = j.at("p");
    if (pj.is_string()) {
      if (pj.get<std::string>() != "inf") fail(field + ".p", "string value must be \"inf\"");
      s.p_is_inf = true;
    } else if (pj.is_number()) {
      s.p = pj.get<double>();
      if (s.p < 1.0) fail(field + ".p", "must be >= 1");
    } else {
      fail(field + ".p", "must be a number or \"inf\"");
    }
  }
  if (s.kind == "lp" && !s.p_is_inf && s.p == 0.0) fail(field + ".p", "required for kind lp");
  if (!j.contains("dim")) fail(field + ".dim", "required");
  if (!j.at("dim").is_number_unsigned() || j.at("dim").get<std::size_t>() == 0)
    fail(field + ".dim", "must be a positive integer");
  s.dim = j.at("dim").get<std::size_t>();
  return s;
}

json dump_space(const SpaceConfig& s) {
  json j;
  j["kind"] = s.kind;
  if (s.kind == "lp") {
    if (s.p_is_inf)
      j["p"] = "inf";
    else
      j["p"] = s.p;
  }
  j["dim"] = s.dim;
  return j;
}

HalfSpaceConfig parse_halfspace(const json& j, const std::string& field) {
  HalfSpaceConfig h;
  if (!j.is_object()) fail(field, "expected an object");
  if (!j.contains("f")) fail(field + ".f", "required");
  h.f = parse_vec(j.at("f"), field + ".f");
  if (j.contains("level")) h.level = j.at("level").get<double>();
  if (j.contains("y")) h.y = parse_vec(j.at("y"), field + ".y");
  return h;
}

json dump_halfspace(const HalfSpaceConfig& h) {
  json j;
  j["f"] = h.f;
  j["level"] = h.level;
  if (h.y) j["y"] = *h.y;
  return j;
}

BodyConfig parse_body(const json& j, const std::string& field) {
  BodyConfig b;
  if (!j.is_object()) fail(field, "expected an object");
  if (!j.contains("kind")) fail(field + ".kind", "required");
  b.kind = j.at("kind").get<std::string>();
  if (b.kind == "vertices") {
    if (!j.contains("points")) fail(field + ".points", "required for kind vertices");
    for (std::size_t i = 0; i < j.at("points").size(); ++i)
      b.points.push_back(parse_vec(j.at("points")[i], field + ".points"));
    if (!j.contains("inner_radius")) fail(field + ".inner_radius", "required");
    b.inner_radius = j.at("inner_radius").get<double>();
    if (!(b.inner_radius > 0.0)) fail(field + ".inner_radius", "must be > 0");
  } else if (b.kind == "ball") {
    if (!j.contains("space")) fail(field + ".space", "required for kind ball");
    b.ball_space = parse_space(j.at("space"), field + ".space");
    if (j.contains("center")) b.center = parse_vec(j.at("center"), field + ".center");
    if (j.contains("radius")) b.radius = j.at("radius").get<double>();
    if (!(b.radius > 0.0)) fail(field + ".radius", "must be > 0");
  } else if (b.kind == "halfspaces") {
    if (!j.contains("faces")) fail(field + ".faces", "required for kind halfspaces");
    for (std::size_t i = 0; i < j.at("faces").size(); ++i)
      b.faces.push_back(parse_halfspace(j.at("faces")[i], field + ".faces"));
    if (!j.contains("outer_radius")) fail(field + ".outer_radius", "required");
    b.outer_radius = j.at("outer_radius").get<double>();
    if (!(b.outer_radius > 0.0)) fail(field + ".outer_radius", "must be > 0");
  } else {
    fail(field + ".kind", "must be one of vertices, ball, halfspaces");
  }
  return b;
}

json dump_body(const BodyConfig& b) {
  json j;
  j["kind"] = b.kind;
  if (b.kind == "vertices") {
    j["points"] = b.points;
    j["inner_radius"] = b.inner_radius;
  } else if (b.kind == "ball") {
    j["space"] = dump_space(b.ball_space);
    j["center"] = b.center;
    j["radius"] = b.radius;
  } else {
    json faces = json::array();
    for (const auto& f : b.faces) faces.push_back(dump_halfspace(f));
    j["faces"] = faces;
    j["outer_radius"] = b.outer_radius;
  }
  return j;
}

}  // namespace

JobConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error at line " +
                      std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  JobConfig cfg;
  try {
    if (j.contains("operation")) cfg.operation = j.at("operation").get<std::string>();
    const bool known = cfg.operation == "gauge" || cfg.operation == "decompose" ||
                       cfg.operation == "project" || cfg.operation == "verify" ||
                       cfg.operation == "counterexample" || cfg.operation == "sweep";
    if (!known) fail("operation", "unknown operation '" + cfg.operation + "'");

    if (j.contains("space")) cfg.space = parse_space(j.at("space"), "space");
    if (j.contains("body")) cfg.body = parse_body(j.at("body"), "body");
    if (j.contains("halfspaces")) {
      for (std::size_t i = 0; i < j.at("halfspaces").size(); ++i)
        cfg.halfspaces.push_back(
            parse_halfspace(j.at("halfspaces")[i], "halfspaces[" + std::to_string(i) + "]"));
    }
    if (j.contains("query_points")) {
      for (std::size_t i = 0; i < j.at("query_points").size(); ++i)
        cfg.query_points.push_back(parse_vec(j.at("query_points")[i], "query_points"));
    }
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      if (w.is_string()) {
        cfg.weights = w.get<std::string>();
        if (cfg.weights != "default") fail("weights", "string value must be \"default\"");
      } else if (w.is_array()) {
        cfg.weights = "explicit";
        for (const auto& e : w) cfg.weight_values.push_back(e.get<double>());
      } else {
        fail("weights", "must be \"default\" or an array");
      }
    }
    if (j.contains("decompose")) {
      const auto& d = j.at("decompose");
      if (d.contains("count")) cfg.decompose.count = d.at("count").get<std::size_t>();
      if (d.contains("sampler")) cfg.decompose.sampler = d.at("sampler").get<std::string>();
      if (cfg.decompose.sampler != "lowdisc" && cfg.decompose.sampler != "equiangular" &&
          cfg.decompose.sampler != "axes")
        fail("decompose.sampler", "must be one of lowdisc, equiangular, axes");
    }
    if (j.contains("verify")) {
      const auto& v = j.at("verify");
      if (v.contains("kind")) cfg.verify.kind = v.at("kind").get<std::string>();
      if (cfg.verify.kind != "counterexample_linf4" &&
          cfg.verify.kind != "halfspace_certification" &&
          cfg.verify.kind != "intersection_membership" &&
          cfg.verify.kind != "nonconvex_linf2" && cfg.verify.kind != "realification")
        fail("verify.kind", "unknown verification kind '" + cfg.verify.kind + "'");
      if (v.contains("h")) cfg.verify.h = v.at("h").get<double>();
      if (v.contains("R")) cfg.verify.R = v.at("R").get<double>();
      if (v.contains("golden")) cfg.verify.golden = v.at("golden").get<std::string>();
      if (!(cfg.verify.h > 0.0)) fail("verify.h", "must be > 0");
      if (!(cfg.verify.R > 0.0)) fail("verify.R", "must be > 0");
    }
    if (j.contains("sweep")) {
      const auto& s = j.at("sweep");
      if (s.contains("map")) cfg.sweep.map = s.at("map").get<std::string>();
      if (cfg.sweep.map != "nonconvex_linf2" && cfg.sweep.map != "halfspace_projection" &&
          cfg.sweep.map != "identity")
        fail("sweep.map", "unknown sweep map '" + cfg.sweep.map + "'");
      if (s.contains("pairs")) cfg.sweep.pairs = s.at("pairs").get<std::size_t>();
      if (s.contains("half_width")) cfg.sweep.half_width = s.at("half_width").get<double>();
    }
    if (j.contains("iteration")) {
      const auto& it = j.at("iteration");
      if (it.contains("max_iter")) cfg.iteration.max_iter = it.at("max_iter").get<std::size_t>();
      if (it.contains("tol")) cfg.iteration.tol = it.at("tol").get<double>();
      if (it.contains("relaxation"))
        cfg.iteration.relaxation = it.at("relaxation").get<double>();
      if (!(cfg.iteration.tol > 0.0)) fail("iteration.tol", "must be > 0");
      if (!(cfg.iteration.relaxation > 0.0 && cfg.iteration.relaxation <= 1.0))
        fail("iteration.relaxation", "must be in (0, 1]");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tol")) {
      cfg.tol = j.at("tol").get<double>();
      if (!(cfg.tol > 0.0)) fail("tol", "must be > 0");
    }
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config type error: ") + e.what());
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const JobConfig& cfg) {
  json j;
  j["operation"] = cfg.operation;
  j["space"] = dump_space(cfg.space);
  if (cfg.body) j["body"] = dump_body(*cfg.body);
  if (!cfg.halfspaces.empty()) {
    json hs = json::array();
    for (const auto& h : cfg.halfspaces) hs.push_back(dump_halfspace(h));
    j["halfspaces"] = hs;
  }
  if (!cfg.query_points.empty()) j["query_points"] = cfg.query_points;
  if (cfg.weights == "explicit")
    j["weights"] = cfg.weight_values;
  else
    j["weights"] = cfg.weights;
  j["decompose"] = {{"count", cfg.decompose.count}, {"sampler", cfg.decompose.sampler}};
  j["verify"] = {{"kind", cfg.verify.kind}, {"h", cfg.verify.h}, {"R", cfg.verify.R}};
  if (!cfg.verify.golden.empty()) j["verify"]["golden"] = cfg.verify.golden;
  j["sweep"] = {{"map", cfg.sweep.map},
                {"pairs", cfg.sweep.pairs},
                {"half_width", cfg.sweep.half_width}};
  j["iteration"] = {{"max_iter", cfg.iteration.max_iter},
                    {"tol", cfg.iteration.tol},
                    {"relaxation", cfg.iteration.relaxation}};
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["out"] = cfg.out;
  return j.dump(2) + "\n";
}

std::string schema_dump() {
  std::ostringstream os;
  os << "coapprox configuration schema (v1)\n"
     << "==================================\n"
     << "UTF-8 JSON object. Unknown top-level keys are rejected by validation\n"
     << "of the fields below; omitted keys take the listed defaults.\n"
     << "\n"
     << "operation: gauge | decompose | project | verify | counterexample | sweep\n"
     << "space:     { kind: l1 | l2 | lp | linf, p: number >= 1 or \"inf\"\n"
     << "             (p = infinity is always spelled \"inf\", never a float),\n"
     << "             dim: positive integer }\n"
     << "body:      { kind: vertices | ball | halfspaces, ... }\n"
     << "           vertices:   points (array of points), inner_radius > 0\n"
     << "           ball:       space, center, radius > 0\n"
     << "           halfspaces: faces (array of {f, level}), outer_radius > 0\n"
     << "halfspaces: array of { f: coefficients, level: number, y: optional\n"
     << "            norm-one direction; omitted = derived by the projection\n"
     << "            search }\n"
     << "query_points: array of points\n"
     << "weights:   \"default\" (2^-k renormalized) or an explicit array\n"
     << "decompose: { count (>= 1), sampler: lowdisc | equiangular | axes }\n"
     << "verify:    { kind: counterexample_linf4 | halfspace_certification |\n"
     << "             intersection_membership | nonconvex_linf2 | realification,\n"
     << "             h, R, golden (optional path) }\n"
     << "sweep:     { map: nonconvex_linf2 | halfspace_projection | identity,\n"
     << "             pairs, half_width }\n"
     << "iteration: { max_iter, tol, relaxation in (0, 1] }\n"
     << "seed, tol, out\n"
     << "\n"
     << "Exit codes: 0 success, 2 validation error, 3 certification failure,\n"
     << "4 iteration budget exhausted.\n"
     << "\n"
     << "defaults (JSON, reparses to an identical configuration):\n"
     << "---\n"
     << dump_config(JobConfig{}) << "---\n";
  return os.str();
}

}  // namespace coapprox
