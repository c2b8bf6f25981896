#include "coapprox/job.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coapprox/errors.hpp"
#include "coapprox/gauge.hpp"
#include "coapprox/intersect.hpp"
#include "coapprox/oracle.hpp"
#include "coapprox/projection.hpp"
#include "coapprox/realify.hpp"
#include "coapprox/report.hpp"
#include "coapprox/rng.hpp"

namespace coapprox {

namespace {

Space make_space(const SpaceConfig& sc) {
  if (sc.kind == "l1") return Space::l1(sc.dim);
  if (sc.kind == "l2") return Space::l2(sc.dim);
  if (sc.kind == "linf") return Space::linf(sc.dim);
  if (sc.p_is_inf) return Space::linf(sc.dim);
  return Space::lp(sc.p, sc.dim);
}

Body make_body(const Space& space, const BodyConfig& bc) {
  if (bc.kind == "vertices") return Body::from_vertices(bc.points, bc.inner_radius);
  if (bc.kind == "ball") {
    const Space bs = make_space(bc.ball_space);
    Vec center = bc.center.empty() ? zeros(bs.dim()) : bc.center;
    return Body::norm_ball(bs, std::move(center), bc.radius);
  }
  std::vector<HalfSpace> faces;
  for (const auto& fc : bc.faces) faces.push_back(make_halfspace(space, fc.f, fc.level));
  return Body::from_halfspaces(std::move(faces), bc.outer_radius);
}

// y from the config when given, otherwise the norm-one projection search.
HalfSpaceProjection build_projection(const Space& space, const HalfSpaceConfig& hc,
                                     std::uint64_t seed) {
  if (hc.y) {
    const HalfSpace hs = make_halfspace(space, hc.f, hc.level);
    Vec y = *hc.y;
    const double fy = hs.f(y);
    if (std::abs(fy) < 1e-12) throw ConfigError("halfspace y: f(y) must be nonzero");
    if (std::abs(fy - 1.0) > 1e-10) y = scaled(y, 1.0 / fy);
    return make_halfspace_projection(hs, std::move(y), true, 20000, seed);
  }
  return certify_halfspace_projection(space, hc.f, hc.level, seed);
}

DirectionSampler pick_sampler(const std::string& name, std::size_t dim,
                              std::size_t count, std::uint64_t seed) {
  if (name == "equiangular") {
    if (dim != 2) throw ConfigError("decompose.sampler: equiangular needs dim = 2");
    return equiangular_sampler(count);
  }
  if (name == "axes") return axis_sampler(dim);
  return lowdisc_sampler(dim, seed);
}

struct JobOutput {
  Report report;
  std::ostringstream summary;
  int exit_code = 0;

  explicit JobOutput(std::string columns) : report(std::move(columns)) {}
};

JobOutput run_gauge(const JobConfig& cfg) {
  if (!cfg.body) throw ConfigError("gauge: a body is required");
  if (cfg.query_points.empty()) throw ConfigError("gauge: query_points are required");
  const Space space = make_space(cfg.space);
  const Body body = make_body(space, *cfg.body);
  JobOutput out("index,x,gauge,seed");
  out.summary << "gauge of " << cfg.query_points.size() << " query points\n";
  for (std::size_t i = 0; i < cfg.query_points.size(); ++i) {
    const double g = gauge(body, cfg.query_points[i], cfg.tol * 1e-3);
    out.report.add_row(std::to_string(i) + "," + format_vec(cfg.query_points[i]) + "," +
                       format_double(g) + "," + std::to_string(cfg.seed));
    out.summary << "  gauge(" << format_vec(cfg.query_points[i]) << ") = " << format_double(g)
                << "\n";
  }
  return out;
}

JobOutput run_decompose(const JobConfig& cfg) {
  if (!cfg.body) throw ConfigError("decompose: a body is required");
  const Space space = make_space(cfg.space);
  const Body body = make_body(space, *cfg.body);
  const DirectionSampler sampler =
      pick_sampler(cfg.decompose.sampler, space.dim(), cfg.decompose.count, cfg.seed);
  const std::vector<HalfSpace> faces = decompose(space, body, cfg.decompose.count, sampler);
  const Body hull = intersection_body(faces, 4.0 * body.outer_radius());
  const double hd = hausdorff_estimate(space, body, hull, 256);
  JobOutput out("index,f,level,hausdorff,seed");
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out.report.add_row(std::to_string(i) + "," + format_vec(faces[i].f.coeffs) + "," +
                       format_double(faces[i].level) + "," + format_double(hd) + "," +
                       std::to_string(cfg.seed));
  }
  out.summary << "decomposed into " << faces.size() << " half-spaces, hausdorff estimate "
              << format_double(hd) << "\n";
  return out;
}

JobOutput run_project(const JobConfig& cfg) {
  if (cfg.halfspaces.empty()) throw ConfigError("project: halfspaces are required");
  if (cfg.query_points.empty()) throw ConfigError("project: query_points are required");
  const Space space = make_space(cfg.space);
  std::vector<HalfSpaceProjection> projections;
  for (const auto& hc : cfg.halfspaces)
    projections.push_back(build_projection(space, hc, cfg.seed));
  for (const auto& p : projections) {
    if (!p.certified)
      throw CertificationFailure("projection norm estimate " +
                                 format_double(p.certificate) + " exceeds 1 + 1e-6");
  }
  std::vector<double> weights = cfg.weights == "explicit"
                                    ? cfg.weight_values
                                    : default_weights(projections.size());
  AveragedMap q(space, projections, weights);
  IterationConfig it{cfg.iteration.max_iter, cfg.iteration.tol, cfg.iteration.relaxation};

  JobOutput out("index,x,point,iterations,residual,max_violation,seed");
  for (std::size_t i = 0; i < cfg.query_points.size(); ++i) {
    const FixedPointResult res = fixed_point(q, cfg.query_points[i], it);
    double viol = 0.0;
    for (const auto& p : projections)
      viol = std::max(viol, p.halfspace.f(res.point) - p.halfspace.level);
    out.report.add_row(std::to_string(i) + "," + format_vec(cfg.query_points[i]) + "," +
                       format_vec(res.point) + "," + std::to_string(res.iterations) + "," +
                       format_double(res.residual) + "," + format_double(viol) + "," +
                       std::to_string(cfg.seed));
    if (!res.converged) {
      out.exit_code = 4;
      out.summary << "iteration budget exhausted at query " << i << " (residual "
                  << format_double(res.residual) << ")\n";
    } else if (viol > cfg.tol) {
      out.exit_code = std::max(out.exit_code, 3);
      out.summary << "limit violates a half-space by " << format_double(viol)
                  << " at query " << i << "\n";
    }
  }
  if (out.exit_code == 0)
    out.summary << "projected " << cfg.query_points.size()
                << " points onto the intersection\n";
  return out;
}

JobOutput run_counterexample(const JobConfig& cfg) {
  JobOutput out("record,x,d,margin,h,R,seed");
  CounterexampleResult res;
  try {
    res = verify_counterexample_linf4(cfg.verify.h, cfg.verify.R, cfg.seed);
  } catch (const SearchExhausted& e) {
    out.exit_code = 3;
    out.summary << "counterexample search exhausted: " << e.what() << "\n";
    return out;
  }
  out.report.add_row("witness," + format_vec(res.witness) + ",," +
                     format_double(res.margin_certified) + "," + format_double(res.resolution) +
                     "," + format_double(res.truncation_radius) + "," +
                     std::to_string(res.seed));
  out.report.add_row("witness_grid_margin," + format_vec(res.witness) + ",," +
                     format_double(res.margin_grid) + "," + format_double(res.resolution) +
                     "," + format_double(res.truncation_radius) + "," +
                     std::to_string(res.seed));
  // Control: the single kernel ker(1,0,0,0) is an existence set; the same
  // scan must find coapproximations there.
  const std::vector<Vec> controls = {{1.0, 0.25, -0.5, 0.75}, {1.0, -0.5, 0.0, 0.25},
                                     {-1.0, 0.75, 0.5, -0.25}};
  double worst_control = -1e300;
  for (const auto& x : controls) {
    const CoapproxReport rep = counterexample_control_ker_e1(x);
    worst_control = std::max(worst_control, rep.margin);
    out.report.add_row("control," + format_vec(x) + "," + format_vec(*rep.best) + "," +
                       format_double(rep.margin) + "," + format_double(rep.resolution) + "," +
                       format_double(rep.truncation_radius) + "," + std::to_string(cfg.seed));
  }
  out.summary << "witness " << format_vec(res.witness) << " with certified margin "
              << format_double(res.margin_certified) << " (grid margin "
              << format_double(res.margin_grid) << ", h = " << format_double(res.resolution)
              << ", R = " << format_double(res.truncation_radius) << ")\n"
              << "control margin (single kernel) " << format_double(worst_control) << "\n";
  if (worst_control > cfg.tol) out.exit_code = 3;

  if (!cfg.verify.golden.empty()) {
    std::ifstream g(cfg.verify.golden);
    if (!g) throw ConfigError("cannot open golden file '" + cfg.verify.golden + "'");
    nlohmann::json gj;
    g >> gj;
    const Vec gw = gj.at("witness").get<Vec>();
    const double gm = gj.at("margin_grid").get<double>();
    bool match = gw.size() == res.witness.size();
    for (std::size_t i = 0; match && i < gw.size(); ++i)
      match = std::abs(gw[i] - res.witness[i]) <= 1e-12;
    match = match && std::abs(gm - res.margin_grid) <= 1e-9;
    out.summary << "golden comparison: " << (match ? "match" : "MISMATCH") << "\n";
    if (!match) out.exit_code = 3;
  }
  return out;
}

JobOutput run_verify(const JobConfig& cfg) {
  const std::string& kind = cfg.verify.kind;
  if (kind == "counterexample_linf4") return run_counterexample(cfg);

  if (kind == "halfspace_certification") {
    if (cfg.halfspaces.empty())
      throw ConfigError("halfspace_certification: halfspaces are required");
    const Space space = make_space(cfg.space);
    JobOutput out("index,f,level,y,norm_estimate,certified,seed");
    for (std::size_t i = 0; i < cfg.halfspaces.size(); ++i) {
      const HalfSpace hs = make_halfspace(space, cfg.halfspaces[i].f, cfg.halfspaces[i].level);
      double estimate;
      Vec y;
      bool ok;
      if (cfg.halfspaces[i].y) {
        Vec ycfg = *cfg.halfspaces[i].y;
        const double fy = hs.f(ycfg);
        if (std::abs(fy) < 1e-12) throw ConfigError("halfspace y: f(y) must be nonzero");
        if (std::abs(fy - 1.0) > 1e-10) ycfg = scaled(ycfg, 1.0 / fy);
        const HalfSpaceProjection p =
            make_halfspace_projection(hs, std::move(ycfg), true, 20000, cfg.seed);
        estimate = p.certificate;
        y = p.y;
        ok = p.certified;
      } else {
        const ProjectionSearchResult found =
            find_norm_one_projection(space, hs.f.coeffs, {}, cfg.seed);
        estimate = found.norm_estimate;
        y = found.best_y;
        ok = found.found();
      }
      out.report.add_row(std::to_string(i) + "," + format_vec(hs.f.coeffs) + "," +
                         format_double(hs.level) + "," + format_vec(y) + "," +
                         format_double(estimate) + "," + (ok ? "1" : "0") + "," +
                         std::to_string(cfg.seed));
      out.summary << "halfspace " << i << ": norm estimate " << format_double(estimate)
                  << (ok ? " (certified)" : " (NOT certified)") << "\n";
      if (!ok) out.exit_code = 3;
    }
    return out;
  }

  if (kind == "intersection_membership") {
    JobConfig sub = cfg;
    sub.operation = "project";
    if (sub.query_points.empty())
      throw ConfigError("intersection_membership: query_points are required");
    return run_project(sub);
  }

  if (kind == "realification") {
    JobOutput out("record,space,value,samples,seed");
    double worst_iso = 0.0, worst_dual = 0.0;
    const char* names[] = {"l1", "l2", "linf"};
    const Space spaces[] = {Space::l1(cfg.space.dim), Space::l2(cfg.space.dim),
                            Space::linf(cfg.space.dim)};
    for (int si = 0; si < 3; ++si) {
      const Space& s = spaces[si];
      Rng rng(stream_seed(cfg.seed, 1000 + si));
      double iso = 0.0;
      for (int i = 0; i < 10000; ++i) {
        const ComplexVec z = make_complex(rng.box(s.dim(), 2.0), rng.box(s.dim(), 2.0));
        const double direct = complex_norm(s, z);
        iso = std::max(iso, std::abs(direct - realified_norm(s, realify(z))) /
                                std::max(1.0, direct));
      }
      double dual = 0.0;
      for (int i = 0; i < 12; ++i) {
        Rng frng(stream_seed(cfg.seed, 2000 + 16 * si + i));
        const ComplexVec f = make_complex(frng.box(s.dim(), 2.0), frng.box(s.dim(), 2.0));
        const double exact = complex_dual_norm(s, f);
        if (exact < 0.1) continue;
        const double sampled = real_part_dual_norm_sampled(s, f, 48, 256, cfg.seed + i);
        dual = std::max(dual, std::abs(sampled - exact) / exact);
      }
      out.report.add_row(std::string("isometry_defect,") + names[si] + "," +
                         format_double(iso) + ",10000," + std::to_string(cfg.seed));
      out.report.add_row(std::string("dual_norm_gap,") + names[si] + "," +
                         format_double(dual) + ",12," + std::to_string(cfg.seed));
      worst_iso = std::max(worst_iso, iso);
      worst_dual = std::max(worst_dual, dual);
    }
    out.summary << "realification: isometry defect " << format_double(worst_iso)
                << ", phase-sampled dual gap " << format_double(worst_dual) << "\n";
    if (worst_iso > 1e-12 || worst_dual > 1e-3) out.exit_code = 3;
    return out;
  }

  // nonconvex_linf2
  const Space space = Space::linf(2);
  const auto map = [](const Vec& v) { return nonconvex_projection_linf2(v); };
  const SweepReport rep =
      nonexpansiveness_sweep(map, space, cfg.sweep.pairs, cfg.seed, cfg.sweep.half_width);
  Rng rng(stream_seed(cfg.seed, 99));
  double worst_idem = 0.0;
  double worst_member = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Vec v = rng.box(2, cfg.sweep.half_width);
    const Vec p = map(v);
    worst_idem = std::max(worst_idem, linf_norm(sub(map(p), p)));
    worst_member = std::max(worst_member, std::abs(p[1]) - std::abs(p[0]));
  }
  JobOutput out("record,value,pairs,seed");
  out.report.add_row("max_ratio," + format_double(rep.max_ratio) + "," +
                     std::to_string(rep.pairs) + "," + std::to_string(cfg.seed));
  out.report.add_row("idempotency_defect," + format_double(worst_idem) + ",10000," +
                     std::to_string(cfg.seed));
  out.report.add_row("membership_defect," + format_double(worst_member) + ",10000," +
                     std::to_string(cfg.seed));
  out.summary << "nonconvex retraction: max ratio " << format_double(rep.max_ratio)
              << ", idempotency defect " << format_double(worst_idem)
              << ", membership defect " << format_double(worst_member) << "\n";
  if (rep.max_ratio > 1.0 + 1e-9 || worst_idem > 1e-12 || worst_member > 1e-12)
    out.exit_code = 3;
  return out;
}

JobOutput run_sweep(const JobConfig& cfg) {
  const Space space = make_space(cfg.space);
  std::function<Vec(const Vec&)> map;
  if (cfg.sweep.map == "identity") {
    map = [](const Vec& v) { return v; };
  } else if (cfg.sweep.map == "nonconvex_linf2") {
    if (space.dim() != 2) throw ConfigError("sweep: nonconvex_linf2 needs dim = 2");
    map = [](const Vec& v) { return nonconvex_projection_linf2(v); };
  } else {
    if (cfg.halfspaces.empty())
      throw ConfigError("sweep: halfspace_projection needs a halfspace");
    const HalfSpaceProjection p = build_projection(space, cfg.halfspaces.front(), cfg.seed);
    if (!p.certified)
      throw CertificationFailure("sweep: projection norm estimate " +
                                 format_double(p.certificate) + " exceeds 1 + 1e-6");
    map = p;
  }
  const SweepReport rep =
      nonexpansiveness_sweep(map, space, cfg.sweep.pairs, cfg.seed, cfg.sweep.half_width);
  JobOutput out("record,value,pairs,seed");
  out.report.add_row("max_ratio," + format_double(rep.max_ratio) + "," +
                     std::to_string(rep.pairs) + "," + std::to_string(cfg.seed));
  out.report.add_row("worst_x," + format_vec(rep.worst_x) + "," + std::to_string(rep.pairs) +
                     "," + std::to_string(cfg.seed));
  out.report.add_row("worst_z," + format_vec(rep.worst_z) + "," + std::to_string(rep.pairs) +
                     "," + std::to_string(cfg.seed));
  out.summary << "sweep over " << rep.pairs << " pairs: max ratio "
              << format_double(rep.max_ratio) << "\n";
  return out;
}

}  // namespace

RunResult run_job(const JobConfig& cfg) {
  JobOutput out = [&] {
    if (cfg.operation == "gauge") return run_gauge(cfg);
    if (cfg.operation == "decompose") return run_decompose(cfg);
    if (cfg.operation == "project") return run_project(cfg);
    if (cfg.operation == "verify") return run_verify(cfg);
    if (cfg.operation == "counterexample") {
      JobConfig sub = cfg;
      sub.verify.kind = "counterexample_linf4";
      return run_counterexample(sub);
    }
    return run_sweep(cfg);
  }();

  out.report.write_csv(cfg.out);
  std::ofstream sf(cfg.out + ".summary.txt", std::ios::binary);
  sf << out.summary.str();

  RunResult res;
  res.exit_code = out.exit_code;
  res.csv_path = cfg.out;
  res.summary = out.summary.str();
  return res;
}

}  // namespace coapprox
