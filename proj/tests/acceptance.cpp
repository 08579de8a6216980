// Acceptance run: one PASS/FAIL line per criterion, each with the measured
// worst case. Exit status is nonzero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "plenoptic/api.hpp"
#include "plenoptic/kernels/pair_intersect.hpp"
#include "plenoptic/refocus.hpp"
#include "plenoptic/scene.hpp"
#include "plenoptic/service.hpp"
#include "plenoptic/sle.hpp"
#include "plenoptic/triangulate.hpp"
#include "test_support.hpp"

using namespace plenoptic;
using nlohmann::json;
using test_support::rel_diff;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Running maximum of a relative deviation, with the place it occurred.
class Worst {
 public:
  void update(double dev, const std::string& where) {
    if (!(dev <= value_)) {  // NaN counts as worst
      value_ = std::isnan(dev) ? INFINITY : dev;
      where_ = where;
    }
  }
  double value() const { return value_; }
  std::string str() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", value_);
    return where_.empty() ? buf : std::string(buf) + " (" + where_ + ")";
  }

 private:
  double value_ = 0.0;
  std::string where_;
};

std::string fmt(const char* pattern, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

CameraConfig default_config() { return validate_config(default_raw_config()); }

std::vector<RawConfig> random_configs(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<RawConfig> out;
  for (int n = 0; n < count; ++n) out.push_back(test_support::random_config(rng));
  return out;
}

// ---------------------------------------------------------------------------

Outcome sle_fidelity() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  Worst residual, agreement;
  int systems = 0;
  while (systems < 10000) {
    const std::size_t n = systems % 2 == 0 ? 2 : 3;
    sle::LinearSystem s;
    for (std::size_t r = 0; r < n; ++r) s.a.push_back({entry(rng), entry(rng)});
    // Well-conditioned: singular values of the n x 2 matrix within 1:100.
    double g00 = 0, g01 = 0, g11 = 0;
    for (const auto& row : s.a) {
      g00 += row[0] * row[0];
      g01 += row[0] * row[1];
      g11 += row[1] * row[1];
    }
    const double tr = g00 + g11, det = g00 * g11 - g01 * g01;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
    const double lmax = tr / 2 + disc, lmin = tr / 2 - disc;
    if (!(lmin > 0) || std::sqrt(lmax / lmin) > 100.0) continue;
    const sle::Vec2 x{entry(rng), entry(rng)};
    for (const auto& row : s.a) s.b.push_back(row[0] * x[0] + row[1] * x[1]);
    ++systems;

    const sle::Solution sol = sle::solve(s);
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r = std::max(r, std::abs(s.a[i][0] * sol.x[0] + s.a[i][1] * sol.x[1] - s.b[i]));
    }
    residual.update(r, std::to_string(n) + "x2 #" + std::to_string(systems));
    if (n == 2) {
      const sle::Solution direct = sle::solve_direct(s), pseudo = sle::solve_pseudo(s);
      const double scale = std::max(std::abs(direct.x[0]), std::abs(direct.x[1]));
      agreement.update(std::max(rel_diff(direct.x[0], pseudo.x[0], scale),
                                rel_diff(direct.x[1], pseudo.x[1], scale)),
                       "2x2 #" + std::to_string(systems));
    }
  }
  return {residual.value() < 1e-9 && agreement.value() < 1e-10,
          "10000 systems; max residual " + residual.str() + "; pseudo vs direct " +
              agreement.str()};
}

Outcome oracle_equivalence() {
  const auto configs = random_configs(202, 500);
  std::mt19937_64 rng(203);
  std::uniform_real_distribution<double> shift(-1.0, 2.0), dx(-2.0, 3.0), unit(0.0, 1.0);
  Worst worst;
  int compared = 0, mismatched_kind = 0;
  std::string kind_note;

  for (std::size_t n = 0; n < configs.size(); ++n) {
    const CameraConfig c = validate_config(configs[n]);
    const oracle::Params op = test_support::oracle_params(configs[n]);
    const std::string tag = "config " + std::to_string(n);

    for (int t = 0; t < 4; ++t) {
      const double a = shift(rng);
      const auto o = oracle::refocus(op, a);
      const bool oracle_real = o && o->b > op.fu;
      try {
        const RefocusResult r = refocus(c, a);
        if (!oracle_real) {
          ++mismatched_kind;
          kind_note = tag + " a=" + fmt("%g", a);
          continue;
        }
        // Elongation is a small difference; its natural scale is b_U.
        worst.update(rel_diff(r.elongation, o->elongation, op.bu), tag + " d_a'");
        worst.update(rel_diff(r.effective_image_distance, o->b), tag + " b_a");
        worst.update(rel_diff(r.object_distance_from_h1u.mm(), o->d_h1u), tag + " d_a");
        worst.update(rel_diff(r.distance_from_mla.mm(), o->d_mla), tag + " d_a mla");
        ++compared;
      } catch (const Error& e) {
        if (oracle_real || e.code() != ErrorCode::VirtualRefocusPlane) {
          ++mismatched_kind;
          kind_note = tag + " a=" + fmt("%g", a) + " " + std::string(e.name());
        }
        continue;
      }
      if (std::abs(a) < RefocusOptions{}.a_min) continue;
      const auto inner = oracle::refocus(op, a, 0.5), outer = oracle::refocus(op, a, -0.5);
      const auto& near = inner->b > outer->b ? inner : outer;
      const auto& far = inner->b > outer->b ? outer : inner;
      try {
        const DepthOfField dof = refocus_dof(c, a);
        worst.update(rel_diff(dof.near_from_h1u.mm(), near->d_h1u), tag + " dof near");
        if (far->b > op.fu) {
          worst.update(rel_diff(dof.far_from_h1u.mm(), far->d_h1u), tag + " dof far");
        } else if (!dof.far_from_h1u.is_infinite()) {
          ++mismatched_kind;
          kind_note = tag + " dof far should be infinite";
        }
        ++compared;
      } catch (const Error& e) {
        if (near->b > op.fu) {
          ++mismatched_kind;
          kind_note = tag + " dof " + std::string(e.name());
        }
      }
    }

    const double half = (configs[n].micro_image_resolution - 1) / 2.0;
    // Transverse scale for the viewpoint heights (y = 0 on the axis).
    const double y_scale = configs[n].pixel_pitch * configs[n].main_lens_focal /
                           configs[n].micro_lens_focal;
    for (int t = 0; t < 3; ++t) {
      const double i = -half + 2 * half * unit(rng);
      const double j = std::floor(-20 + 41 * unit(rng));
      const Viewpoint v = viewpoint(c, i, j);
      const auto o = oracle::viewpoint(op, i, j);
      worst.update(rel_diff(v.z_pupil, o->z), tag + " pupil z");
      worst.update(rel_diff(v.y, o->y, y_scale), tag + " viewpoint y");
      ++compared;
    }

    for (int t = 0; t < 3; ++t) {
      int gap = static_cast<int>(std::floor(-6 + 13 * unit(rng)));
      if (gap == 0) gap = 1;
      const double d = dx(rng);
      const auto o = oracle::triangulate(op, gap, d);
      try {
        const DepthPlane p = triangulate(c, gap, d);
        if (p.from_h1u.is_infinite()) {
          if (o) {
            ++mismatched_kind;
            kind_note = tag + " Z infinite";
          }
          continue;
        }
        if (!o || o->z <= 0) {
          ++mismatched_kind;
          kind_note = tag + " Z real";
          continue;
        }
        worst.update(rel_diff(p.from_h1u.mm(), o->z), tag + " Z");
        ++compared;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::VirtualPlane || (o && o->z > 0)) {
          ++mismatched_kind;
          kind_note = tag + " Z " + std::string(e.name());
        }
      }
    }
  }
  std::string detail = "500 configs, " + std::to_string(compared) + " comparisons; max rel " +
                       worst.str();
  if (mismatched_kind) {
    detail += "; " + std::to_string(mismatched_kind) + " classification mismatches, last " + kind_note;
  }
  return {worst.value() < 1e-9 && mismatched_kind == 0, detail};
}

Outcome focus_plane_coincidence() {
  auto configs = random_configs(303, 500);
  configs.push_back(default_raw_config());
  Worst worst;
  for (std::size_t n = 0; n < configs.size(); ++n) {
    const CameraConfig c = validate_config(configs[n]);
    const double d0 = refocus(c, 0.0).object_distance_from_h1u.mm();
    for (int gap : {1, 2, 3}) {
      worst.update(rel_diff(triangulate(c, gap, 0.0).from_h1u.mm(), d0),
                   "config " + std::to_string(n) + " G=" + std::to_string(gap));
    }
  }
  return {worst.value() < 1e-9, "501 configs x G in {1,2,3}; max rel " + worst.str()};
}

Outcome pupil_invariance() {
  auto configs = random_configs(404, 50);
  configs.push_back(default_raw_config());
  Worst pupil, linear;
  for (std::size_t n = 0; n < configs.size(); ++n) {
    const CameraConfig c = validate_config(configs[n]);
    const std::string tag = "config " + std::to_string(n);
    const double z0 = viewpoint(c, 0.0).z_pupil;
    for (int i = -8; i <= 8; ++i) {
      for (int j = -20; j <= 20; ++j) {
        pupil.update(rel_diff(viewpoint(c, i, j).z_pupil, z0),
                     tag + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
    }
    const double b1 = baseline(c, 1).baseline;
    for (int g = -8; g <= 8; ++g) {
      const double bg = baseline(c, g).baseline;
      linear.update(g == 0 ? std::abs(bg) : rel_diff(bg, g * b1), tag + " G=" + std::to_string(g));
    }
  }
  return {pupil.value() < 1e-9 && linear.value() < 1e-9,
          "51 configs; pupil z spread " + pupil.str() + "; B_G vs G*B_1 " + linear.str()};
}

Outcome telecentric_limit() {
  RawConfig raw = default_raw_config();
  raw.exit_pupil_distance = 1e12;
  const CameraConfig c = validate_config(raw);
  const TriangulationResult t = baseline(c, 1);
  const double expected_b = raw.pixel_pitch * raw.main_lens_focal / raw.micro_lens_focal;
  const double db = rel_diff(t.baseline, expected_b);
  const double dz = rel_diff(t.entrance_pupil_from_h1u, raw.main_lens_focal);
  return {db < 1e-6 && dz < 1e-6,
          "B_1 = " + fmt("%.9f", t.baseline) + " (rel " + fmt("%.2g", db) + "), pupil z = " +
              fmt("%.9f", t.entrance_pupil_from_h1u) + " (rel " + fmt("%.2g", dz) + ")"};
}

Outcome default_refocus_behavior() {
  const CameraConfig c = default_config();
  const double d0 = refocus(c, 0.0).distance_from_mla.mm();
  bool monotone = true;
  double previous = INFINITY;
  for (int step = 0; step <= 20; ++step) {
    const double d = refocus(c, step * 0.1).distance_from_mla.mm();
    monotone = monotone && d < previous;
    previous = d;
  }
  const double d1 = refocus(c, 1.0).distance_from_mla.mm();
  const DepthOfField dof = refocus_dof(c, 1.0);
  const double near = dof.near_from_mla.mm(), far = dof.far_from_mla.mm();
  const bool values = std::abs(d0 - 1016.26) < 0.01 && std::abs(near - 528.5) < 0.05 &&
                      std::abs(d1 - 561.3) < 0.05 && std::abs(far - 590.0) < 0.05;
  return {values && monotone && near < d1 && d1 < far,
          "d_a(0) = " + fmt("%.4f", d0) + " mm; strictly decreasing over a = 0..2 step 0.1: " +
              (monotone ? "yes" : "no") + "; a=1 DOF " + fmt("%.4f", near) + " < " +
              fmt("%.4f", d1) + " < " + fmt("%.4f", far) + " mm"};
}

Outcome homogeneity() {
  auto configs = random_configs(505, 200);
  configs.push_back(default_raw_config());
  // Distances this far out come from nearly parallel rays or b close to f_U;
  // their sensitivity to the rounding of the scaled inputs grows like d / f_U.
  constexpr double kFarPlane = 1e3;
  Worst worst, near_field;
  double far_plane = 0.0;
  const std::vector<double> shifts{-0.5, 0.5, 1.0, 2.0};
  const std::vector<double> disparities{-0.5, 0.0, 1.0, 2.5};
  auto record = [&](double dev, const std::string& where, bool far = false) {
    worst.update(dev, where);
    if (!far) near_field.update(dev, where);
  };
  double focal = 0.0;
  auto distance = [&](Distance a, Distance b, double k, const std::string& where) {
    if (a.is_infinite() || b.is_infinite()) {
      record(a.is_infinite() == b.is_infinite() ? 0.0 : INFINITY, where, true);
      return;
    }
    const bool far = std::abs(a.mm()) > kFarPlane * focal;
    if (far) far_plane = std::max(far_plane, std::abs(a.mm()) / focal);
    record(rel_diff(b.mm(), k * a.mm()), where, far);
  };
  for (std::size_t n = 0; n < configs.size(); ++n) {
    const CameraConfig base = validate_config(configs[n]);
    focal = configs[n].main_lens_focal;
    for (double k : {0.1, 10.0}) {
      const CameraConfig s = validate_config(scaled(configs[n], k));
      const std::string tag = "config " + std::to_string(n) + " k=" + fmt("%g", k);
      record(rel_diff(s.image_distance(), k * base.image_distance()), tag + " b_U");
      const auto r0 = refocus_series(base, shifts), r1 = refocus_series(s, shifts);
      for (std::size_t i = 0; i < shifts.size(); ++i) {
        if (r0[i].ok() != r1[i].ok() || r0[i].dof.has_value() != r1[i].dof.has_value()) {
          record(INFINITY, tag + " refocus outcome");
          continue;
        }
        if (!r0[i].ok()) continue;
        const RefocusResult &a = *r0[i].result, &b = *r1[i].result;
        record(rel_diff(b.elongation, k * a.elongation), tag + " d_a'");
        record(rel_diff(b.effective_image_distance, k * a.effective_image_distance),
                     tag + " b_a");
        distance(a.object_distance_from_h1u, b.object_distance_from_h1u, k, tag + " d_a");
        distance(a.distance_from_mla, b.distance_from_mla, k, tag + " d_a mla");
        if (r0[i].dof) {
          distance(r0[i].dof->near_from_h1u, r1[i].dof->near_from_h1u, k, tag + " near");
          distance(r0[i].dof->far_from_h1u, r1[i].dof->far_from_h1u, k, tag + " far");
          distance(r0[i].dof->near_from_mla, r1[i].dof->near_from_mla, k, tag + " near mla");
          distance(r0[i].dof->far_from_mla, r1[i].dof->far_from_mla, k, tag + " far mla");
        }
      }
      for (int gap : {1, -6}) {
        const auto t0 = depth_plane_series(base, gap, disparities);
        const auto t1 = depth_plane_series(s, gap, disparities);
        record(rel_diff(t1.baseline, k * t0.baseline), tag + " B_G");
        record(rel_diff(t1.entrance_pupil_from_h1u, k * t0.entrance_pupil_from_h1u),
                     tag + " pupil");
        record(rel_diff(t1.entrance_pupil_from_mla, k * t0.entrance_pupil_from_mla),
                     tag + " pupil mla");
        for (std::size_t i = 0; i < disparities.size(); ++i) {
          if (t0.planes[i].ok() != t1.planes[i].ok()) {
            record(INFINITY, tag + " plane outcome");
            continue;
          }
          if (!t0.planes[i].ok()) continue;
          distance(t0.planes[i].plane->from_h1u, t1.planes[i].plane->from_h1u, k, tag + " Z");
          distance(t0.planes[i].plane->from_mla, t1.planes[i].plane->from_mla, k, tag + " Z mla");
        }
      }
    }
  }
  std::string detail = "201 configs x k in {0.1, 10}; max rel " + worst.str();
  if (worst.value() >= 1e-12) {
    detail += "; excluding distances beyond 1e3 f_U (farthest " + fmt("%.3g", far_plane) +
              " f_U) max rel " + near_field.str();
  }
  return {worst.value() < 1e-12, detail};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome figure_structure() {
  const CameraConfig c = default_config();
  std::vector<std::string> problems;

  const std::vector<double> a1{1.0};
  const scene::Scene refocus_scene = scene::build_refocus_scene(c, a1);
  std::set<std::string> planes;
  for (const auto& e : refocus_scene.elements) {
    if (e.type == scene::ElementType::Plane) planes.insert(e.id);
  }
  const std::set<std::string> expected{"sensor", "mla", "H2U", "H1U", "FU",
                                       "d_a:1",  "d_a-:1", "d_a+:1"};
  if (planes != expected) problems.push_back("refocus plane set differs");

  const std::vector<double> dx{-1.0, 0.0, 1.0, 2.0};
  const scene::Scene tri = scene::build_triangulation_scene(c, -6, dx);
  int z_planes = 0;
  for (const auto& e : tri.elements) {
    if (e.type == scene::ElementType::Plane && e.id.rfind("Z:-6:", 0) == 0) {
      ++z_planes;
      if (e.label.find("G=-6") == std::string::npos) problems.push_back(e.id + " unlabeled");
    }
  }
  if (z_planes != 4) problems.push_back("expected 4 Z planes for G=-6, got " + std::to_string(z_planes));
  if (!tri.find("viewpoint:-6")) problems.push_back("viewpoint:-6 missing");

  const std::string dir = PLENOPTIC_GOLDEN_DIR;
  const std::string json1 = scene::serialize_scene(refocus_scene);
  const std::string svg1 = scene::render_svg(refocus_scene);
  const std::string tri1 = scene::serialize_scene(tri);
  const scene::Scene again = scene::build_refocus_scene(c, a1);
  if (scene::serialize_scene(again) != json1 || scene::render_svg(again) != svg1 ||
      scene::serialize_scene(scene::build_triangulation_scene(c, -6, dx)) != tri1) {
    problems.push_back("not byte-stable across runs");
  }
  if (json1 != read_file(dir + "/refocus_default_a1.json")) problems.push_back("refocus JSON != golden");
  if (svg1 != read_file(dir + "/refocus_default_a1.svg")) problems.push_back("SVG != golden");
  if (tri1 != read_file(dir + "/triangulation_default_g-6.json")) {
    problems.push_back("triangulation JSON != golden");
  }
  if (scene::serialize_scene(scene::parse_scene(json1)) != json1) problems.push_back("round trip");

  std::string detail = "a=1 planes {sensor, mla, H2U, H1U, FU, d_a, d_a-, d_a+}; G=-6 with " +
                       std::to_string(z_planes) + " labeled Z planes; 3 golden files byte-identical";
  if (!problems.empty()) {
    detail = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) detail += "; " + problems[i];
  }
  return {problems.empty(), detail};
}

struct Process {
  int status = -1;
  std::string out;
};

Process run_cli(const std::string& args) {
  Process p;
  const std::string cmd = std::string(PLENOPTIC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, got);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

Outcome cli_service_round_trip() {
  service::Server server;
  const int port = server.bind("127.0.0.1", 0);
  if (port <= 0) return {false, "could not bind a loopback port"};
  std::thread thread([&] { server.listen(); });
  for (int n = 0; n < 400 && !server.running(); ++n) {
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  httplib::Client client("127.0.0.1", port);
  client.set_read_timeout(20);

  std::vector<std::string> problems;
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("plenoptic-acceptance-" + std::to_string(::getpid()) + ".json");
  auto configs = random_configs(606, 12);
  configs.insert(configs.begin(), default_raw_config());
  const std::vector<double> shifts{-2.0, 0.0, 0.5, 1.0, 2.0};
  const std::vector<double> disparities{-2.0, 0.0, 1.0, 1.5};
  int fields = 0;

  for (std::size_t n = 0; n < configs.size(); ++n) {
    const json cfg = api::to_json(configs[n]);
    std::ofstream(tmp) << cfg.dump();
    for (int gap : {1, -6}) {
      std::string args = "--config " + tmp.string() + " --gap " + std::to_string(gap);
      for (double a : shifts) args += " --shift " + fmt("%.17g", a);
      for (double d : disparities) args += " --disparity " + fmt("%.17g", d);
      const Process p = run_cli(args + " --output json");
      if (p.status != 0) {
        problems.push_back("cli exit " + std::to_string(p.status) + " for config " + std::to_string(n));
        continue;
      }
      const json cli = json::parse(p.out);
      const auto r = client.Post("/api/v1/refocus",
                                 json{{"config", cfg}, {"a_list", shifts}}.dump(), "application/json");
      const auto t = client.Post("/api/v1/triangulate",
                                 json{{"config", cfg}, {"G", gap}, {"dx_list", disparities}}.dump(),
                                 "application/json");
      if (!r || !t) {
        problems.push_back("http request failed");
        continue;
      }
      const json rj = json::parse(r->body), tj = json::parse(t->body);
      const std::string where = " (config " + std::to_string(n) + ", G=" + std::to_string(gap) + ")";
      if (cli.at("config") != rj.at("result").at("config")) problems.push_back("config differs" + where);
      if (cli.at("config") != tj.at("result").at("config")) problems.push_back("config differs" + where);
      if (cli.at("refocus") != rj.at("result").at("refocus")) problems.push_back("refocus differs" + where);
      if (cli.at("triangulation") != tj.at("result").at("triangulation")) {
        problems.push_back("triangulation differs" + where);
      }
      fields += static_cast<int>(cli.flatten().size());
    }
  }

  // Malformed input: CLI exit 2, HTTP 400, both naming the error.
  std::ofstream(tmp) << "{\"pixel_pitch\": 0.0014,,}";
  const Process bad_file = run_cli("--config " + tmp.string());
  const Process bad_flag = run_cli("--unknown-flag");
  std::filesystem::remove(tmp);
  if (bad_file.status != 2) problems.push_back("malformed config file exit " + std::to_string(bad_file.status));
  if (bad_flag.status != 2) problems.push_back("unknown flag exit " + std::to_string(bad_flag.status));

  const json cfg = api::to_json(default_raw_config());
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> bad_requests{
      {"InvalidJson", {"/api/v1/refocus", "{\"config\": "}},
      {"EmptySeries", {"/api/v1/refocus", json{{"config", cfg}, {"a_list", json::array()}}.dump()}},
      {"InvalidGap", {"/api/v1/triangulate", json{{"config", cfg}, {"G", 0}, {"dx_list", {0}}}.dump()}},
      {"UnknownField", {"/api/v1/refocus", json{{"config", cfg}, {"a_list", {1}}, {"x", 1}}.dump()}},
  };
  for (const auto& [name, req] : bad_requests) {
    const auto res = client.Post(req.first, req.second, "application/json");
    if (!res || res->status != 400) {
      problems.push_back(name + ": expected HTTP 400");
      continue;
    }
    const json body = json::parse(res->body, nullptr, false);
    if (body.is_discarded() || body.value("ok", true) ||
        body["error"].value("name", std::string()) != name) {
      problems.push_back(name + ": structured error missing");
    }
  }

  server.stop();
  thread.join();
  std::string detail = std::to_string(configs.size() * 2) + " CLI/HTTP pairs, " +
                       std::to_string(fields) + " leaf fields identical; malformed input -> exit 2 / HTTP 400 with error names";
  if (!problems.empty()) {
    detail = std::to_string(problems.size()) + " problem(s), first: " + problems.front();
  }
  return {problems.empty(), detail};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> check;
};

}  // namespace

// --allow-fail=NAME keeps a documented failing criterion from failing the
// run. Its line still reads FAIL.
int main(int argc, char** argv) {
  std::set<std::string> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--allow-fail=", 0) == 0) {
      allowed.insert(arg.substr(13));
    } else {
      std::cerr << "usage: acceptance [--allow-fail=NAME]...\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {"sle-fidelity", sle_fidelity},
      {"oracle-equivalence", oracle_equivalence},
      {"focus-plane-coincidence", focus_plane_coincidence},
      {"pupil-invariance", pupil_invariance},
      {"telecentric-limit", telecentric_limit},
      {"default-refocus-behavior", default_refocus_behavior},
      {"homogeneity", homogeneity},
      {"figure-structure", figure_structure},
      {"cli-service-round-trip", cli_service_round_trip},
  };
  int failed = 0, blocking = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    blocking += !o.pass && !allowed.count(c.name);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed (kernel backend: "
            << kernels::backend_name(kernels::default_backend()) << ")" << std::endl;
  return blocking == 0 ? 0 : 1;
}
