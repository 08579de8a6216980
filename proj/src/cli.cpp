#include "plenoptic/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "plenoptic/api.hpp"
#include "plenoptic/scene.hpp"
#include "plenoptic/service.hpp"

namespace plenoptic::cli {

using nlohmann::json;

namespace {

constexpr const char* kDefaultServeAddress = "127.0.0.1:8080";

// Raised for exit-2 conditions discovered after flag parsing.
struct UsageError {
  std::string message;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string num(Distance d) { return d.is_infinite() ? "inf" : num(d.mm()); }

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_num(Distance d) { return d.is_infinite() ? "inf" : csv_num(d.mm()); }

std::pair<int, int> line_and_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

RawConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read config file '" + path + "'"};
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw UsageError{"InvalidJson: " + path + ":" + std::to_string(line) + ":" +
                     std::to_string(col) + ": malformed JSON"};
  }
  try {
    return api::raw_config_from_json(j);
  } catch (const Error& e) {
    throw UsageError{std::string(e.name()) + ": " + path + ": " + e.what()};
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
}

void print_text(std::ostream& out, const CameraConfig& config,
                const std::vector<RefocusEntry>& series, const TriangulationResult& tri) {
  out << "Camera\n";
  out << "  image distance b_U      " << num(config.image_distance()) << " mm (H2U to MLA)\n";
  out << "  focus distance d_f      " << num(config.focus_distance()) << " mm from H1U\n";
  out << "  H1U position            " << num(config.h1u_position()) << " mm from MLA\n";
  out << "Refocusing\n";
  for (const RefocusEntry& e : series) {
    out << "  a = " << csv_num(e.a) << ": ";
    if (!e.ok()) {
      out << e.failure->name() << " (" << e.failure->message << ")\n";
      continue;
    }
    const RefocusResult& r = *e.result;
    out << "d_a = " << num(r.object_distance_from_h1u) << " mm from H1U, "
        << num(r.distance_from_mla) << " mm from MLA; d_a' = " << num(r.elongation) << " mm";
    if (e.dof) {
      out << "; DOF " << num(e.dof->near_from_mla) << " .. " << num(e.dof->far_from_mla)
          << " mm from MLA";
    } else {
      out << "; DOF " << e.dof_failure->name();
    }
    out << "\n";
  }
  out << "Triangulation (G = " << tri.gap << ")\n";
  out << "  baseline B_G            " << num(tri.baseline) << " mm\n";
  out << "  entrance pupil          " << num(tri.entrance_pupil_from_h1u) << " mm from H1U, "
      << num(tri.entrance_pupil_from_mla) << " mm from MLA\n";
  for (const PlaneEntry& p : tri.planes) {
    out << "  dx = " << csv_num(p.disparity) << ": ";
    if (p.ok()) {
      out << "Z = " << num(p.plane->from_h1u) << " mm from H1U, " << num(p.plane->from_mla)
          << " mm from MLA\n";
    } else {
      out << p.failure->name() << " (" << p.failure->message << ")\n";
    }
  }
}

void print_csv(std::ostream& out, const std::vector<RefocusEntry>& series,
               const TriangulationResult& tri) {
  out << "kind,parameter,distance_from_h1u,distance_from_mla,dof_near_from_mla,dof_far_from_mla,"
         "baseline_mm,error\n";
  for (const RefocusEntry& e : series) {
    out << "refocus," << csv_num(e.a) << ",";
    if (!e.ok()) {
      out << ",,,,," << e.failure->name() << "\n";
      continue;
    }
    out << csv_num(e.result->object_distance_from_h1u) << ","
        << csv_num(e.result->distance_from_mla) << ",";
    if (e.dof) out << csv_num(e.dof->near_from_mla) << "," << csv_num(e.dof->far_from_mla);
    else out << ",";
    out << ",,\n";
  }
  for (const PlaneEntry& p : tri.planes) {
    out << "triangulation," << csv_num(p.disparity) << ",";
    if (p.ok()) {
      out << csv_num(p.plane->from_h1u) << "," << csv_num(p.plane->from_mla) << ",,,"
          << csv_num(tri.baseline) << ",\n";
    } else {
      out << ",,,," << csv_num(tri.baseline) << "," << p.failure->name() << "\n";
    }
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plenoptic camera design calculator: refocusing planes, depth of field, "
               "baselines and triangulation depth planes. All lengths in mm."};
  app.set_version_flag("--version", kVersion);

  RawConfig flags;
  std::optional<double> focus_dist, image_dist;
  auto* pitch_pixel = app.add_option("--pitch-pixel", flags.pixel_pitch, "pixel pitch p_p");
  auto* pitch_mla = app.add_option("--pitch-mla", flags.micro_lens_pitch, "micro lens pitch p_m");
  auto* focal_mla = app.add_option("--focal-mla", flags.micro_lens_focal, "micro lens focal length f_s");
  auto* micro_res = app.add_option("--micro-res", flags.micro_image_resolution,
                                   "pixels per micro image in one dimension (M)");
  auto* focal_main = app.add_option("--focal-main", flags.main_lens_focal, "main lens focal length f_U");
  auto* hiatus = app.add_option("--hiatus", flags.hiatus, "principal plane separation d_H");
  auto* exit_pupil = app.add_option("--exit-pupil", flags.exit_pupil_distance,
                                    "exit pupil distance from the MLA");
  app.add_option("--focus-dist", focus_dist, "focus distance from H1U");
  app.add_option("--image-dist", image_dist, "main lens image distance b_U (H2U to MLA)");

  std::vector<double> shifts{1.0};
  std::vector<double> disparities{1.0};
  int gap = 1;
  std::string output = "text";
  std::string plot_path, scene_path, scene_kind = "refocus", config_path, serve_addr;
  app.add_option("--shift", shifts, "refocus shift parameter a (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--gap", gap, "viewpoint gap G");
  app.add_option("--disparity", disparities, "disparity in micro lens units (repeatable)")
      ->expected(1)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app.add_option("--output", output, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--plot", plot_path, "write the refocusing cross-section as SVG");
  app.add_option("--scene", scene_path, "write a scene description as JSON");
  app.add_option("--scene-kind", scene_kind, "scene written by --scene")
      ->check(CLI::IsMember({"refocus", "triangulation"}));
  app.add_option("--config", config_path, "camera config JSON file (flags override it)");
  auto* serve = app.add_option("--serve", serve_addr,
                               "run the HTTP service on HOST:PORT (default: $SERVE_ADDR, "
                               "else 127.0.0.1:8080)")
                    ->expected(0, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (serve->count()) {
      if (serve_addr.empty()) {
        const char* env = std::getenv("SERVE_ADDR");
        serve_addr = env && *env ? env : kDefaultServeAddress;
      }
      return service::serve(service::parse_address(serve_addr));
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;
  }

  RawConfig raw = default_raw_config();
  try {
    if (!config_path.empty()) raw = load_config_file(config_path);
    if (focus_dist && image_dist) {
      throw UsageError{"BothOrNeitherFocusGiven: pass only one of --focus-dist and --image-dist"};
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return 2;
  }
  if (pitch_pixel->count()) raw.pixel_pitch = flags.pixel_pitch;
  if (pitch_mla->count()) raw.micro_lens_pitch = flags.micro_lens_pitch;
  if (focal_mla->count()) raw.micro_lens_focal = flags.micro_lens_focal;
  if (micro_res->count()) raw.micro_image_resolution = flags.micro_image_resolution;
  if (focal_main->count()) raw.main_lens_focal = flags.main_lens_focal;
  if (hiatus->count()) raw.hiatus = flags.hiatus;
  if (exit_pupil->count()) raw.exit_pupil_distance = flags.exit_pupil_distance;
  if (focus_dist) {
    raw.focus_distance = focus_dist;
    raw.image_distance.reset();
  }
  if (image_dist) {
    raw.image_distance = image_dist;
    raw.focus_distance.reset();
  }

  try {
    const CameraConfig config = validate_config(raw);
    const std::vector<RefocusEntry> series = refocus_series(config, shifts);
    const TriangulationResult tri = depth_plane_series(config, gap, disparities);

    if (!plot_path.empty()) {
      write_file(plot_path, scene::render_svg(scene::build_refocus_scene(config, shifts)));
    }
    if (!scene_path.empty()) {
      const scene::Scene s = scene_kind == "refocus"
                                 ? scene::build_refocus_scene(config, shifts)
                                 : scene::build_triangulation_scene(config, gap, disparities);
      write_file(scene_path, scene::serialize_scene(s));
    }

    if (output == "json") {
      const json doc = {{"config", api::resolved_config_json(config)},
                        {"refocus", api::refocus_json(series)},
                        {"triangulation", api::triangulation_json(tri)}};
      out << doc.dump(2) << "\n";
    } else if (output == "csv") {
      print_csv(out, series, tri);
    } else {
      print_text(out, config, series, tri);
    }
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace plenoptic::cli
