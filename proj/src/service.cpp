#include "plenoptic/service.hpp"

#include <charconv>
#include <cstdlib>
#include <iostream>

#include "httplib.h"
#include "plenoptic/api.hpp"
#include "plenoptic/scene.hpp"

namespace plenoptic::service {

using nlohmann::json;

namespace {

Response json_response(int status, const json& body) { return {status, body.dump(2) + "\n"}; }

Response error_response(int status, std::string_view name, std::string_view message) {
  return json_response(status, {{"ok", false}, {"error", {{"name", name}, {"message", message}}}});
}

Response error_response(const Error& e) { return error_response(400, e.name(), e.what()); }

json parse_body(std::string_view body) {
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::InvalidJson, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::InvalidJson, std::string("malformed JSON: ") + e.what());
  }
}

void reject_unknown(const json& j, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorCode::UnknownField, "unknown request field '" + key + "'");
    }
  }
}

const json& required(const json& j, const char* field) {
  if (!j.contains(field)) {
    throw Error(ErrorCode::MissingField, std::string("request field '") + field + "' is missing");
  }
  return j.at(field);
}

bool include_scene(const json& j) {
  if (!j.contains("include_scene")) return false;
  if (!j.at("include_scene").is_boolean()) {
    throw Error(ErrorCode::InvalidJson, "include_scene must be a boolean");
  }
  return j.at("include_scene").get<bool>();
}

json scene_json(const scene::Scene& s) { return json::parse(scene::serialize_scene(s)); }

}  // namespace

Response handle_refocus(std::string_view body) {
  try {
    const json req = parse_body(body);
    reject_unknown(req, {"config", "a_list", "include_scene"});
    const CameraConfig config = validate_config(api::raw_config_from_json(required(req, "config")));
    const std::vector<double> shifts = api::number_list(required(req, "a_list"), "a_list");
    const bool with_scene = include_scene(req);

    const auto series = refocus_series(config, shifts);
    const bool failed = api::any_failure(series);
    json out = {{"ok", !failed},
                {"result",
                 {{"config", api::resolved_config_json(config)},
                  {"refocus", api::refocus_json(series)}}}};
    if (with_scene) out["scene"] = scene_json(scene::build_refocus_scene(config, shifts));
    return json_response(failed ? 422 : 200, out);
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response handle_triangulate(std::string_view body) {
  try {
    const json req = parse_body(body);
    reject_unknown(req, {"config", "G", "dx_list", "include_scene"});
    const CameraConfig config = validate_config(api::raw_config_from_json(required(req, "config")));
    const json& g = required(req, "G");
    if (!g.is_number_integer()) throw Error(ErrorCode::InvalidJson, "G must be an integer");
    const long long gap_wide = g.get<long long>();
    if (gap_wide < -1000000 || gap_wide > 1000000) {
      throw Error(ErrorCode::InvalidGap, "G out of range");
    }
    const int gap = static_cast<int>(gap_wide);
    const std::vector<double> disparities = api::number_list(required(req, "dx_list"), "dx_list");
    const bool with_scene = include_scene(req);

    const TriangulationResult tri = depth_plane_series(config, gap, disparities);
    const bool failed = api::any_failure(tri);
    json out = {{"ok", !failed},
                {"result",
                 {{"config", api::resolved_config_json(config)},
                  {"triangulation", api::triangulation_json(tri)}}}};
    if (with_scene) out["scene"] = scene_json(scene::build_triangulation_scene(config, gap, disparities));
    return json_response(failed ? 422 : 200, out);
  } catch (const Error& e) {
    return error_response(e);
  }
}

Response handle_defaults() {
  return json_response(200, {{"ok", true}, {"result", {{"config", api::to_json(default_raw_config())}}}});
}

Response handle_health() { return {200, "ok", "text/plain"}; }

struct Server::Impl {
  httplib::Server http;
};

Server::Server(Options options) : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  http.set_default_headers({{"Access-Control-Allow-Origin", options.cors_origin},
                            {"Access-Control-Allow-Headers", "Content-Type"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  const auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  http.Post("/api/v1/refocus", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_refocus(req.body));
  });
  http.Post("/api/v1/triangulate", [reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, handle_triangulate(req.body));
  });
  http.Get("/api/v1/defaults", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_defaults());
  });
  http.Get("/healthz", [reply](const httplib::Request&, httplib::Response& res) {
    reply(res, handle_health());
  });
  http.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const Response r = error_response(res.status, res.status == 404 ? "NotFound" : "HttpError",
                                      httplib::status_message(res.status));
    res.set_content(r.body, r.content_type);
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

bool Server::running() const { return impl_->http.is_running(); }

Address parse_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "address must be HOST:PORT");
  }
  Address a;
  a.host = std::string(text.substr(0, colon));
  if (a.host.empty()) a.host = "127.0.0.1";
  const std::string_view port = text.substr(colon + 1);
  const auto res = std::from_chars(port.data(), port.data() + port.size(), a.port);
  if (res.ec != std::errc{} || res.ptr != port.data() + port.size() || a.port < 0 || a.port > 65535) {
    throw Error(ErrorCode::InvalidArgument, "invalid port '" + std::string(port) + "'");
  }
  return a;
}

int serve(const Address& address) {
  Options options;
  if (const char* origin = std::getenv("CORS_ORIGIN")) options.cors_origin = origin;
  Server server(options);
  const int port = server.bind(address.host, address.port);
  if (port < 0) {
    std::cerr << "error: cannot bind " << address.host << ":" << address.port << "\n";
    return 1;
  }
  std::cerr << "listening on " << address.host << ":" << port << "\n";
  return server.listen() ? 0 : 1;
}

}  // namespace plenoptic::service
