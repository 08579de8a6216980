#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace plenoptic::service {

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Endpoint logic, independent of the transport.
Response handle_refocus(std::string_view body);      // POST /api/v1/refocus
Response handle_triangulate(std::string_view body);  // POST /api/v1/triangulate
Response handle_defaults();                          // GET  /api/v1/defaults
Response handle_health();                            // GET  /healthz

struct Options {
  std::string cors_origin = "*";
};

/// HTTP server exposing the endpoints. Stateless; safe for concurrent requests.
class Server {
 public:
  explicit Server(Options options = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds host:port (port 0 picks a free port). Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  bool listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct Address {
  std::string host;
  int port = 0;
};

/// "HOST:PORT" or ":PORT". Throws Error(InvalidArgument).
Address parse_address(std::string_view text);

/// Binds and blocks. CORS origin is taken from CORS_ORIGIN when set.
int serve(const Address& address);

}  // namespace plenoptic::service
