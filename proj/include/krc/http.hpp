#pragma once
// JSON over HTTP for the session store. Needs httplib.h on the include path.

#include <httplib.h>

#include "krc/service.hpp"

namespace krc {

namespace http_detail {

inline void reply(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class F>
void guarded(httplib::Response& res, F&& f) {
  try {
    reply(res, 200, f());
  } catch (const ServiceError& e) {
    reply(res, e.status, error_body(e));
  } catch (const json::exception& e) {
    reply(res, 400, {{"error", "bad request"}, {"detail", e.what()}});
  } catch (const std::exception& e) {
    reply(res, 500, {{"error", "internal"}, {"detail", e.what()}});
  }
}

inline json body_of(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  auto j = json::parse(req.body, nullptr, false);
  if (j.is_discarded()) throw ServiceError(400, "bad request", "body is not JSON");
  return j;
}

inline int int_field(const json& b, const char* key) {
  if (!b.contains(key) || !b.at(key).is_number_integer())
    throw ServiceError(400, "bad request", std::string("integer field '") + key + "' required");
  return b.at(key).get<int>();
}

}  // namespace http_detail

inline void mount_routes(httplib::Server& srv, SessionStore& store) {
  using namespace http_detail;
  const std::string id = R"(/session/([A-Za-z0-9]+))";

  srv.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.create(body_of(req)); });
  });
  srv.Get(id, [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.state(req.matches[1]); });
  });
  srv.Post(id + "/mutate", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      int k = int_field(body_of(req), "k");
      return store.change(req.matches[1], [k](Session& s) { s.mutate(k); });
    });
  });
  srv.Post(id + "/boxmove", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      int s = int_field(body_of(req), "s");
      return store.change(req.matches[1], [s](Session& x) { x.boxmove(s); });
    });
  });
  srv.Post(id + "/undo", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.change(req.matches[1], [](Session& s) { s.undo(); }); });
  });
  srv.Get(id + "/quiver", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      std::string fmt = req.has_param("format") ? req.get_param_value("format") : "json";
      if (fmt != "json" && fmt != "dot") throw ServiceError(400, "bad request", "format must be json or dot");
      auto Q = store.with(req.matches[1], [](Session& s) { return s.quiver(); });
      if (fmt == "dot") return json{{"format", "dot"}, {"dot", export_dot(Q, true)}};
      json j = quiver_json(Q);
      j["format"] = "json";
      return j;
    });
  });
  srv.Get(id + "/variables", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return store.with(req.matches[1], [](Session& s) { return s.variables(); }); });
  });
  srv.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty())
      reply(res, res.status, {{"error", res.status == 404 ? "not found" : "bad request"}, {"detail", "no such route"}});
  });
}

}  // namespace krc
