#pragma once
// JSON forms of the data types. Big coefficients travel as decimal strings.

#include <nlohmann/json.hpp>

#include "krc/tsystem_seed.hpp"

namespace krc {

using json = nlohmann::json;

inline json to_json(const HatIndex& x) { return json::array({x.node, x.p}); }
inline json to_json(const IBox& x) { return json::array({x.a, x.b}); }

inline IBox ibox_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("box must be [a, b]");
  return {j[0].get<long>(), j[1].get<long>()};
}

inline json to_json(const QDatum& q) { return {{"type", short_tag(q.datum)}, {"xi", q.xi}}; }

inline QDatum q_datum_from_json(const json& j) {
  return make_q_datum(folded_datum(j.at("type").get<std::string>()), j.at("xi").get<std::vector<int>>());
}

inline json to_json(const AdmissibleSequence& s) {
  return {{"type", short_tag(s.datum())}, {"period_i", s.period_i()}, {"period_p", s.period_p()}};
}

// {type, period_i, period_p} | {type, xi, word?} | {type} (default sequence)
inline AdmissibleSequence sequence_from_json(const json& j) {
  auto D = folded_datum(j.at("type").get<std::string>());
  if (j.contains("period_i"))
    return AdmissibleSequence(D, j.at("period_i").get<std::vector<Node>>(), j.at("period_p").get<std::vector<int>>());
  if (j.contains("xi")) {
    auto q = make_q_datum(D, j.at("xi").get<std::vector<int>>());
    if (j.contains("word")) return from_q_datum(q, j.at("word").get<WeylWord>());
    return from_q_datum(q);
  }
  return default_sequence(D);
}

inline json to_json(const Chain& c) {
  auto t = to_string(c);
  return {{"a", c.base}, {"code", t.substr(t.find(':') + 1)}};
}

inline Chain chain_from_json(const json& j) {
  if (j.is_string()) return parse_chain(j.get<std::string>());
  return parse_chain(std::to_string(j.at("a").get<long>()) + ":" + j.at("code").get<std::string>());
}

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"c", c.str()}, {"e", e}});
  return terms;
}

inline LaurentPoly laurent_from_json(const json& j, int nvars) {
  LaurentPoly p(nvars);
  for (const auto& t : j) {
    auto e = t.at("e").get<Exponent>();
    if (static_cast<int>(e.size()) != nvars) throw Error("exponent length mismatch");
    p += LaurentPoly::monomial(e, BigInt(t.at("c").get<std::string>()));
  }
  return p;
}

inline json to_json(const ExchangeMatrix& B) {
  json t = json::array();
  for (auto [i, j, v] : B.triplets()) t.push_back({i, j, v});
  std::vector<bool> ex;
  for (int k = 0; k < B.size(); ++k) ex.push_back(B.exchangeable(k));
  return {{"n", B.size()}, {"entries", t}, {"exchangeable", ex}};
}

inline ExchangeMatrix matrix_from_json(const json& j) {
  ExchangeMatrix B(j.at("n").get<int>());
  for (const auto& t : j.at("entries")) B.set(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  auto ex = j.at("exchangeable").get<std::vector<bool>>();
  for (size_t k = 0; k < ex.size(); ++k) B.set_exchangeable(static_cast<int>(k), ex[k]);
  return B;
}

inline json to_json(const Seed& s) {
  json j{{"matrix", to_json(s.B)}, {"vars", json::array()}};
  for (const auto& v : s.vars) j["vars"].push_back(to_json(v));
  if (s.lambda) j["lambda"] = *s.lambda;
  return j;
}

inline Seed seed_from_json(const json& j) {
  Seed s{{}, matrix_from_json(j.at("matrix")), std::nullopt};
  for (const auto& v : j.at("vars")) s.vars.push_back(laurent_from_json(v, s.size()));
  if (j.contains("lambda")) s.lambda = j.at("lambda").get<IntMatrix>();
  return s;
}

template <class V>
json quiver_json(const Quiver<V>& Q) {
  json vs = json::array(), as = json::array();
  for (const auto& v : Q.vertices) vs.push_back(vertex_text(v));
  for (const auto& [x, y] : Q.arrows) as.push_back({vertex_text(x), vertex_text(y)});
  return {{"vertices", vs}, {"arrows", as}};
}

}  // namespace krc
