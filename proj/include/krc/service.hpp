#pragma once
// Sessions for the explorer: a config plus a move history. The current seed is
// always the replay of the history, so undo just replays one step less.

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>

#include "krc/serialize.hpp"

namespace krc {

struct ServiceError : Error {
  int status;
  std::string error;
  ServiceError(int st, std::string err, const std::string& detail)
      : Error(detail), status(st), error(std::move(err)) {}
};

inline json error_body(const ServiceError& e) { return {{"error", e.error}, {"detail", e.what()}}; }

class Session {
 public:
  // config: {type, seq?, range?, chain?}
  explicit Session(json config) : config_(std::move(config)) { rebuild(); }

  const json& config() const { return config_; }
  const std::vector<json>& history() const { return history_; }

  void mutate(int k) {
    apply({{"op", "mutate"}, {"k", k}});
    history_.push_back({{"op", "mutate"}, {"k", k}});
  }
  void boxmove(int s) {
    apply({{"op", "boxmove"}, {"s", s}});
    history_.push_back({{"op", "boxmove"}, {"s", s}});
  }
  void undo() {
    if (history_.empty()) throw ServiceError(409, "nothing to undo", "history is empty");
    history_.pop_back();
    rebuild();
  }
  void replay(const std::vector<json>& h) {
    for (const auto& op : h) {
      apply(op);
      history_.push_back(op);
    }
  }

  const BoxSeed& seed() const { return bs_; }
  bool attached() const { return attached_; }

  json state() const {
    const auto& seq = bs_.seq;
    json vs = json::array();
    for (int k = 0; k < bs_.seed.size(); ++k) {
      json v{{"index", k + 1}, {"exchangeable", bs_.seed.B.exchangeable(k)}};
      if (labels_[k]) {
        v["box"] = to_string(*labels_[k]);
        v["label"] = kr_label(seq, *labels_[k]).text;
      } else {
        v["box"] = nullptr;
        v["label"] = nullptr;
      }
      if (attached_ && movable(bs_.chain, k + 1))
        v["move"] = classify_move(seq, bs_.chain, k + 1).kind == MoveKind::TSystem ? "tsystem" : "transposition";
      else
        v["move"] = nullptr;
      vs.push_back(v);
    }
    const IBox& rg = range_;
    return {{"type", short_tag(seq.datum())},
            {"sequence", to_json(seq)},
            {"range", {rg.a, rg.b}},
            {"chain", attached_ ? json(to_string(bs_.chain)) : json(nullptr)},
            {"attached", attached_},
            {"size", bs_.seed.size()},
            {"vertices", vs},
            {"matrix", to_json(bs_.seed.B)},
            {"history", history_}};
  }

  json variables() const {
    auto names = bs_.variable_names();
    json out = json::array();
    for (int k = 0; k < bs_.seed.size(); ++k) {
      json v{{"index", k + 1},
             {"text", bs_.seed.vars[k].to_string(names)},
             {"terms", to_json(bs_.seed.vars[k])}};
      v["box"] = labels_[k] ? json(to_string(*labels_[k])) : json(nullptr);
      v["label"] = labels_[k] ? json(kr_label(bs_.seq, *labels_[k]).text) : json(nullptr);
      out.push_back(v);
    }
    return {{"names", names}, {"variables", out}};
  }

  // quiver of the current exchange matrix, vertices numbered from 1
  Quiver<int> quiver() const {
    auto Q = matrix_quiver(bs_.seed.B);
    for (auto& v : Q.vertices) ++v;
    for (auto& [x, y] : Q.arrows) ++x, ++y;
    return Q;
  }

 private:
  void rebuild() {
    const auto& c = config_;
    if (!c.is_object() || !c.contains("type")) throw ServiceError(400, "bad request", "config needs a type");
    try {
      json sj = c.value("seq", json("default"));
      if (sj.is_string()) {
        if (sj != "default") throw Error("seq must be \"default\" or an object");
        sj = json::object();
      }
      sj["type"] = c.at("type");
      auto seq = sequence_from_json(sj);
      Chain ch;
      if (c.contains("chain")) {
        ch = chain_from_json(c.at("chain"));
        if (c.contains("range") && range_of(ch) != ibox_from_json(c.at("range")))
          throw Error("chain does not cover the range");
      } else if (c.contains("range")) {
        IBox r = ibox_from_json(c.at("range"));
        ch = canonical_chain(r.a, r.b);
      } else {
        throw Error("config needs a chain or a range");
      }
      if (ch.length() > 64) throw Error("range too large for a session");
      bs_ = seed_from_chain(seq, ch);
    } catch (const ServiceError&) {
      throw;
    } catch (const std::exception& e) {
      throw ServiceError(400, "bad request", e.what());
    }
    range_ = range_of(bs_.chain);
    attached_ = true;
    labels_.assign(bs_.labels.begin(), bs_.labels.end());
    std::vector<json> h;
    h.swap(history_);
    replay(h);
  }

  void apply(const json& op) {
    const std::string kind = op.at("op");
    const int n = bs_.seed.size();
    if (kind == "mutate") {
      int k = op.at("k");
      if (k < 1 || k > n) throw ServiceError(400, "bad request", "index out of range: " + std::to_string(k));
      if (!bs_.seed.B.exchangeable(k - 1)) throw ServiceError(409, "frozen vertex", "vertex " + std::to_string(k) + " is frozen");
      bs_.seed = mutate_seed(bs_.seed, k - 1);
      // a bare mutation leaves the chain: the new variable has no box
      attached_ = false;
      labels_[k - 1].reset();
    } else if (kind == "boxmove") {
      int s = op.at("s");
      if (!attached_) throw ServiceError(409, "chain detached", "the seed left its chain after a mutation");
      if (!movable(bs_.chain, s)) throw ServiceError(409, "not movable", "box " + std::to_string(s) + " cannot move");
      try {
        apply_box_move(bs_, s);
      } catch (const Error& e) {
        throw ServiceError(409, e.what(), "box " + std::to_string(s) + ": " + e.what());
      }
      labels_.assign(bs_.labels.begin(), bs_.labels.end());
    } else {
      throw ServiceError(400, "bad request", "unknown op " + kind);
    }
  }

  json config_;
  std::vector<json> history_;
  BoxSeed bs_;
  IBox range_;
  bool attached_ = true;
  std::vector<std::optional<IBox>> labels_;
};

class SessionStore {
 public:
  explicit SessionStore(std::string state_file = {}) : file_(std::move(state_file)) {
    if (!file_.empty() && std::filesystem::exists(file_)) load();
  }

  json create(const json& config) {
    auto s = std::make_shared<Entry>(config);
    std::string id;
    {
      std::lock_guard g(mu_);
      id = "s" + std::to_string(++next_);
      map_[id] = s;
    }
    persist();
    return with_id(id, s->session.state());
  }

  template <class F>
  auto with(const std::string& id, F&& f) {
    auto e = find(id);
    std::lock_guard g(e->mu);
    return f(e->session);
  }

  template <class F>
  json change(const std::string& id, F&& f) {
    auto e = find(id);
    json st;
    {
      std::lock_guard g(e->mu);
      f(e->session);
      st = e->session.state();
    }
    persist();
    return with_id(id, st);
  }

  json state(const std::string& id) {
    return with_id(id, with(id, [](Session& s) { return s.state(); }));
  }

  size_t size() const {
    std::lock_guard g(mu_);
    return map_.size();
  }

 private:
  struct Entry {
    explicit Entry(const json& c) : session(c) {}
    std::mutex mu;
    Session session;
  };

  static json with_id(const std::string& id, json st) {
    st["id"] = id;
    return st;
  }

  std::shared_ptr<Entry> find(const std::string& id) {
    std::lock_guard g(mu_);
    auto it = map_.find(id);
    if (it == map_.end()) throw ServiceError(404, "not found", "unknown session " + id);
    return it->second;
  }

  // snapshot under short locks, write outside them
  void persist() {
    if (file_.empty()) return;
    std::vector<std::pair<std::string, std::shared_ptr<Entry>>> all;
    json doc;
    {
      std::lock_guard g(mu_);
      all.assign(map_.begin(), map_.end());
      doc["next"] = next_;
    }
    doc["sessions"] = json::object();
    for (const auto& [id, e] : all) {
      std::lock_guard g(e->mu);
      doc["sessions"][id] = {{"config", e->session.config()}, {"history", e->session.history()}};
    }
    std::lock_guard g(file_mu_);
    std::string tmp = file_ + ".tmp";
    std::ofstream(tmp) << doc.dump(1);
    std::filesystem::rename(tmp, file_);
  }

  void load() {
    std::ifstream in(file_);
    json doc = json::parse(in);
    next_ = doc.value("next", 0);
    for (const auto& [id, v] : doc.at("sessions").items()) {
      auto e = std::make_shared<Entry>(v.at("config"));
      e->session.replay(v.at("history").get<std::vector<json>>());
      map_[id] = e;
    }
  }

  std::string file_;
  mutable std::mutex mu_;
  std::mutex file_mu_;
  std::map<std::string, std::shared_ptr<Entry>> map_;
  long next_ = 0;
};

}  // namespace krc
