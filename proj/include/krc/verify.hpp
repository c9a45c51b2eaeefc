#pragma once
// Property suites shared by the CLI `verify` command and the acceptance binary.
// Each suite is exact; a suite also fails when it overruns its time budget.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "krc/figures.hpp"
#include "krc/invariants_a.hpp"

namespace krc::verify {

struct Options {
  std::vector<std::string> types;             // empty: suite defaults
  std::optional<std::pair<long, long>> window;  // hl-eq-gls, vinout and eb use it when set
  double budget = 0;                          // seconds; 0 means the suite default
  unsigned seed = 1;
};

struct Report {
  std::string suite;
  bool ok = true;
  std::string detail;
  int instances = 0;
  double seconds = 0;
  double budget = 0;
};

namespace detail {

inline void fail(Report& r, const std::string& why) {
  if (r.ok) r.detail = why;
  r.ok = false;
}

inline std::vector<std::string> types_or(const Options& o, std::vector<std::string> dflt) {
  return o.types.empty() ? dflt : o.types;
}

inline Chain random_chain(std::mt19937& rng, long A, int len) {
  std::vector<Side> code;
  for (int k = 0; k + 1 < len; ++k) code.push_back(rng() % 2 ? Side::L : Side::R);
  return chain_on_range(A, code);
}

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace detail

inline void example_replay(const Options&, Report& r) {
  auto seq = a3_example_sequence();
  Chain c = parse_chain("0:LL");
  const char* chains[] = {"-1:RL", "-1:LR", "-2:RR"};
  const char* boxes[] = {"([-1],[0],[-2,0])", "([-1],[-2],[-2,0])", "([-2],[-1],[-2,0])"};
  if (format_boxes(chain_boxes(seq, c)) != "([0],[-1],[-2,0])") detail::fail(r, "initial boxes differ");
  BoxSeed bs = seed_from_chain(seq, c);
  TSystemOracle oracle(seq, -2, 0);
  int step = 0;
  for (int s : {1, 2, 1}) {
    auto chk = verify_box_move_mutation(bs, s);
    if (!chk.ok) detail::fail(r, "step " + std::to_string(step + 1) + ": " + chk.detail);
    apply_box_move(bs, s);
    if (to_string(bs.chain) != chains[step]) detail::fail(r, "got chain " + to_string(bs.chain));
    if (format_boxes(bs.labels) != boxes[step]) detail::fail(r, "got boxes " + format_boxes(bs.labels));
    for (size_t k = 0; k < bs.labels.size(); ++k)
      if (!(bs.seed.vars[k] == oracle.value(bs.labels[k]))) detail::fail(r, "variable differs from the T-system");
    ++step;
    ++r.instances;
  }
  if (t_path(c, parse_chain("-2:RR")) != std::vector<int>{1, 2, 1}) detail::fail(r, "t_path differs");
}

inline void hl_eq_gls(const Options& o, Report& r) {
  for (const auto& t : detail::types_or(o, {"A3", "A4", "B2", "C3", "D4"})) {
    auto seq = default_sequence(folded_datum(t));
    long L = seq.ell();
    std::vector<std::pair<long, long>> wins;
    if (o.window)
      wins.push_back(*o.window);
    else
      for (long a : {-3 * L, -L, 0L}) wins.push_back({a, a + 3 * L});
    for (auto [a, b] : wins) {
      auto d = compare_gls_hl(seq, a, b);
      ++r.instances;
      if (!d.equal)
        detail::fail(r, t + " [" + std::to_string(a) + "," + std::to_string(b) + "] only gls: " +
                            (d.only_gls.empty() ? "-" : d.only_gls[0]) +
                            ", only hl: " + (d.only_hl.empty() ? "-" : d.only_hl[0]));
    }
  }
}

inline void figure_arrows(const Options&, Report& r) {
  for (const auto& f : figures::psi_figures()) {
    auto q = make_q_datum(folded_datum(f.type), f.xi);
    auto a = psi_arrows(q, f.lo, f.hi);
    std::set<figures::Arrow> have(a.begin(), a.end());
    for (const auto& e : f.arrows) {
      ++r.instances;
      if (!have.count(e))
        detail::fail(r, std::string(f.type) + " repetition quiver lacks " + to_string(e.first) + "->" +
                            to_string(e.second));
    }
  }
  for (const auto& f : figures::hl_figures()) {
    auto q = make_q_datum(folded_datum(f.type), f.xi);
    auto H = hl_quiver(q.datum, hat_points(q, f.lo, f.hi));
    std::set<figures::Arrow> have(H.arrows.begin(), H.arrows.end());
    for (const auto& e : f.arrows) {
      ++r.instances;
      if (!have.count(e))
        detail::fail(r, std::string(f.type) + " HL quiver lacks " + to_string(e.first) + "->" + to_string(e.second));
    }
  }
}

inline void box_move_mutation(const Options& o, Report& r) {
  std::mt19937 rng(o.seed);
  auto types = detail::types_or(o, {"A3", "A4", "B2", "C3", "D4", "G2"});
  int checked_moves = 0;
  for (int trial = 0; trial < 210; ++trial) {
    const auto& t = types[trial % types.size()];
    auto seq = default_sequence(folded_datum(t));
    int len = static_cast<int>(detail::uniform(rng, 2, 20));
    Chain c = detail::random_chain(rng, detail::uniform(rng, -10, 10), len);
    BoxSeed bs = seed_from_chain(seq, c);
    for (int s : movable_indices(bs.chain)) {
      if (classify_move(seq, bs.chain, s).kind != MoveKind::TSystem) continue;
      auto chk = verify_box_move_mutation(bs, s);
      ++checked_moves;
      if (!chk.ok) detail::fail(r, t + " " + to_string(c) + " s=" + std::to_string(s) + ": " + chk.detail);
    }
    ++r.instances;
  }
  if (checked_moves == 0) detail::fail(r, "no T-system move was exercised");
}

// random walks of box moves and plain mutations from canonical seeds
inline void positivity(const Options& o, Report& r) {
  std::mt19937 rng(o.seed + 1);
  auto types = detail::types_or(o, {"A3", "A4", "B2", "C3", "D4", "G2"});
  for (int trial = 0; trial < 60; ++trial) {
    const auto& t = types[trial % types.size()];
    auto seq = default_sequence(folded_datum(t));
    int len = static_cast<int>(detail::uniform(rng, 2, 12));
    long A = detail::uniform(rng, -8, 8);
    BoxSeed bs = canonical_seed(seq, A, A + len - 1);
    bool attached = true;
    int steps = static_cast<int>(detail::uniform(rng, 1, 8));
    std::string path;
    for (int k = 0; k < steps; ++k) {
      auto mv = movable_indices(bs.chain);
      auto ex = bs.seed.B.exchangeable_indices();
      bool use_move = attached && !mv.empty() && (ex.empty() || rng() % 2);
      try {
        if (use_move) {
          int s = mv[rng() % mv.size()];
          apply_box_move(bs, s);
          path += " b" + std::to_string(s);
        } else if (!ex.empty()) {
          int j = ex[rng() % ex.size()];
          bs.seed = mutate_seed(bs.seed, j);
          attached = false;
          path += " m" + std::to_string(j + 1);
        }
      } catch (const Error& e) {
        detail::fail(r, t + " [" + std::to_string(A) + "," + std::to_string(A + len - 1) + "]" + path + ": " + e.what());
        break;
      }
      if (!all_positive(bs.seed))
        detail::fail(r, t + " [" + std::to_string(A) + "," + std::to_string(A + len - 1) + "]" + path +
                            ": negative coefficient");
    }
    ++r.instances;
  }
}

inline void vinout(const Options& o, Report& r) {
  for (const auto& t : detail::types_or(o, {"A3", "A4", "B2", "C3", "D4", "G2", "F4"})) {
    auto seq = default_sequence(folded_datum(t));
    std::vector<std::pair<long, long>> wins;
    if (o.window)
      wins.push_back(*o.window);
    else
      for (long a : {-9L, 0L, 5L}) wins.push_back({a, a + 3L * seq.ell()});
    for (auto [a, b] : wins) {
      auto chk = vinout_check(seq, a, b);
      ++r.instances;
      if (!chk.ok) detail::fail(r, t + ": " + chk.detail);
    }
  }
}

inline void invariants_a(const Options& o, Report& r) {
  std::vector<std::string> types;
  for (int n = 1; n <= 5; ++n) types.push_back("A" + std::to_string(n));
  for (const auto& t : detail::types_or(o, types)) {
    auto D = folded_datum(t);
    inv_a::Invariants I(D);
    auto seq = default_sequence(D);
    auto q = to_q_datum(seq);
    const int n = D.rank, W = 4 * (n + 1);
    int lo = *std::min_element(q.xi.begin(), q.xi.end());
    auto pts = hat_points(q, lo, lo + W - 1);
    auto where = [&](const HatIndex& x, const HatIndex& y) { return t + " " + to_string(x) + "," + to_string(y); };
    for (const auto& x : pts) {
      // fundamentals are root modules
      for (long k = -3; k <= 3; ++k) {
        int want = (k == 1 || k == -1) ? 1 : 0;
        if (I.dd(x, I.dual(x, k)) != want) detail::fail(r, "d(x, D^k x) at " + where(x, I.dual(x, k)));
      }
      for (const auto& y : pts) {
        ++r.instances;
        if (I.lambda(x, y) + I.lambda(y, x) != 2 * I.dd(x, y)) detail::fail(r, "Lambda symmetrisation at " + where(x, y));
      }
    }
    const long L = seq.ell();
    for (long a = -2 * L; a <= 2 * L; ++a) {
      if (I.dd(seq.at(seq.plus(a)), seq.at(a)) != 1) detail::fail(r, "d(S_a+, S_a) at a=" + std::to_string(a));
      for (long b = a + L; b <= a + 2 * L; ++b) {
        int want = b - a == L ? 1 : 0;
        if (I.dd(seq.at(a), seq.at(b)) != want)
          detail::fail(r, t + " d(S_a, S_b) at a=" + std::to_string(a) + ", b=" + std::to_string(b));
      }
    }
  }
}

inline void eb_zero(const Options& o, Report& r) {
  std::mt19937 rng(o.seed + 2);
  std::vector<std::string> types;
  for (int n = 1; n <= 5; ++n) types.push_back("A" + std::to_string(n));
  for (const auto& t : detail::types_or(o, types)) {
    auto seq = default_sequence(folded_datum(t));
    std::vector<Chain> chains;
    if (o.window) chains.push_back(canonical_chain(o.window->first, o.window->second));
    for (int trial = 0; trial < 8; ++trial)
      chains.push_back(detail::random_chain(rng, detail::uniform(rng, -6, 6), static_cast<int>(detail::uniform(rng, 1, 24))));
    for (const auto& c : chains) {
      auto chk = inv_a::eb_check(seq, c);
      ++r.instances;
      if (!chk.ok) detail::fail(r, t + " " + to_string(c) + ": " + chk.detail);
    }
  }
}

inline void gram(const Options&, Report& r) {
  auto q = make_q_datum(folded_datum("A3"), {0, 1, 0});
  auto chk = inv_a::gram_check(q, {1, 3, 2, 1, 3, 2});
  ++r.instances;
  if (!chk.ok) detail::fail(r, chk.detail);
}

// seeds transported between chains on one range agree with direct construction and the T-system
inline void transport(const Options& o, Report& r) {
  std::mt19937 rng(o.seed + 3);
  auto types = detail::types_or(o, {"A3", "A4", "B2", "C3", "D4", "G2"});
  for (int trial = 0; trial < 60; ++trial) {
    const auto& t = types[trial % types.size()];
    auto seq = default_sequence(folded_datum(t));
    int len = static_cast<int>(detail::uniform(rng, 2, 16));
    long A = detail::uniform(rng, -8, 8);
    Chain c1 = detail::random_chain(rng, A, len), c2 = detail::random_chain(rng, A, len);
    std::string tag = t + " " + to_string(c1) + " -> " + to_string(c2);
    BoxSeed moved = seed_from_chain(seq, c1);
    for (int s : t_path(c1, c2)) apply_box_move(moved, s);
    BoxSeed direct = seed_from_chain(seq, c2);
    TSystemOracle oracle(seq, A, A + len - 1);
    ++r.instances;
    if (moved.chain != c2) detail::fail(r, tag + ": path ends at " + to_string(moved.chain));
    std::map<IBox, LaurentPoly> a, b;
    for (size_t k = 0; k < moved.labels.size(); ++k) a.emplace(moved.labels[k], moved.seed.vars[k]);
    for (size_t k = 0; k < direct.labels.size(); ++k) b.emplace(direct.labels[k], direct.seed.vars[k]);
    if (a != b) detail::fail(r, tag + ": transported cluster differs from the direct one");
    if (!(moved.seed.B == direct.seed.B)) detail::fail(r, tag + ": exchange matrices differ");
    for (const auto& [box, v] : a)
      if (!(v == oracle.value(box))) detail::fail(r, tag + ": " + to_string(box) + " differs from the T-system");
  }
}

inline void rho_phi(const Options& o, Report& r) {
  std::vector<std::pair<std::string, std::vector<int>>> data;
  if (o.types.empty()) {
    data = {{"A3", {0, 1, 0}}, {"A3", {0, 1, 2}}, {"A3", {2, 1, 0}}};
    for (const char* t : {"A4", "B2", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "A3^(2)", "D4^(3)", "E6^(2)"})
      data.push_back({t, example_xi(folded_datum(t))});
  } else {
    for (const auto& t : o.types) data.push_back({t, example_xi(folded_datum(t))});
  }
  for (const auto& [t, xi] : data) {
    auto D = folded_datum(t);
    auto q = make_q_datum(D, xi);
    auto w = adapted_longest_word(q);
    auto seq = from_q_datum(q, w);
    ++r.instances;
    if (to_q_datum(seq).xi != q.xi) detail::fail(r, t + ": height function does not come back");
    if (!(from_q_datum(to_q_datum(seq), base_word(seq)) == seq)) detail::fail(r, t + ": sequence does not come back");
    if (!validate_sequence(seq)) detail::fail(r, t + ": sequence is not admissible");
    PhiMap phi(q, w);
    std::set<RootVector> hit;
    std::set<HatIndex> base;
    for (const auto& b : positive_roots(D)) {
      HatIndex x = phi.inverse(b, 0);
      if (!(phi(x) == PhiValue{b, 0})) detail::fail(r, t + ": phi(phi^-1) differs at " + to_string(x));
      if (!base.insert(x).second) detail::fail(r, t + ": phi^-1 not injective at " + to_string(x));
    }
    // and the preimage of Phi+ x {0} is exactly what phi sends there
    int P = seq.period_shift();
    int lo = *std::min_element(xi.begin(), xi.end()) - 2 * P, hi = *std::max_element(xi.begin(), xi.end()) + 2 * P;
    for (const auto& x : hat_points(q, lo, hi)) {
      auto v = phi(x);
      if (v.m == 0 && !base.count(x)) detail::fail(r, t + ": extra preimage " + to_string(x));
      if (v.m == 0) hit.insert(v.beta);
    }
    if (hit.size() != positive_roots(D).size()) detail::fail(r, t + ": phi misses some positive roots");
  }
}

struct Suite {
  const char* name;
  double budget;  // seconds
  std::function<void(const Options&, Report&)> run;
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> s = {
      {"example-replay", 1, example_replay}, {"hl-eq-gls", 5, hl_eq_gls},
      {"figures", 5, figure_arrows},         {"box-move-mutation", 30, box_move_mutation},
      {"positivity", 60, positivity},        {"vinout", 10, vinout},
      {"invariants-a", 10, invariants_a},    {"eb", 30, eb_zero},
      {"gram", 5, gram},                     {"transport", 60, transport},
      {"rho-phi", 10, rho_phi},
  };
  return s;
}

inline Report run(const std::string& name, const Options& o = {}) {
  for (const auto& s : suites()) {
    if (name != s.name) continue;
    Report r;
    r.suite = name;
    r.budget = o.budget > 0 ? o.budget : s.budget;
    auto t0 = std::chrono::steady_clock::now();
    try {
      s.run(o, r);
    } catch (const std::exception& e) {
      detail::fail(r, std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.budget) {
      std::ostringstream m;
      m << "over budget: " << r.seconds << " s > " << r.budget << " s";
      detail::fail(r, m.str());
    }
    return r;
  }
  throw Error("unknown suite: " + name);
}

inline std::string format(const Report& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(3);
  s << (r.ok ? "PASS " : "FAIL ") << r.suite << " (" << r.instances << " cases, " << r.seconds << " s)";
  if (!r.ok) s << ": " << r.detail;
  return s.str();
}

}  // namespace krc::verify
