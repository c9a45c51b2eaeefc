#pragma once
// Q-data (height functions on a folded diagram), the lattice of admissible
// hat-indices, adapted words and the bijection onto roots times integers.

#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "krc/root_data.hpp"

namespace krc {

struct HatIndex {
  Node node = 0;
  int p = 0;
  auto operator<=>(const HatIndex&) const = default;
};

inline std::string to_string(const HatIndex& x) {
  return "(" + std::to_string(x.node) + "," + std::to_string(x.p) + ")";
}

// order used for the base block: by level, then node
inline bool level_less(const HatIndex& x, const HatIndex& y) {
  return x.p != y.p ? x.p < y.p : x.node < y.node;
}

struct Validation {
  bool ok = true;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
  void fail(std::string s) {
    ok = false;
    diagnostics.push_back(std::move(s));
  }
};

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline long floor_mod(long a, long b) { return a - b * floor_div(a, b); }

struct QDatum {
  FoldedCartanDatum datum;
  std::vector<int> xi;  // xi[i-1]
  int at(Node i) const { return xi[i - 1]; }
};

inline Validation validate_q_datum(const QDatum& q) {
  const auto& D = q.datum;
  Validation v;
  if (static_cast<int>(q.xi.size()) != D.rank) {
    v.fail("height function has " + std::to_string(q.xi.size()) + " entries, expected " +
           std::to_string(D.rank));
    return v;
  }
  for (auto [i, j] : D.edges) {
    if (D.d(i) == D.d(j) && std::abs(q.at(i) - q.at(j)) != D.d(i))
      v.fail("condition (i) fails on edge " + std::to_string(i) + "-" + std::to_string(j));
  }
  for (Node i = 1; i <= D.rank; ++i) {
    if (D.d(i) != 1) continue;
    std::set<Node> seen;
    for (Node j : D.neighbours(i)) {
      if (D.d(j) <= 1 || seen.count(j)) continue;
      std::vector<Node> orbit{j};
      for (Node t = D.sig(j); t != j; t = D.sig(t)) orbit.push_back(t);
      seen.insert(orbit.begin(), orbit.end());
      int count = 0;
      for (Node o : orbit) {
        if (std::abs(q.at(i) - q.at(o)) != 1) continue;
        bool ok = true;
        Node t = o;
        for (int k = 0; k < D.d(j); ++k, t = D.sig(t))
          if (q.at(t) != q.at(o) + 2 * k) ok = false;
        if (ok) ++count;
      }
      if (count != 1)
        v.fail("condition (ii) fails between " + std::to_string(i) + " and orbit of " +
               std::to_string(j) + " (" + std::to_string(count) + " candidates)");
    }
  }
  return v;
}

inline QDatum make_q_datum(const FoldedCartanDatum& D, std::vector<int> xi) {
  QDatum q{D, std::move(xi)};
  auto v = validate_q_datum(q);
  if (!v) throw Error("invalid height function: " + v.diagnostics.front());
  return q;
}

inline bool is_sink(const QDatum& q, Node i) {
  for (Node j : q.datum.neighbours(i))
    if (!(q.at(i) < q.at(j))) return false;
  return true;
}

inline bool is_source(const QDatum& q, Node i) {
  const auto& D = q.datum;
  for (Node j : D.neighbours(i))
    if (!(q.at(i) - 2 * D.d(i) > q.at(j) - 2 * D.d(j))) return false;
  return true;
}

inline std::vector<Node> sinks(const QDatum& q) {
  std::vector<Node> r;
  for (Node i = 1; i <= q.datum.rank; ++i)
    if (is_sink(q, i)) r.push_back(i);
  return r;
}

inline std::vector<Node> sources(const QDatum& q) {
  std::vector<Node> r;
  for (Node i = 1; i <= q.datum.rank; ++i)
    if (is_source(q, i)) r.push_back(i);
  return r;
}

inline QDatum reflect_q(const QDatum& q, Node i) {
  if (!is_sink(q, i)) throw Error("not a sink: " + std::to_string(i));
  QDatum r = q;
  r.xi[i - 1] += 2 * q.datum.d(i);
  return r;
}

inline QDatum reflect_q_inv(const QDatum& q, Node i) {
  if (!is_source(q, i)) throw Error("not a source: " + std::to_string(i));
  QDatum r = q;
  r.xi[i - 1] -= 2 * q.datum.d(i);
  return r;
}

inline bool in_hat(const QDatum& q, const HatIndex& x) {
  if (x.node < 1 || x.node > q.datum.rank) return false;
  return floor_mod(x.p - q.at(x.node), 2 * q.datum.d(x.node)) == 0;
}

// hat lattice points with lo <= p <= hi, sorted by level
inline std::vector<HatIndex> hat_points(const QDatum& q, int lo, int hi) {
  std::vector<HatIndex> r;
  for (Node i = 1; i <= q.datum.rank; ++i) {
    int step = 2 * q.datum.d(i);
    int start = q.at(i) + static_cast<int>(floor_div(lo - q.at(i) + step - 1, step)) * step;
    for (int p = start; p <= hi; p += step) r.push_back({i, p});
  }
  std::sort(r.begin(), r.end(), level_less);
  return r;
}

// each letter must be a sink of the successively reflected datum
inline bool is_adapted(const QDatum& q, const WeylWord& w) {
  QDatum cur = q;
  for (Node i : w) {
    if (i < 1 || i > q.datum.rank || !is_sink(cur, i)) return false;
    cur.xi[i - 1] += 2 * q.datum.d(i);
  }
  return true;
}

// base block { (i,p) in hat : xi_i <= p < xi_{i*} + ord h }, sorted by (p, node desc)
inline std::vector<HatIndex> base_block(const QDatum& q) {
  const auto& D = q.datum;
  std::vector<HatIndex> r;
  for (Node i = 1; i <= D.rank; ++i)
    for (int p = q.at(i); p < q.at(D.star(i)) + D.ord_sigma * D.h_dual; p += 2 * D.d(i))
      r.push_back({i, p});
  std::sort(r.begin(), r.end(), [](const HatIndex& x, const HatIndex& y) {
    return x.p != y.p ? x.p < y.p : x.node > y.node;
  });
  return r;
}

inline WeylWord adapted_longest_word(const QDatum& q) {
  WeylWord w;
  for (const auto& x : base_block(q)) w.push_back(x.node);
  if (!is_longest_word(q.datum, w) || !is_adapted(q, w))
    throw Error("could not build an adapted reduced word of w0");
  return w;
}

struct PhiValue {
  RootVector beta;
  int m = 0;
  auto operator<=>(const PhiValue&) const = default;
};

// phi_Q via an adapted reduced word w0 of q; throws if x is not in the hat lattice
class PhiMap {
 public:
  PhiMap(const QDatum& q, const WeylWord& w0) : q_(q), w0_(w0) {
    const auto& D = q.datum;
    if (!is_longest_word(D, w0)) throw Error("word is not a reduced word of w0");
    if (!is_adapted(q, w0)) throw Error("word not adapted");
    auto roots = word_roots(D, w0);
    QDatum cur = q;
    for (size_t k = 0; k < w0.size(); ++k) {
      Node i = w0[k];
      HatIndex x{i, cur.at(i)};
      base_[x] = roots[k];
      inv_[roots[k]] = x;
      cur.xi[i - 1] += 2 * D.d(i);
    }
  }
  PhiValue operator()(const HatIndex& x) const {
    const auto& D = q_.datum;
    if (!in_hat(q_, x)) throw Error("index " + to_string(x) + " is not in the hat lattice");
    int period = D.ord_sigma * D.h_dual;
    // move x into the base block one period at a time
    HatIndex y = x;
    int k = 0;
    for (long guard = 0;; ++guard) {
      if (guard > 2L * std::abs(x.p - q_.at(x.node)) / period + 4) throw Error("phi: no base point");
      if (base_.count(y)) return {base_.at(y), k};
      Node yi = y.node;
      if (y.p < q_.at(yi)) {
        y = {D.star(yi), y.p + period};
        --k;
      } else {
        y = {D.star(yi), y.p - period};
        ++k;
      }
    }
  }
  HatIndex inverse(const RootVector& beta, int m) const {
    auto it = inv_.find(beta);
    if (it == inv_.end()) throw Error("not a positive root");
    const auto& D = q_.datum;
    HatIndex x = it->second;
    return {D.star_pow(x.node, m), x.p + m * D.ord_sigma * D.h_dual};
  }
  const std::map<HatIndex, RootVector>& base() const { return base_; }

 private:
  QDatum q_;
  WeylWord w0_;
  std::map<HatIndex, RootVector> base_;
  std::map<RootVector, HatIndex> inv_;
};

inline PhiValue phi_q(const QDatum& q, const WeylWord& w0, const HatIndex& x) {
  return PhiMap(q, w0)(x);
}

inline HatIndex phi_q_inv(const QDatum& q, const WeylWord& w0, const RootVector& beta, int m) {
  return PhiMap(q, w0).inverse(beta, m);
}

// arrows (i,p) -> (j,q) of the repetition quiver inside lo <= level <= hi
inline std::vector<std::pair<HatIndex, HatIndex>> psi_arrows(const QDatum& q, int lo, int hi) {
  const auto& D = q.datum;
  std::vector<std::pair<HatIndex, HatIndex>> r;
  auto pts = hat_points(q, lo, hi);
  std::set<HatIndex> in(pts.begin(), pts.end());
  for (const auto& x : pts)
    for (Node j : D.neighbours(x.node)) {
      HatIndex y{j, x.p + D.min_d(x.node, j)};
      if (in.count(y)) r.push_back({x, y});
    }
  return r;
}

namespace detail {

inline std::string subscript(int v) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s, t = std::to_string(v);
  for (char c : t) s += (c == '-') ? std::string("₋") : std::string(digits[c - '0']);
  return s;
}

inline std::string power(const std::string& base, int p) {
  if (p >= 0 && p <= 9) return base + "^" + std::to_string(p);
  return base + "^{" + std::to_string(p) + "}";
}

}  // namespace detail

// spectral parameter of the fundamental module at (i,p)
inline std::string spectral_parameter(const FoldedCartanDatum& D, const HatIndex& x) {
  const Node i = x.node;
  const std::string q = D.ord_sigma == 1 ? "q" : "q_sh";
  std::string c;  // constant prefix
  std::string base = "(−" + q + ")";
  if (D.twist == 1) {
    if (D.family == 'B') {
      base = "(" + q + ")";
      if (std::abs(i - D.n) % 2) c = "−";
    } else if (D.family == 'F') {
      base = "(" + q + ")";
      if (D.dist(i, 2) % 2) c = "−";
    }
  } else if (D.family == 'A') {
    if (i > (D.n + 1) / 2 && D.n % 2) c = "−";
  } else if (D.family == 'D' && D.twist == 2) {
    int n = D.n - 1;
    if (i < n) {
      static const char* ipow[] = {"", "√−1", "−", "−√−1"};
      c = ipow[(n + 1 - i) % 4];
    } else if (i % 2) {
      c = "−";
    }
  } else if (D.family == 'D') {
    static const char* w[] = {"", "", "−", "ω", "ω²"};
    c = w[i];
  } else if (D.family == 'E') {
    if (i == 5 || i == 6) c = "−";
    if (i == 2 || i == 4) c = "√−1";
  }
  return c + detail::power(base, x.p);
}

inline std::string fundamental_label(const FoldedCartanDatum& D, const HatIndex& x) {
  return "V(ϖ" + detail::subscript(D.pi(x.node)) + ")_{" + spectral_parameter(D, x) + "}";
}

}  // namespace krc
