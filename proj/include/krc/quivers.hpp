#pragma once
// GLS-type quivers on windows of an admissible sequence, HL-type quivers on
// hat-indices, and exchange matrices.

#include <functional>
#include <tuple>

#include "krc/iboxes.hpp"

namespace krc {

template <class V>
struct Quiver {
  std::vector<V> vertices;
  std::vector<std::pair<V, V>> arrows;

  bool has_arrow(const V& x, const V& y) const {
    return std::find(arrows.begin(), arrows.end(), std::pair<V, V>{x, y}) != arrows.end();
  }
  void normalize() {
    std::sort(vertices.begin(), vertices.end());
    std::sort(arrows.begin(), arrows.end());
  }
};

// window [a,b]: arrows s -> s^- and s -> t for s^- < t^- < s < t with adjacent colours
inline Quiver<long> gls_quiver(const AdmissibleSequence& seq, long a, long b) {
  const auto& D = seq.datum();
  Quiver<long> Q;
  for (long s = a; s <= b; ++s) Q.vertices.push_back(s);
  for (long s = a; s <= b; ++s) {
    long sm = seq.minus(s);
    if (sm >= a) Q.arrows.push_back({s, sm});
    for (long t = s + 1; t <= b && t <= s + seq.ell(); ++t) {
      if (!D.adjacent(seq.color(s), seq.color(t))) continue;
      long tm = seq.minus(t);
      if (sm < tm && tm < s) Q.arrows.push_back({s, t});
    }
  }
  Q.normalize();
  return Q;
}

inline bool hl_arrow(const FoldedCartanDatum& D, const HatIndex& x, const HatIndex& y) {
  if (x.node == y.node) return x.p == y.p + 2 * D.d(x.node);
  return D.adjacent(x.node, y.node) && x.p == y.p - 2 * D.d(y.node) + D.min_d(x.node, y.node);
}

inline Quiver<HatIndex> hl_quiver(const FoldedCartanDatum& D, std::vector<HatIndex> vs) {
  Quiver<HatIndex> Q;
  Q.vertices = std::move(vs);
  for (const auto& x : Q.vertices)
    for (const auto& y : Q.vertices)
      if (hl_arrow(D, x, y)) Q.arrows.push_back({x, y});
  Q.normalize();
  return Q;
}

// HL quiver on the hat-indices strictly below level xi (the negative half), levels >= lo
inline Quiver<HatIndex> hl_quiver_below(const QDatum& q, int lo) {
  std::vector<HatIndex> vs;
  for (const auto& x : hat_points(q, lo, *std::max_element(q.xi.begin(), q.xi.end())))
    if (x.p < q.at(x.node)) vs.push_back(x);
  return hl_quiver(q.datum, vs);
}

struct QuiverDiff {
  bool equal = true;
  std::vector<std::string> only_gls, only_hl;
};

// compare GLS(window) with HL on its image under s -> (i_s, p_s)
inline QuiverDiff compare_gls_hl(const AdmissibleSequence& seq, long a, long b) {
  auto G = gls_quiver(seq, a, b);
  std::vector<HatIndex> img;
  for (long s = a; s <= b; ++s) img.push_back(seq.at(s));
  auto H = hl_quiver(seq.datum(), img);
  std::set<std::pair<HatIndex, HatIndex>> g, h(H.arrows.begin(), H.arrows.end());
  for (auto [s, t] : G.arrows) g.insert({seq.at(s), seq.at(t)});
  QuiverDiff d;
  std::set<HatIndex> distinct(img.begin(), img.end());
  if (distinct.size() != img.size()) {
    d.equal = false;
    d.only_gls.push_back("index map is not injective");
  }
  for (const auto& e : g)
    if (!h.count(e)) d.only_gls.push_back(to_string(e.first) + "->" + to_string(e.second));
  for (const auto& e : h)
    if (!g.count(e)) d.only_hl.push_back(to_string(e.first) + "->" + to_string(e.second));
  if (!d.only_gls.empty() || !d.only_hl.empty()) d.equal = false;
  return d;
}

// skew-symmetric integer matrix on K with exchangeable flags; frozen-frozen entries are 0
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  explicit ExchangeMatrix(int n) : n_(n), b_(static_cast<size_t>(n) * n, 0), ex_(n, true) {}

  int size() const { return n_; }
  int operator()(int i, int j) const { return b_[idx(i, j)]; }
  void set(int i, int j, int v) {
    b_[idx(i, j)] = v;
    b_[idx(j, i)] = -v;
  }
  void add(int i, int j, int v) { set(i, j, (*this)(i, j) + v); }
  bool exchangeable(int k) const { return ex_[k]; }
  void set_exchangeable(int k, bool e) { ex_[k] = e; }
  std::vector<int> exchangeable_indices() const {
    std::vector<int> r;
    for (int k = 0; k < n_; ++k)
      if (ex_[k]) r.push_back(k);
    return r;
  }
  void clear_frozen_block() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!ex_[i] && !ex_[j]) b_[idx(i, j)] = 0;
  }
  void swap_indices(int i, int j) {
    if (i == j) return;
    for (int t = 0; t < n_; ++t) std::swap(b_[idx(i, t)], b_[idx(j, t)]);
    for (int t = 0; t < n_; ++t) std::swap(b_[idx(t, i)], b_[idx(t, j)]);
    bool e = ex_[i];
    ex_[i] = ex_[j];
    ex_[j] = e;
  }
  // (i, j, b_ij) for nonzero entries with j exchangeable
  std::vector<std::tuple<int, int, int>> triplets() const {
    std::vector<std::tuple<int, int, int>> r;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (ex_[j] && b_[idx(i, j)] != 0) r.emplace_back(i, j, b_[idx(i, j)]);
    return r;
  }
  bool operator==(const ExchangeMatrix&) const = default;

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * n_ + j; }
  int n_ = 0;
  std::vector<int> b_;
  std::vector<bool> ex_;
};

// b_ij = #(i->j) - #(j->i) for the vertex order K; vertices outside K are ignored
template <class V>
ExchangeMatrix to_exchange_matrix(const Quiver<V>& Q, const std::vector<V>& K,
                                  const std::vector<bool>& exchangeable) {
  ExchangeMatrix B(static_cast<int>(K.size()));
  std::map<V, int> pos;
  for (size_t k = 0; k < K.size(); ++k) pos[K[k]] = static_cast<int>(k);
  for (size_t k = 0; k < K.size(); ++k) B.set_exchangeable(static_cast<int>(k), exchangeable[k]);
  for (const auto& [x, y] : Q.arrows) {
    auto i = pos.find(x), j = pos.find(y);
    if (i == pos.end() || j == pos.end()) continue;
    B.add(i->second, j->second, 1);
  }
  B.clear_frozen_block();
  return B;
}

// quiver of the exchange matrix: b_ij arrows i -> j when b_ij > 0
inline Quiver<int> matrix_quiver(const ExchangeMatrix& B) {
  Quiver<int> Q;
  for (int i = 0; i < B.size(); ++i) Q.vertices.push_back(i);
  for (int i = 0; i < B.size(); ++i)
    for (int j = 0; j < B.size(); ++j)
      for (int m = 0; m < B(i, j); ++m) Q.arrows.push_back({i, j});
  return Q;
}

inline std::string vertex_text(long s) { return std::to_string(s); }
inline std::string vertex_text(int s) { return std::to_string(s); }
inline std::string vertex_text(const HatIndex& x) { return to_string(x); }

// DOT with vertices v0, v1, ... in sorted order; labels optional
template <class V>
std::string export_dot(const Quiver<V>& Q, bool labels = false) {
  std::vector<V> vs = Q.vertices;
  std::sort(vs.begin(), vs.end());
  std::map<V, size_t> id;
  for (size_t k = 0; k < vs.size(); ++k) id[vs[k]] = k;
  std::string s = "digraph {";
  for (size_t k = 0; k < vs.size(); ++k) {
    s += " v" + std::to_string(k);
    if (labels) s += " [label=\"" + vertex_text(vs[k]) + "\"]";
    s += ";";
  }
  auto arrows = Q.arrows;
  std::sort(arrows.begin(), arrows.end());
  for (const auto& [x, y] : arrows)
    s += " v" + std::to_string(id.at(x)) + " -> v" + std::to_string(id.at(y)) + ";";
  return s + " }";
}

}  // namespace krc
