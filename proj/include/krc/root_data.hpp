#pragma once
// Folded Cartan data: simply-laced diagram, folding automorphism, Weyl group
// acting on integer root coordinates.

#include <algorithm>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Node = int;  // diagram nodes are 1-based everywhere

// coefficients in the simple-root basis, slot i-1 holds node i
struct RootVector {
  std::vector<int> c;
  RootVector() = default;
  explicit RootVector(std::vector<int> v) : c(std::move(v)) {}
  static RootVector simple(int rank, Node i) {
    RootVector r(std::vector<int>(rank, 0));
    r.c[i - 1] = 1;
    return r;
  }
  int operator[](Node i) const { return c[i - 1]; }
  int size() const { return static_cast<int>(c.size()); }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  }
  bool is_positive() const {
    return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  }
  bool is_negative() const {
    return !is_zero() && std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
  }
  RootVector operator-() const {
    RootVector r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
  friend RootVector operator+(RootVector a, const RootVector& b) {
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend RootVector operator-(RootVector a, const RootVector& b) {
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend RootVector operator*(int k, RootVector a) {
    for (int& x : a.c) x *= k;
    return a;
  }
  auto operator<=>(const RootVector&) const = default;
};

using WeylWord = std::vector<Node>;
using IntMatrix = std::vector<std::vector<int>>;

struct FoldedCartanDatum {
  std::string tag;    // canonical, e.g. "B_2^{(1)}"
  char family = 'A';  // of the affine algebra
  int n = 0;          // its rank index
  int twist = 1;      // 1, 2 or 3
  int rank = 0;       // |Delta_0|
  std::vector<std::pair<Node, Node>> edges;
  std::vector<Node> sigma;   // sigma[i-1]
  std::vector<int> proj;     // folding projection pi, sigma[i-1] -> orbit label
  std::vector<int> dvals;    // orbit sizes
  int ord_sigma = 1;
  int h_dual = 0;
  int ell = 0;               // number of positive roots
  std::vector<Node> star_;   // -w0 alpha_i = alpha_{star(i)}
  IntMatrix cartan;
  WeylWord longest;

  Node sig(Node i) const { return sigma[i - 1]; }
  int d(Node i) const { return dvals[i - 1]; }
  int pi(Node i) const { return proj[i - 1]; }
  Node star(Node i) const { return star_[i - 1]; }
  Node star_pow(Node i, long k) const { return (k % 2 == 0) ? i : star(i); }
  int a(Node i, Node j) const { return cartan[i - 1][j - 1]; }
  bool adjacent(Node i, Node j) const { return i != j && cartan[i - 1][j - 1] == -1; }
  std::vector<Node> neighbours(Node i) const {
    std::vector<Node> r;
    for (Node j = 1; j <= rank; ++j)
      if (adjacent(i, j)) r.push_back(j);
    return r;
  }
  int dist(Node i, Node j) const {  // graph distance in Delta_0
    std::vector<int> dd(rank + 1, -1);
    std::vector<Node> q{i};
    dd[i] = 0;
    for (size_t h = 0; h < q.size(); ++h)
      for (Node t : neighbours(q[h]))
        if (dd[t] < 0) {
          dd[t] = dd[q[h]] + 1;
          q.push_back(t);
        }
    return dd[j];
  }
  int min_d(Node i, Node j) const { return std::min(d(i), d(j)); }
  // (beta, gamma) for the symmetric Cartan matrix
  int pairing(const RootVector& x, const RootVector& y) const {
    int s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += x.c[i] * cartan[i][j] * y.c[j];
    return s;
  }
};

inline RootVector reflect(const FoldedCartanDatum& D, Node i, const RootVector& v) {
  int h = 0;
  for (Node j = 1; j <= D.rank; ++j) h += D.a(i, j) * v[j];
  RootVector r = v;
  r.c[i - 1] -= h;
  return r;
}

// w = s_{w[0]} s_{w[1]} ... applied to v (rightmost first)
inline RootVector apply_word(const FoldedCartanDatum& D, const WeylWord& w, RootVector v) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = reflect(D, *it, v);
  return v;
}

// columns are images of simple roots
inline IntMatrix weyl_matrix(const FoldedCartanDatum& D, const WeylWord& w) {
  IntMatrix m(D.rank, std::vector<int>(D.rank, 0));
  for (Node j = 1; j <= D.rank; ++j) {
    RootVector v = apply_word(D, w, RootVector::simple(D.rank, j));
    for (int i = 0; i < D.rank; ++i) m[i][j - 1] = v.c[i];
  }
  return m;
}

// beta_k = s_{i1}...s_{i(k-1)} alpha_{ik}; a word is reduced iff all are positive
inline std::vector<RootVector> word_roots(const FoldedCartanDatum& D, const WeylWord& w) {
  std::vector<RootVector> out;
  out.reserve(w.size());
  for (size_t k = 0; k < w.size(); ++k) {
    WeylWord pre(w.begin(), w.begin() + k);
    out.push_back(apply_word(D, pre, RootVector::simple(D.rank, w[k])));
  }
  return out;
}

inline bool is_reduced(const FoldedCartanDatum& D, const WeylWord& w) {
  for (Node i : w)
    if (i < 1 || i > D.rank) return false;
  for (const auto& b : word_roots(D, w))
    if (!b.is_positive()) return false;
  return true;
}

inline bool is_longest_word(const FoldedCartanDatum& D, const WeylWord& w) {
  return static_cast<int>(w.size()) == D.ell && is_reduced(D, w);
}

inline std::vector<RootVector> positive_roots(const FoldedCartanDatum& D) {
  auto r = word_roots(D, D.longest);
  std::sort(r.begin(), r.end());
  return r;
}

namespace detail {

inline IntMatrix cartan_from_edges(int r, const std::vector<std::pair<Node, Node>>& e) {
  IntMatrix c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  for (auto [i, j] : e) c[i - 1][j - 1] = c[j - 1][i - 1] = -1;
  return c;
}

inline std::vector<std::pair<Node, Node>> diagram_edges(char kind, int r) {
  std::vector<std::pair<Node, Node>> e;
  if (kind == 'A') {
    for (int i = 1; i < r; ++i) e.push_back({i, i + 1});
  } else if (kind == 'D') {
    for (int i = 1; i < r - 2; ++i) e.push_back({i, i + 1});
    e.push_back({r - 2, r - 1});
    e.push_back({r - 2, r});
  } else if (kind == 'E') {
    e = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < r; ++i) e.push_back({i, i + 1});
  }
  return e;
}

// rho in fundamental weight coordinates, walk down to -rho
inline WeylWord longest_word(const IntMatrix& c) {
  int r = static_cast<int>(c.size());
  std::vector<int> lam(r, 1);
  WeylWord w;
  for (;;) {
    int i = 0;
    while (i < r && lam[i] <= 0) ++i;
    if (i == r) break;
    int ci = lam[i];
    for (int j = 0; j < r; ++j) lam[j] -= ci * c[i][j];
    w.push_back(i + 1);
  }
  return w;
}

inline std::string canonical_tag(char f, int n, int t) {
  return std::string(1, f) + "_" + std::to_string(n) + "^{(" + std::to_string(t) + ")}";
}

}  // namespace detail

inline FoldedCartanDatum make_datum(char family, int n, int twist) {
  FoldedCartanDatum D;
  D.family = family;
  D.n = n;
  D.twist = twist;
  char kind = 'A';
  int r = 0;
  std::vector<Node> sigma;
  std::vector<int> proj;
  auto unsupported = [&] {
    return Error("unsupported affine type " + detail::canonical_tag(family, n, twist));
  };
  if (twist == 1) {
    switch (family) {
      case 'A':
        if (n < 1) throw unsupported();
        kind = 'A', r = n, D.h_dual = n + 1;
        break;
      case 'B':
        if (n < 2) throw unsupported();
        kind = 'A', r = 2 * n - 1, D.h_dual = 2 * n - 1;
        for (int k = 1; k <= r; ++k) {
          sigma.push_back(2 * n - k);
          proj.push_back(std::min(k, 2 * n - k));
        }
        break;
      case 'C':
        if (n < 3) throw unsupported();
        kind = 'D', r = n + 1, D.h_dual = n + 1;
        for (int k = 1; k <= r; ++k) {
          sigma.push_back(k < n ? k : (k == n ? n + 1 : n));
          proj.push_back(std::min(k, n));
        }
        break;
      case 'D':
        if (n < 4) throw unsupported();
        kind = 'D', r = n, D.h_dual = 2 * n - 2;
        break;
      case 'E':
        if (n < 6 || n > 8) throw unsupported();
        kind = 'E', r = n, D.h_dual = n == 6 ? 12 : n == 7 ? 18 : 30;
        break;
      case 'F':
        if (n != 4) throw unsupported();
        kind = 'E', r = 6, D.h_dual = 9;
        sigma = {6, 2, 5, 4, 3, 1};
        proj = {1, 4, 2, 3, 2, 1};
        break;
      case 'G':
        if (n != 2) throw unsupported();
        kind = 'D', r = 4, D.h_dual = 4;
        sigma = {3, 2, 4, 1};
        proj = {1, 2, 1, 1};
        break;
      default:
        throw unsupported();
    }
  } else {
    // twisted types reuse the untwisted simply-laced data, sigma = id
    if (twist == 2 && family == 'A' && n >= 2) {
      kind = 'A', r = n, D.h_dual = n + 1;
      for (int k = 1; k <= r; ++k) proj.push_back(k <= (n + 1) / 2 ? k : n + 1 - k);
    } else if (twist == 2 && family == 'D' && n >= 4) {
      kind = 'D', r = n, D.h_dual = 2 * n - 2;
      for (int k = 1; k <= r; ++k) proj.push_back(std::min(k, n - 1));
    } else if (twist == 3 && family == 'D' && n == 4) {
      kind = 'D', r = 4, D.h_dual = 6;
      proj = {1, 2, 1, 1};
    } else if (twist == 2 && family == 'E' && n == 6) {
      kind = 'E', r = 6, D.h_dual = 12;
      proj = {1, 4, 2, 3, 2, 1};
    } else {
      throw unsupported();
    }
  }
  D.tag = detail::canonical_tag(family, n, twist);
  D.rank = r;
  D.edges = detail::diagram_edges(kind, r);
  D.cartan = detail::cartan_from_edges(r, D.edges);
  if (sigma.empty())
    for (int k = 1; k <= r; ++k) sigma.push_back(k);
  if (proj.empty())
    for (int k = 1; k <= r; ++k) proj.push_back(k);
  D.sigma = sigma;
  D.proj = proj;
  D.dvals.assign(r, 1);
  D.ord_sigma = 1;
  for (Node i = 1; i <= r; ++i) {
    int len = 1;
    for (Node j = sigma[i - 1]; j != i; j = sigma[j - 1]) ++len;
    D.dvals[i - 1] = len;
    D.ord_sigma = std::lcm(D.ord_sigma, len);
  }
  D.longest = detail::longest_word(D.cartan);
  D.ell = static_cast<int>(D.longest.size());
  IntMatrix w0 = weyl_matrix(D, D.longest);
  D.star_.assign(r, 0);
  for (Node i = 1; i <= r; ++i)
    for (Node j = 1; j <= r; ++j)
      if (w0[j - 1][i - 1] == -1) D.star_[i - 1] = j;
  return D;
}

// accepts "A3", "A_3", "B2^(1)", "D_4^{(3)}", "E6(2)"
inline FoldedCartanDatum folded_datum(const std::string& tag) {
  static const std::regex re(R"(^\s*([A-Ga-g])_?\{?(\d+)\}?\s*(?:\^?\{?\(?([123])\)?\}?)?\s*$)");
  std::smatch m;
  if (!std::regex_match(tag, m, re)) throw Error("unsupported affine type " + tag);
  char f = static_cast<char>(std::toupper(m[1].str()[0]));
  int n = std::stoi(m[2].str());
  int t = m[3].matched ? std::stoi(m[3].str()) : 1;
  return make_datum(f, n, t);
}

inline std::string short_tag(const FoldedCartanDatum& D) {
  std::string s = std::string(1, D.family) + std::to_string(D.n);
  if (D.twist != 1) s += "^(" + std::to_string(D.twist) + ")";
  return s;
}

}  // namespace krc
