#pragma once
// Type A_n^(1) backend for the d / Lambda / Lambda^infty invariants and
// E-vectors of modules given by their fundamental factors.

#include "krc/tsystem_seed.hpp"

namespace krc::inv_a {

inline void require_type_a(const FoldedCartanDatum& D) {
  if (D.family != 'A' || D.twist != 1) throw Error("unsupported: invariants need type A_n^(1), got " + D.tag);
}

// zeros of the denominator d_{i,j}(z) sit at (-q)^e for these e
inline std::vector<int> denom_exponents(int n, Node i, Node j) {
  std::vector<int> r;
  int top = std::min({i, j, n + 1 - i, n + 1 - j});
  for (int s = 1; s <= top; ++s) r.push_back(std::abs(i - j) + 2 * s);
  return r;
}

class Invariants {
 public:
  explicit Invariants(const FoldedCartanDatum& D) : D_(D) { require_type_a(D); }
  int n() const { return D_.rank; }
  const FoldedCartanDatum& datum() const { return D_; }

  HatIndex dual(const HatIndex& y, long k) const {
    return {D_.star_pow(y.node, k), y.p + static_cast<int>(k) * (n() + 1)};
  }

  int dd(const HatIndex& x, const HatIndex& y) const {
    int c = 0;
    for (int e : denom_exponents(n(), x.node, y.node)) {
      if (y.p - x.p == e) ++c;
      if (x.p - y.p == e) ++c;
    }
    return c;
  }

  int lambda(const HatIndex& x, const HatIndex& y) const { return sum(x, y, false); }
  int lambda_inf(const HatIndex& x, const HatIndex& y) const { return sum(x, y, true); }

 private:
  int sum(const HatIndex& x, const HatIndex& y, bool inf) const {
    int h = n() + 1;
    long k0 = floor_div(x.p - y.p, h);
    int s = 0;
    for (long k = k0 - 3; k <= k0 + 3; ++k) {
      int v = dd(x, dual(y, k));
      if (!v) continue;
      long e = inf ? k : k + (k < 0 ? 1 : 0);
      s += (e % 2 == 0) ? v : -v;
    }
    return s;
  }
  FoldedCartanDatum D_;
};

// formal sum of fundamental factors; compared through its values on a fundamental domain
class EVector {
 public:
  EVector() = default;
  explicit EVector(const Invariants& I) : I_(&I) {}

  void add(const HatIndex& x, int c = 1) {
    if ((f_[x] += c) == 0) f_.erase(x);
  }
  EVector& operator+=(const EVector& o) {
    for (const auto& [x, c] : o.f_) add(x, c);
    return *this;
  }
  EVector scaled(int k) const {
    EVector r(*I_);
    if (k)
      for (const auto& [x, c] : f_) r.add(x, c * k);
    return r;
  }
  const std::map<HatIndex, int>& factors() const { return f_; }

  // E(M)(j,a) = Lambda^infty(M, V(j)_a)
  int value(const HatIndex& y) const {
    int s = 0;
    for (const auto& [x, c] : f_) s += c * I_->lambda_inf(x, y);
    return s;
  }
  // values on I x [0, n+1); E(D y) = -E(y) fixes the rest
  std::vector<int> table() const {
    std::vector<int> r;
    int n = I_->n();
    for (Node j = 1; j <= n; ++j)
      for (int a = 0; a < n + 1; ++a) r.push_back(value({j, a}));
    return r;
  }
  bool is_zero() const {
    auto t = table();
    return std::all_of(t.begin(), t.end(), [](int v) { return v == 0; });
  }
  bool same_function(const EVector& o) const { return table() == o.table(); }

 private:
  const Invariants* I_ = nullptr;
  std::map<HatIndex, int> f_;
};

inline EVector e_vector(const Invariants& I, const AdmissibleSequence& seq, const IBox& x) {
  EVector e(I);
  if (x.empty()) return e;
  Node c = seq.color(x.a);
  for (long t = x.a; t <= x.b; ++t)
    if (seq.color(t) == c) e.add(seq.at(t));
  return e;
}

// (E1, E2) = - sum c1(x) c2(y) Lambda^infty(x, y)
inline int bilinear(const Invariants& I, const EVector& e1, const EVector& e2) {
  int s = 0;
  for (const auto& [x, c1] : e1.factors())
    for (const auto& [y, c2] : e2.factors()) s += c1 * c2 * I.lambda_inf(x, y);
  return -s;
}

// Lambda between KR modules, only for strongly unmixed pairs where it equals Lambda^infty
inline int composite_lambda(const Invariants& I, const AdmissibleSequence& seq, const IBox& later,
                            const IBox& earlier) {
  if (!(earlier.b < later.a)) throw Error("unsupported: Lambda of a mixed pair");
  return -bilinear(I, e_vector(I, seq, later), e_vector(I, seq, earlier));
}

// sum_i b_ik E(M_i) = 0 for all exchangeable k of the seed attached to the chain
inline CheckResult eb_check(const AdmissibleSequence& seq, const Chain& c) {
  Invariants I(seq.datum());
  BoxSeed bs = seed_from_chain(seq, c, false);
  std::vector<EVector> E;
  for (const auto& x : bs.labels) E.push_back(e_vector(I, seq, x));
  for (int k : bs.seed.B.exchangeable_indices()) {
    EVector s(I);
    for (int i = 0; i < bs.seed.size(); ++i) s += E[i].scaled(bs.seed.B(i, k));
    if (!s.is_zero()) return {false, "E.B nonzero in column " + std::to_string(k + 1)};
  }
  return {true, ""};
}

// -Lambda^infty(S_j, S_k) = (beta_j, beta_k) for the fundamentals of an adapted word
inline CheckResult gram_check(const QDatum& q, const WeylWord& w) {
  Invariants I(q.datum);
  auto seq = from_q_datum(q, w);
  auto roots = word_roots(q.datum, w);
  for (int j = 1; j <= seq.ell(); ++j)
    for (int k = 1; k <= seq.ell(); ++k) {
      int lhs = -I.lambda_inf(seq.at(j), seq.at(k));
      int rhs = q.datum.pairing(roots[j - 1], roots[k - 1]);
      if (lhs != rhs)
        return {false, "pair (" + std::to_string(j) + "," + std::to_string(k) + "): " + std::to_string(lhs) +
                           " vs " + std::to_string(rhs)};
    }
  return {true, ""};
}

}  // namespace krc::inv_a
