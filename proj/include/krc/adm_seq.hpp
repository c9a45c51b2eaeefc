#pragma once
// Bi-infinite admissible sequences (i_k, p_k), k in Z, stored by one period.

#include "krc/qdatum.hpp"

namespace krc {

class AdmissibleSequence {
 public:
  AdmissibleSequence() = default;
  // period_i / period_p hold k = 1..ell; the rest follows from i_{k+ell} = i_k^*
  AdmissibleSequence(FoldedCartanDatum D, std::vector<Node> period_i, std::vector<int> period_p)
      : D_(std::move(D)), pi_(std::move(period_i)), pp_(std::move(period_p)) {
    if (static_cast<int>(pi_.size()) != D_.ell || pp_.size() != pi_.size())
      throw Error("period must have length " + std::to_string(D_.ell));
    for (Node i : pi_)
      if (i < 1 || i > D_.rank) throw Error("color out of range: " + std::to_string(i));
  }

  const FoldedCartanDatum& datum() const { return D_; }
  int ell() const { return D_.ell; }
  int period_shift() const { return D_.ord_sigma * D_.h_dual; }
  const std::vector<Node>& period_i() const { return pi_; }
  const std::vector<int>& period_p() const { return pp_; }

  Node color(long k) const {
    long q = floor_div(k - 1, ell());
    return D_.star_pow(pi_[k - 1 - q * ell()], q);
  }
  int level(long k) const {
    long q = floor_div(k - 1, ell());
    return pp_[k - 1 - q * ell()] + static_cast<int>(q) * period_shift();
  }
  HatIndex at(long k) const { return {color(k), level(k)}; }
  int d(long k) const { return D_.d(color(k)); }

  // s^+ and s^-
  long plus(long s) const {
    Node c = color(s);
    for (long t = s + 1;; ++t)
      if (color(t) == c) return t;
  }
  long minus(long s) const {
    Node c = color(s);
    for (long t = s - 1;; --t)
      if (color(t) == c) return t;
  }
  // s(j)^+ = min{t >= s : i_t = j}, s(j)^- = max{t <= s : i_t = j}
  long plus(long s, Node j) const {
    for (long t = s;; ++t)
      if (color(t) == j) return t;
  }
  long minus(long s, Node j) const {
    for (long t = s;; --t)
      if (color(t) == j) return t;
  }

  AdmissibleSequence shift(long m) const {
    std::vector<Node> ni;
    std::vector<int> np;
    for (long k = 1; k <= ell(); ++k) {
      ni.push_back(color(k + m));
      np.push_back(level(k + m));
    }
    return AdmissibleSequence(D_, ni, np);
  }

  bool operator==(const AdmissibleSequence& o) const {
    return D_.tag == o.D_.tag && pi_ == o.pi_ && pp_ == o.pp_;
  }

 private:
  FoldedCartanDatum D_;
  std::vector<Node> pi_;
  std::vector<int> pp_;
};

inline Validation validate_sequence(const AdmissibleSequence& seq) {
  const auto& D = seq.datum();
  const long L = seq.ell();
  const long lo = 1 - L, hi = 2 * L;
  Validation v;
  auto idx = [](long k) { return std::to_string(k); };
  for (long s = lo; s <= hi; ++s) {
    long sp = seq.plus(s);
    if (sp <= hi && seq.level(sp) != seq.level(s) + 2 * seq.d(s))
      v.fail("(a) fails at k=" + idx(s));
  }
  for (long s = lo; s <= hi; ++s) {
    long sp = seq.plus(s);
    for (long t = s + 1; t < sp && t <= hi; ++t) {
      if (!D.adjacent(seq.color(s), seq.color(t))) continue;
      if (seq.minus(t) < s && seq.level(t) != seq.level(s) + D.min_d(seq.color(s), seq.color(t)))
        v.fail("(b) fails at s=" + idx(s) + ", t=" + idx(t));
    }
  }
  for (long s = lo; s <= hi; ++s)
    for (long t = lo; t <= hi; ++t)
      if (seq.color(t) == D.sig(seq.color(s)) &&
          floor_mod(seq.level(t) - seq.level(s) - 2, 2 * seq.d(s)) != 0)
        v.fail("(c) fails at s=" + idx(s) + ", t=" + idx(t));
  for (long s = lo; s + L - 1 <= hi; ++s) {
    WeylWord w;
    for (long k = s; k < s + L; ++k) w.push_back(seq.color(k));
    if (!is_longest_word(D, w)) v.fail("(d) window starting at k=" + idx(s) + " is not a reduced word of w0");
  }
  return v;
}

inline AdmissibleSequence from_q_datum(const QDatum& q, const WeylWord& w) {
  const auto& D = q.datum;
  if (!is_longest_word(D, w)) throw Error("word not reduced");
  if (!is_adapted(q, w)) throw Error("word not adapted");
  std::vector<int> p;
  QDatum cur = q;
  for (Node i : w) {
    p.push_back(cur.at(i));
    cur.xi[i - 1] += 2 * D.d(i);
  }
  return AdmissibleSequence(D, w, p);
}

inline AdmissibleSequence from_q_datum(const QDatum& q) {
  return from_q_datum(q, adapted_longest_word(q));
}

// xi_i = p_k at the first k >= 1 with i_k = i
inline QDatum to_q_datum(const AdmissibleSequence& seq) {
  const auto& D = seq.datum();
  QDatum q{D, std::vector<int>(D.rank, 0)};
  for (Node i = 1; i <= D.rank; ++i) q.xi[i - 1] = seq.level(seq.plus(1, i));
  return q;
}

inline WeylWord base_word(const AdmissibleSequence& seq) { return seq.period_i(); }

// {(i_k,p_k) : k <= 0} agrees with {(i,p) in hat : p < xi_i}; checked on levels >= lo
inline bool is_xi_adapted(const AdmissibleSequence& seq, const QDatum& q, int depth = 3) {
  int lo = *std::min_element(q.xi.begin(), q.xi.end()) - depth * seq.period_shift();
  std::set<HatIndex> a, b;
  for (long k = 0; k >= -(depth + 4) * seq.ell(); --k)
    if (seq.level(k) >= lo) a.insert(seq.at(k));
  for (const auto& x : hat_points(q, lo, *std::max_element(q.xi.begin(), q.xi.end())))
    if (x.p < q.at(x.node)) b.insert(x);
  return a == b;
}

// A3 example sequence with i_{-2..3} = 3,2,3,1,2,3
inline AdmissibleSequence a3_example_sequence() {
  auto D = folded_datum("A3");
  return from_q_datum(make_q_datum(D, {0, 1, 2}), {1, 2, 3, 1, 2, 1});
}

// example height functions per type
inline std::vector<int> example_xi(const FoldedCartanDatum& D) {
  if (D.twist == 1) {
    switch (D.family) {
      case 'B':
        if (D.n == 2) return {1, 0, -1};
        break;
      case 'C':
        if (D.n == 3) return {0, -1, 0, 2};
        break;
      case 'D':
        if (D.n == 4) return {2, 1, 0, 0};
        break;
      case 'F':
        return {0, -2, -2, -3, -4, -2};
      default:
        break;
    }
  }
  // generic: walk the diagram from node 1 and fix heights along a spanning tree
  std::vector<int> xi(D.rank, 0);
  std::vector<bool> done(D.rank + 1, false);
  std::vector<Node> queue{1};
  done[1] = true;
  // ensure folded conditions: orbit members placed at xi + 2k along sigma
  auto place_orbit = [&](Node j, int val) {
    Node t = j;
    for (int k = 0; k < D.d(j); ++k, t = D.sig(t)) {
      xi[t - 1] = val + 2 * k;
      if (!done[t]) {
        done[t] = true;
        queue.push_back(t);
      }
    }
  };
  place_orbit(1, 0);
  for (size_t h = 0; h < queue.size(); ++h) {
    Node i = queue[h];
    for (Node j : D.neighbours(i)) {
      if (done[j]) continue;
      if (D.d(i) == D.d(j)) {
        xi[j - 1] = xi[i - 1] + D.d(i);
        done[j] = true;
        queue.push_back(j);
      } else if (D.d(i) == 1) {
        place_orbit(j, xi[i - 1] + 1);
      } else {
        xi[j - 1] = xi[i - 1] + 1;
        done[j] = true;
        queue.push_back(j);
      }
    }
  }
  return xi;
}

// default sequence of a type: the A3 example for A3, otherwise the adapted word of example_xi
inline AdmissibleSequence default_sequence(const FoldedCartanDatum& D) {
  if (D.tag == "A_3^{(1)}") return a3_example_sequence();
  return from_q_datum(make_q_datum(D, example_xi(D)));
}

}  // namespace krc
