#pragma once
// Seeds attached to chains of i-boxes, T-system relations and transport of
// seeds along box moves.

#include "krc/cluster.hpp"

namespace krc {

struct KRLabel {
  int node = 0;  // pi(i_a)
  int m = 0;     // |[a,b]|
  int p = 0;     // p_a
  std::string text;
};

inline KRLabel kr_label(const AdmissibleSequence& seq, const IBox& x) {
  if (!is_ibox(seq, x)) throw Error("not an i-box: " + to_string(x));
  const auto& D = seq.datum();
  KRLabel l;
  l.node = D.pi(seq.color(x.a));
  l.m = ibox_size(seq, x);
  l.p = seq.level(x.a);
  l.text = "W^{(" + std::to_string(l.node) + ")}_{" + std::to_string(l.m) + "," +
           spectral_parameter(D, seq.at(x.a)) + "}";
  return l;
}

// x_{[a+,b]} x_{[a,b-]} = x_{[a,b]} x_{[a+,b-]} + prod_{j ~ i_a} x_{[a(j)+, b(j)-]}
struct Relation {
  IBox box;
  IBox lhs1, lhs2;
  IBox rhs1, rhs1b;           // rhs1b may be empty
  std::vector<IBox> rhs2;     // empty boxes dropped
};

inline Relation t_relation(const AdmissibleSequence& seq, const IBox& x) {
  if (!is_ibox(seq, x)) throw Error("not an i-box: " + to_string(x));
  if (x.a == x.b) throw Error("box " + to_string(x) + " has no T-system relation");
  const auto& D = seq.datum();
  long ap = seq.plus(x.a), bm = seq.minus(x.b);
  Relation r;
  r.box = x;
  r.lhs1 = {ap, x.b};
  r.lhs2 = {x.a, bm};
  r.rhs1 = x;
  r.rhs1b = {ap, bm};
  for (Node j : D.neighbours(seq.color(x.a))) {
    IBox y{seq.plus(x.a, j), seq.minus(x.b, j)};
    if (!y.empty()) r.rhs2.push_back(y);
  }
  return r;
}

inline std::string format_relation(const Relation& r) {
  auto m = [](const IBox& b) { return "[M" + to_string(b) + "]"; };
  std::string s = m(r.lhs1) + m(r.lhs2) + " = " + m(r.rhs1);
  if (!r.rhs1b.empty()) s += m(r.rhs1b);
  s += " + ";
  if (r.rhs2.empty()) s += "1";
  for (const auto& b : r.rhs2) s += m(b);
  return s;
}

// a seed whose index k carries the k-th box of a chain
struct BoxSeed {
  AdmissibleSequence seq;
  Chain chain;
  Seed seed;
  std::vector<IBox> labels;
  std::vector<IBox> initial_labels;  // names of the ring variables
  bool track_vars = true;

  std::optional<int> index_of(const IBox& x) const {
    for (size_t k = 0; k < labels.size(); ++k)
      if (labels[k] == x) return static_cast<int>(k);
    return std::nullopt;
  }
  std::vector<std::string> variable_names() const {
    std::vector<std::string> r;
    for (const auto& b : initial_labels) r.push_back("x" + to_string(b));
    return r;
  }
};

// chain (B, L...L) on [A,B]; index k holds [s,B} with s = B+1-k, quiver of GLS type
inline BoxSeed canonical_seed(const AdmissibleSequence& seq, long A, long B, bool track_vars = true) {
  if (A > B) throw Error("empty range");
  BoxSeed bs;
  bs.seq = seq;
  bs.chain = canonical_chain(A, B);
  bs.labels = chain_boxes(seq, bs.chain);
  bs.initial_labels = bs.labels;
  bs.track_vars = track_vars;
  std::vector<long> K;
  std::vector<bool> ex;
  for (long s = B; s >= A; --s) {
    K.push_back(s);
    ex.push_back(A <= seq.minus(s));
  }
  ExchangeMatrix Bm = to_exchange_matrix(gls_quiver(seq, A, B), K, ex);
  bs.seed = track_vars ? initial_seed(Bm) : Seed{{}, Bm, std::nullopt};
  return bs;
}

// one box move; TSystem moves mutate, transpositions swap
inline void apply_box_move(BoxSeed& bs, int s) {
  MoveKind mk = classify_move(bs.seq, bs.chain, s);
  Chain next = box_move(bs.chain, s);
  if (mk.kind == MoveKind::Transposition) {
    bs.seed.B.swap_indices(s - 1, s);
    if (bs.track_vars) std::swap(bs.seed.vars[s - 1], bs.seed.vars[s]);
    if (bs.seed.lambda) {
      auto& L = *bs.seed.lambda;
      std::swap(L[s - 1], L[s]);
      for (auto& row : L) std::swap(row[s - 1], row[s]);
    }
  } else {
    if (!bs.seed.B.exchangeable(s - 1)) throw Error("frozen vertex");
    if (bs.track_vars) {
      bs.seed = mutate_seed(bs.seed, s - 1);
    } else {
      bs.seed.B = mutate_matrix(bs.seed.B, s - 1);
    }
  }
  bs.chain = next;
  bs.labels = chain_boxes(bs.seq, next);
}

inline BoxSeed seed_from_chain(const AdmissibleSequence& seq, const Chain& c, bool track_vars = true) {
  if (c.unbounded) throw Error("infinite range");
  IBox rg = range_of(c);
  BoxSeed bs = canonical_seed(seq, rg.a, rg.b, track_vars);
  for (int s : t_path(bs.chain, c)) apply_box_move(bs, s);
  return bs;
}

// Solve the T-system for x_{[a,b]} in terms of the canonical cluster on [A,B].
class TSystemOracle {
 public:
  TSystemOracle(const AdmissibleSequence& seq, long A, long B) : seq_(seq), A_(A), B_(B) {
    auto c = canonical_chain(A, B);
    init_ = chain_boxes(seq, c);
    n_ = static_cast<int>(init_.size());
    one_ = LaurentPoly::constant(n_, 1);
    for (int k = 0; k < n_; ++k) memo_[init_[k]] = LaurentPoly::variable(n_, k);
  }
  const LaurentPoly& value(const IBox& x) {
    if (x.empty()) return one_;
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    if (!is_ibox(seq_, x) || x.a < A_ || x.b > B_) throw Error("box outside the range: " + to_string(x));
    if (busy_.count(x)) throw Error("T-system recursion does not terminate at " + to_string(x));
    busy_.insert(x);
    // relation on [a, b+]: x[a+,b+] x[a,b] = x[a,b+] x[a+,b] + prod x[a(j)+, b+(j)-]
    long bp = seq_.plus(x.b);
    if (bp > B_) throw Error("box " + to_string(x) + " cannot be reached");
    IBox big{x.a, bp};
    Relation r = t_relation(seq_, big);
    LaurentPoly num = value(r.rhs1) * value(r.rhs1b);
    LaurentPoly prod = LaurentPoly::constant(n_, 1);
    for (const auto& y : r.rhs2) prod *= value(y);
    num += prod;
    LaurentPoly v = num.divide_exact(value(r.lhs1));
    busy_.erase(x);
    return memo_[x] = std::move(v);
  }

 private:
  AdmissibleSequence seq_;
  long A_, B_;
  int n_ = 0;
  std::vector<IBox> init_;
  std::map<IBox, LaurentPoly> memo_;
  std::set<IBox> busy_;
  LaurentPoly one_;
};

struct CheckResult {
  bool ok = true;
  std::string detail;
};

// for a TSystem move at s: x'_s x_s equals the T-relation evaluated on the seed's own variables
inline CheckResult verify_box_move_mutation(const BoxSeed& bs, int s) {
  MoveKind mk = classify_move(bs.seq, bs.chain, s);
  if (mk.kind != MoveKind::TSystem) return {true, "transposition"};
  if (!bs.track_vars) return {false, "seed does not track variables"};
  Relation r = t_relation(bs.seq, mk.ibox);
  const LaurentPoly& xs = bs.seed.vars[s - 1];
  if (bs.labels[s - 1] != r.lhs2 && bs.labels[s - 1] != r.lhs1)
    return {false, "moved box " + to_string(bs.labels[s - 1]) + " is not in the relation"};
  Seed m = mutate_seed(bs.seed, s - 1);
  const int nv = xs.nvars();
  auto lookup = [&](const IBox& x) -> std::optional<LaurentPoly> {
    if (x.empty()) return LaurentPoly::constant(nv, 1);
    if (auto k = bs.index_of(x)) return bs.seed.vars[*k];
    return std::nullopt;
  };
  auto v1 = lookup(r.rhs1), v1b = lookup(r.rhs1b);
  if (!v1 || !v1b) return {false, "relation box missing from the chain"};
  LaurentPoly rhs = *v1 * *v1b;
  LaurentPoly prod = LaurentPoly::constant(nv, 1);
  for (const auto& y : r.rhs2) {
    auto v = lookup(y);
    if (!v) return {false, "relation box " + to_string(y) + " missing from the chain"};
    prod *= *v;
  }
  rhs += prod;
  if (!(m.vars[s - 1] * xs == rhs)) return {false, "exchange relation differs from " + format_relation(r)};
  // and the new label is the other side of the relation
  IBox moved = chain_boxes(bs.seq, box_move(bs.chain, s))[s - 1];
  IBox other = bs.labels[s - 1] == r.lhs2 ? r.lhs1 : r.lhs2;
  if (moved != other) return {false, "new box " + to_string(moved) + " expected " + to_string(other)};
  return {true, format_relation(r)};
}

// column law of the GLS matrix: +1 at s+ and V_in(s), -1 at s- and V_out(s), inside the window
inline CheckResult vinout_check(const AdmissibleSequence& seq, long A, long B) {
  const auto& D = seq.datum();
  BoxSeed bs = canonical_seed(seq, A, B, false);
  auto pos = [&](long s) { return static_cast<int>(B - s); };
  for (long s = A; s <= B; ++s) {
    int k = pos(s);
    if (!bs.seed.B.exchangeable(k)) continue;
    std::map<long, int> want;
    long sp = seq.plus(s), sm = seq.minus(s);
    if (sp <= B) want[sp] += 1;
    if (sm >= A) want[sm] -= 1;
    for (long t = A; t <= B; ++t) {
      if (!D.adjacent(seq.color(s), seq.color(t))) continue;
      long tm = seq.minus(t);
      if (tm < sm && sm < t && t < s) want[t] += 1;
      if (sm < tm && tm < s && s < t) want[t] -= 1;
    }
    for (long t = A; t <= B; ++t) {
      int w = want.count(t) ? want[t] : 0;
      if (bs.seed.B(pos(t), k) != w)
        return {false, "column " + std::to_string(s) + " row " + std::to_string(t) + ": got " +
                           std::to_string(bs.seed.B(pos(t), k)) + ", want " + std::to_string(w)};
    }
  }
  return {true, ""};
}

}  // namespace krc
