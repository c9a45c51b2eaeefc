#pragma once
// i-boxes, chains of i-boxes and box moves.

#include <optional>

#include "krc/adm_seq.hpp"

namespace krc {

struct IBox {
  long a = 0, b = 0;
  auto operator<=>(const IBox&) const = default;
  bool empty() const { return a > b; }
};

inline std::string to_string(const IBox& x) {
  if (x.a == x.b) return "[" + std::to_string(x.a) + "]";
  return "[" + std::to_string(x.a) + "," + std::to_string(x.b) + "]";
}

inline bool is_ibox(const AdmissibleSequence& seq, const IBox& x) {
  return x.a <= x.b && seq.color(x.a) == seq.color(x.b);
}

// [a,b} and {a,b]
inline IBox left_box(const AdmissibleSequence& seq, long a, long b) {
  return {a, seq.minus(b, seq.color(a))};
}
inline IBox right_box(const AdmissibleSequence& seq, long a, long b) {
  return {seq.plus(a, seq.color(b)), b};
}

// number of positions of the box colour inside the box
inline int ibox_size(const AdmissibleSequence& seq, const IBox& x) {
  int m = 0;
  Node c = seq.color(x.a);
  for (long t = x.a; t <= x.b; ++t)
    if (seq.color(t) == c) ++m;
  return m;
}

inline bool boxes_commute(const AdmissibleSequence& seq, const IBox& x, const IBox& y) {
  auto nested = [&](const IBox& u, const IBox& v) {
    return seq.minus(u.a) < v.a && v.a <= v.b && v.b < seq.plus(u.b);
  };
  return nested(x, y) || nested(y, x);
}

enum class Side : char { L = 'L', R = 'R' };

struct Chain {
  long base = 0;
  std::vector<Side> code;
  bool unbounded = false;  // code is a finite prefix of an infinite chain
  int length() const { return static_cast<int>(code.size()) + 1; }
  bool operator==(const Chain&) const = default;
};

inline std::string to_string(const Chain& c) {
  std::string s = std::to_string(c.base) + ":";
  for (Side x : c.code) s += static_cast<char>(x);
  return s;
}

inline Chain parse_chain(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error("chain must look like a:CODE, got " + text);
  Chain c;
  try {
    size_t used = 0;
    c.base = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw Error("");
  } catch (...) {
    throw Error("bad chain base in " + text);
  }
  for (char ch : text.substr(colon + 1)) {
    if (ch == 'L' || ch == 'l') c.code.push_back(Side::L);
    else if (ch == 'R' || ch == 'r') c.code.push_back(Side::R);
    else throw Error("chain code may only contain L and R");
  }
  return c;
}

inline std::vector<IBox> envelopes(const Chain& c) {
  std::vector<IBox> r{{c.base, c.base}};
  for (Side x : c.code) {
    IBox e = r.back();
    if (x == Side::L) --e.a;
    else ++e.b;
    r.push_back(e);
  }
  return r;
}

inline IBox range_of(const Chain& c) { return envelopes(c).back(); }

inline std::vector<IBox> chain_boxes(const AdmissibleSequence& seq, const Chain& c) {
  auto env = envelopes(c);
  std::vector<IBox> r{{c.base, c.base}};
  for (size_t k = 1; k < env.size(); ++k)
    r.push_back(c.code[k - 1] == Side::L ? left_box(seq, env[k].a, env[k].b)
                                         : right_box(seq, env[k].a, env[k].b));
  return r;
}

// chains over a range [A,B] with a given code: base = A + #L
inline Chain chain_on_range(long A, const std::vector<Side>& code) {
  long nl = std::count(code.begin(), code.end(), Side::L);
  return Chain{A + nl, code, false};
}

inline Chain canonical_chain(long A, long B) {
  return Chain{B, std::vector<Side>(B - A, Side::L), false};
}

// s is 1-based
inline bool movable(const Chain& c, int s) {
  if (s < 1 || s >= c.length()) return false;
  return s == 1 || c.code[s - 2] != c.code[s - 1];
}

inline std::vector<int> movable_indices(const Chain& c) {
  std::vector<int> r;
  for (int s = 1; s < c.length(); ++s)
    if (movable(c, s)) r.push_back(s);
  return r;
}

inline Side flip(Side x) { return x == Side::L ? Side::R : Side::L; }

inline Chain box_move(const Chain& c, int s) {
  if (!movable(c, s)) throw Error("box " + std::to_string(s) + " is not movable");
  Chain r = c;
  if (s == 1) {
    r.base += c.code[0] == Side::L ? -1 : 1;
    r.code[0] = flip(c.code[0]);
  } else {
    std::swap(r.code[s - 2], r.code[s - 1]);
  }
  return r;
}

struct MoveKind {
  enum Kind { Transposition, TSystem } kind = Transposition;
  IBox ibox{};  // the envelope for TSystem moves
};

inline MoveKind classify_move(const AdmissibleSequence& seq, const Chain& c, int s) {
  if (!movable(c, s)) throw Error("box " + std::to_string(s) + " is not movable");
  IBox e = envelopes(c)[s];
  if (is_ibox(seq, e)) return {MoveKind::TSystem, e};
  return {MoveKind::Transposition, e};
}

// path of box moves taking c1 to c2 (same range) through the canonical chain
inline std::vector<int> t_path(const Chain& c1, const Chain& c2) {
  if (range_of(c1) != range_of(c2)) throw Error("chains have different ranges");
  auto normalize = [](Chain c) {
    std::vector<int> path;
    for (;;) {
      auto it = std::find(c.code.begin(), c.code.end(), Side::R);
      if (it == c.code.end()) break;
      int j = static_cast<int>(it - c.code.begin()) + 1;
      int s = j == 1 ? 1 : j;
      c = box_move(c, s);
      path.push_back(s);
    }
    return path;
  };
  auto p = normalize(c1);
  auto q = normalize(c2);
  p.insert(p.end(), q.rbegin(), q.rend());
  return p;
}

inline Chain apply_path(Chain c, const std::vector<int>& path) {
  for (int s : path) c = box_move(c, s);
  return c;
}

// 1-based indices k with box_k = [A(i)^+, B(i)^-] for some colour i in the range
inline std::vector<int> frozen_indices(const AdmissibleSequence& seq, const Chain& c) {
  if (c.unbounded) return {};
  IBox rg = range_of(c);
  std::set<IBox> fr;
  for (long t = rg.a; t <= rg.b; ++t) {
    Node i = seq.color(t);
    fr.insert({seq.plus(rg.a, i), seq.minus(rg.b, i)});
  }
  auto bx = chain_boxes(seq, c);
  std::vector<int> r;
  for (size_t k = 0; k < bx.size(); ++k)
    if (fr.count(bx[k])) r.push_back(static_cast<int>(k) + 1);
  return r;
}

inline std::optional<int> member_index(const AdmissibleSequence& seq, const Chain& c, const IBox& x) {
  auto bx = chain_boxes(seq, c);
  for (size_t k = 0; k < bx.size(); ++k)
    if (bx[k] == x) return static_cast<int>(k) + 1;
  return std::nullopt;
}

inline std::string format_boxes(const std::vector<IBox>& bx) {
  std::string s = "(";
  for (size_t k = 0; k < bx.size(); ++k) s += (k ? "," : "") + to_string(bx[k]);
  return s + ")";
}

// one more step of an unbounded chain
inline Chain extended(const Chain& c, Side x) {
  Chain r = c;
  r.code.push_back(x);
  return r;
}

}  // namespace krc
