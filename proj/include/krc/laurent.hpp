#pragma once
// Laurent polynomials over Z with dense exponent vectors.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "krc/root_data.hpp"

namespace krc {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : n_(nvars) {}

  static LaurentPoly constant(int nvars, BigInt c) {
    LaurentPoly p(nvars);
    if (c != 0) p.t_[Exponent(nvars, 0)] = std::move(c);
    return p;
  }
  static LaurentPoly variable(int nvars, int k, int power = 1) {
    LaurentPoly p(nvars);
    Exponent e(nvars, 0);
    e[k] = power;
    p.t_[e] = 1;
    return p;
  }
  static LaurentPoly monomial(const Exponent& e, BigInt c = 1) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (c != 0) p.t_[e] = std::move(c);
    return p;
  }

  int nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  bool operator==(const LaurentPoly& o) const { return t_ == o.t_; }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) accumulate(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) accumulate(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check(b);
    LaurentPoly r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.accumulate(e, ca * cb);
      }
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly times_monomial(const Exponent& m, const BigInt& c = 1) const {
    LaurentPoly r(n_);
    for (const auto& [e, x] : t_) {
      Exponent f = e;
      for (int i = 0; i < n_; ++i) f[i] += m[i];
      r.t_.emplace_hint(r.t_.end(), std::move(f), x * c);
    }
    return r;
  }

  // exact division by leading-term elimination; throws if the quotient is not Laurent
  LaurentPoly divide_exact(const LaurentPoly& b) const {
    check(b);
    if (b.is_zero()) throw Error("division by zero");
    LaurentPoly q(n_);
    if (is_zero()) return q;
    Exponent lo(n_), hi(n_);
    auto [amin, amax] = bounds();
    auto [bmin, bmax] = b.bounds();
    for (int i = 0; i < n_; ++i) {
      lo[i] = amin[i] - bmin[i];
      hi[i] = amax[i] - bmax[i];
      if (lo[i] > hi[i]) throw Error("non-Laurent division");
    }
    const auto& [be, bc] = *b.t_.rbegin();
    LaurentPoly r = *this;
    while (!r.is_zero()) {
      const auto& [re, rc] = *r.t_.rbegin();
      if (rc % bc != 0) throw Error("non-Laurent division");
      Exponent qe(n_);
      for (int i = 0; i < n_; ++i) {
        qe[i] = re[i] - be[i];
        if (qe[i] < lo[i] || qe[i] > hi[i]) throw Error("non-Laurent division");
      }
      BigInt qc = rc / bc;
      for (const auto& [e, c] : b.t_) {
        Exponent f = e;
        for (int i = 0; i < n_; ++i) f[i] += qe[i];
        r.accumulate(f, -(c * qc));
      }
      q.accumulate(qe, qc);
    }
    return q;
  }

  bool positive_coefficients() const {
    for (const auto& [e, c] : t_)
      if (c <= 0) return false;
    return true;
  }

  std::pair<Exponent, Exponent> bounds() const {
    Exponent lo(n_, 0), hi(n_, 0);
    bool first = true;
    for (const auto& [e, c] : t_) {
      for (int i = 0; i < n_; ++i) {
        if (first || e[i] < lo[i]) lo[i] = e[i];
        if (first || e[i] > hi[i]) hi[i] = e[i];
      }
      first = false;
    }
    return {lo, hi};
  }

  // numerator / monomial denominator, e.g. "(x1 + x2)/x0"
  std::string to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    auto [lo, hi] = bounds();
    Exponent den(n_, 0);
    for (int i = 0; i < n_; ++i) den[i] = lo[i] < 0 ? -lo[i] : 0;
    std::string num;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      Exponent e = it->first;
      for (int i = 0; i < n_; ++i) e[i] += den[i];
      BigInt c = it->second;
      std::string sign = c < 0 ? "-" : "+";
      if (c < 0) c = -c;
      std::string mono = monomial_text(e, names);
      std::string term;
      if (mono.empty()) term = c.str();
      else if (c == 1) term = mono;
      else term = c.str() + "*" + mono;
      if (first) num = (sign == "-" ? "-" : "") + term;
      else num += " " + sign + " " + term;
      first = false;
    }
    std::string d = monomial_text(den, names);
    if (d.empty()) return num;
    if (t_.size() > 1) num = "(" + num + ")";
    return num + "/" + (std::count(den.begin(), den.end(), 0) < n_ - 1 ? "(" + d + ")" : d);
  }

 private:
  static std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += names.at(i);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
  void accumulate(const Exponent& e, const BigInt& c) {
    if (c == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  void check(const LaurentPoly& o) const {
    if (n_ != o.n_) throw Error("Laurent polynomials in different rings");
  }

  int n_ = 0;
  Terms t_;
};

}  // namespace krc
