#pragma once
// Seeds, matrix / Lambda / variable mutation and compatibility.

#include <optional>

#include "krc/laurent.hpp"
#include "krc/quivers.hpp"

namespace krc {

struct Seed {
  std::vector<LaurentPoly> vars;
  ExchangeMatrix B;
  std::optional<IntMatrix> lambda;

  int size() const { return B.size(); }
};

// x_0 .. x_{n-1} as the initial cluster
inline Seed initial_seed(const ExchangeMatrix& B, std::optional<IntMatrix> lambda = std::nullopt) {
  Seed s{{}, B, std::move(lambda)};
  for (int k = 0; k < B.size(); ++k) s.vars.push_back(LaurentPoly::variable(B.size(), k));
  return s;
}

inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
  if (k < 0 || k >= B.size()) throw Error("index out of range");
  if (!B.exchangeable(k)) throw Error("frozen vertex");
  ExchangeMatrix R = B;
  const int n = B.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == k || j == k) {
        R.set(i, j, -B(i, j));
      } else {
        int bik = B(i, k), bkj = B(k, j);
        int prod = bik * bkj;
        if (prod > 0) R.set(i, j, B(i, j) + (bik > 0 ? prod : -prod));
      }
    }
  R.clear_frozen_block();
  return R;
}

// Lambda' = E^T Lambda E, E = id except column k: E_kk = -1, E_tk = max(0, -b_tk)
inline IntMatrix mutate_lambda(const IntMatrix& L, const ExchangeMatrix& B, int k) {
  const int n = B.size();
  std::vector<int> e(n);
  for (int t = 0; t < n; ++t) e[t] = t == k ? -1 : std::max(0, -B(t, k));
  IntMatrix R = L;
  // columns: (L E)_{ik}
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int t = 0; t < n; ++t) s += L[i][t] * e[t];
    R[i][k] = s;
  }
  IntMatrix R2 = R;
  for (int j = 0; j < n; ++j) {
    int s = 0;
    for (int t = 0; t < n; ++t) s += e[t] * R[t][j];
    R2[k][j] = s;
  }
  return R2;
}

inline LaurentPoly exchange_numerator(const Seed& s, int k) {
  const int n = s.size();
  int nv = s.vars.empty() ? 0 : s.vars[0].nvars();
  LaurentPoly pos = LaurentPoly::constant(nv, 1), neg = LaurentPoly::constant(nv, 1);
  for (int i = 0; i < n; ++i) {
    int b = s.B(i, k);
    for (int m = 0; m < b; ++m) pos *= s.vars[i];
    for (int m = 0; m < -b; ++m) neg *= s.vars[i];
  }
  return pos + neg;
}

inline Seed mutate_seed(const Seed& s, int k) {
  if (k < 0 || k >= s.size()) throw Error("index out of range");
  if (!s.B.exchangeable(k)) throw Error("frozen vertex");
  Seed r = s;
  if (!s.vars.empty()) r.vars[k] = exchange_numerator(s, k).divide_exact(s.vars[k]);
  r.B = mutate_matrix(s.B, k);
  if (s.lambda) r.lambda = mutate_lambda(*s.lambda, s.B, k);
  return r;
}

inline Seed apply_sequence(Seed s, const std::vector<int>& ks) {
  for (int k : ks) s = mutate_seed(s, k);
  return s;
}

// sum_t lambda_it b_tj = 2 delta_ij for j exchangeable
inline bool check_compatible(const ExchangeMatrix& B, const IntMatrix& L) {
  const int n = B.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!B.exchangeable(j)) continue;
      int s = 0;
      for (int t = 0; t < n; ++t) s += L[i][t] * B(t, j);
      if (s != (i == j ? 2 : 0)) return false;
    }
  return true;
}

inline bool is_skew(const IntMatrix& L) {
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = 0; j < L.size(); ++j)
      if (L[i][j] != -L[j][i]) return false;
  return true;
}

inline bool all_positive(const Seed& s) {
  for (const auto& v : s.vars)
    if (!v.positive_coefficients()) return false;
  return true;
}

}  // namespace krc
