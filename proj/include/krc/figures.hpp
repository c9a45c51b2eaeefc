#pragma once
// reference arrow lists, transcribed by hand from drawings of the repetition and HL quivers
#include <vector>

#include "krc/qdatum.hpp"

namespace krc::figures {

using Arrow = std::pair<HatIndex, HatIndex>;

struct Figure {
  const char* type;
  std::vector<int> xi;
  int lo, hi;  // levels covered by the picture
  std::vector<Arrow> arrows;
};

inline void rep(std::vector<Arrow>& v, int i, int di, int j, int dj, std::vector<int> ps) {
  for (int p : ps) v.push_back({{i, p + di}, {j, p + dj}});
}

inline std::vector<Figure> psi_figures() {
  std::vector<Figure> f;
  f.push_back({"A3", {2, 1, 0}, -4, 3,
               {{{1, -4}, {2, -3}}, {{1, -2}, {2, -1}}, {{1, 0}, {2, 1}}, {{1, 2}, {2, 3}},
                {{2, -3}, {1, -2}}, {{2, -3}, {3, -2}}, {{2, -1}, {1, 0}}, {{2, -1}, {3, 0}},
                {{2, 1}, {1, 2}}, {{2, 1}, {3, 2}}, {{3, -4}, {2, -3}}, {{3, -2}, {2, -1}},
                {{3, 0}, {2, 1}}, {{3, 2}, {2, 3}}}});
  f.push_back({"B2", {1, 0, -1}, -8, 1,
               {{{2, -8}, {1, -7}}, {{1, -7}, {2, -6}}, {{2, -6}, {3, -5}}, {{3, -5}, {2, -4}},
                {{2, -4}, {1, -3}}, {{1, -3}, {2, -2}}, {{2, -2}, {3, -1}}, {{3, -1}, {2, 0}},
                {{2, 0}, {1, 1}}}});
  Figure c3{"C3", {0, -1, 0, 2}, -6, 3, {}};
  rep(c3.arrows, 1, 0, 2, 1, {-6, -4, -2, 0, 2});
  c3.arrows.insert(c3.arrows.end(),
                   {{{2, -5}, {1, -4}}, {{2, -5}, {3, -4}}, {{2, -3}, {1, -2}}, {{2, -3}, {4, -2}},
                    {{2, -1}, {1, 0}}, {{2, -1}, {3, 0}}, {{2, 1}, {1, 2}}, {{2, 1}, {4, 2}},
                    {{3, -4}, {2, -3}}, {{3, 0}, {2, 1}}, {{4, -6}, {2, -5}}, {{4, -2}, {2, -1}},
                    {{4, 2}, {2, 3}}});
  f.push_back(c3);
  Figure d4{"D4", {2, 1, 0, 0}, -6, 1, {}};
  rep(d4.arrows, 1, 0, 2, 1, {-6, -4, -2, 0});
  rep(d4.arrows, 2, 0, 1, 1, {-5, -3, -1});
  rep(d4.arrows, 2, 0, 3, 1, {-5, -3, -1});
  rep(d4.arrows, 2, 0, 4, 1, {-5, -3, -1});
  rep(d4.arrows, 3, 0, 2, 1, {-6, -4, -2, 0});
  rep(d4.arrows, 4, 0, 2, 1, {-6, -4, -2, 0});
  f.push_back(d4);
  return f;
}

// HL quiver on hat-indices with level < 1
inline std::vector<Figure> hl_figures() {
  std::vector<Figure> f;
  f.push_back({"A3", {2, 1, 0}, -7, 0,
               {{{1, -6}, {2, -5}}, {{1, -4}, {2, -3}}, {{1, -2}, {2, -1}}, {{1, -4}, {1, -6}},
                {{1, -2}, {1, -4}}, {{1, 0}, {1, -2}}, {{2, -7}, {1, -6}}, {{2, -7}, {3, -6}},
                {{2, -5}, {1, -4}}, {{2, -5}, {3, -4}}, {{2, -5}, {2, -7}}, {{2, -3}, {1, -2}},
                {{2, -3}, {3, -2}}, {{2, -3}, {2, -5}}, {{2, -1}, {1, 0}}, {{2, -1}, {3, 0}},
                {{2, -1}, {2, -3}}, {{3, -6}, {2, -5}}, {{3, -4}, {2, -3}}, {{3, -4}, {3, -6}},
                {{3, -2}, {2, -1}}, {{3, -2}, {3, -4}}, {{3, 0}, {3, -2}}}});
  f.push_back({"B2", {1, 0, -1}, -10, 0,
               {{{1, -7}, {2, -6}}, {{1, -3}, {2, -2}}, {{1, -3}, {1, -7}}, {{2, -10}, {1, -7}},
                {{2, -8}, {2, -10}}, {{2, -8}, {3, -5}}, {{2, -6}, {1, -3}}, {{2, -6}, {2, -8}},
                {{2, -4}, {2, -6}}, {{2, -4}, {3, -1}}, {{2, -2}, {2, -4}}, {{2, 0}, {2, -2}},
                {{3, -9}, {2, -8}}, {{3, -5}, {2, -4}}, {{3, -5}, {3, -9}}, {{3, -1}, {2, 0}},
                {{3, -1}, {3, -5}}}});
  Figure c3{"C3", {0, -1, 0, 2}, -10, 0, {}};
  rep(c3.arrows, 1, 0, 2, 1, {-10, -8, -6, -4, -2});
  rep(c3.arrows, 1, 0, 1, -2, {-8, -6, -4, -2, 0});
  c3.arrows.insert(c3.arrows.end(),
                   {{{2, -9}, {1, -8}}, {{2, -9}, {4, -6}}, {{2, -7}, {1, -6}}, {{2, -7}, {2, -9}},
                    {{2, -7}, {3, -4}}, {{2, -5}, {1, -4}}, {{2, -5}, {4, -2}}, {{2, -5}, {2, -7}},
                    {{2, -3}, {1, -2}}, {{2, -3}, {2, -5}}, {{2, -3}, {3, 0}}, {{2, -1}, {1, 0}},
                    {{2, -1}, {2, -3}}, {{3, -8}, {2, -7}}, {{3, -4}, {3, -8}}, {{3, -4}, {2, -3}},
                    {{3, 0}, {3, -4}}, {{4, -10}, {2, -9}}, {{4, -6}, {2, -5}}, {{4, -6}, {4, -10}},
                    {{4, -2}, {2, -1}}, {{4, -2}, {4, -6}}});
  f.push_back(c3);
  Figure d4{"D4", {2, 1, 0, 0}, -7, 0, {}};
  rep(d4.arrows, 1, 0, 2, 1, {-6, -4, -2});
  rep(d4.arrows, 1, 0, 1, -2, {-4, -2, 0});
  for (int j : {1, 3, 4}) rep(d4.arrows, 2, 0, j, 1, {-7, -5, -3, -1});
  rep(d4.arrows, 2, 0, 2, -2, {-5, -3, -1});
  for (int i : {3, 4}) {
    rep(d4.arrows, i, 0, 2, 1, {-6, -4, -2});
    rep(d4.arrows, i, 0, i, -2, {-4, -2, 0});
  }
  f.push_back(d4);
  return f;
}

}  // namespace krc::figures
