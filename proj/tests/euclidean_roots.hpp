#pragma once

// Simple roots of every simple type as explicit vectors in Euclidean space
// (Bourbaki plates). Used only to cross-check the Cartan-matrix construction.

#include <vector>

#include "wzw/rational.hpp"
#include "wzw/rootsys.hpp"

namespace wzw::oracle {

inline std::vector<RatVec> euclidean_simple_roots(const SimpleType& t) {
  const int n = t.rank;
  auto e = [](int dim, int i) {
    RatVec v(static_cast<std::size_t>(dim));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  std::vector<RatVec> out;
  switch (t.family) {
    case 'A':
      for (int i = 0; i < n; ++i) out.push_back(sub(e(n + 1, i), e(n + 1, i + 1)));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i + 1 < n; ++i) out.push_back(sub(e(n, i), e(n, i + 1)));
      if (t.family == 'B') out.push_back(e(n, n - 1));
      if (t.family == 'C') out.push_back(scale(e(n, n - 1), Rational(2)));
      if (t.family == 'D') out.push_back(add(e(n, n - 2), e(n, n - 1)));
      break;
    case 'E': {
      RatVec a1(8, Rational(-1, 2));
      a1[0] = Rational(1, 2);
      a1[7] = Rational(1, 2);
      out.push_back(a1);
      out.push_back(add(e(8, 0), e(8, 1)));
      for (int i = 1; i < 7; ++i) out.push_back(sub(e(8, i), e(8, i - 1)));
      out.resize(static_cast<std::size_t>(n));
      break;
    }
    case 'F':
      out.push_back(sub(e(4, 1), e(4, 2)));
      out.push_back(sub(e(4, 2), e(4, 3)));
      out.push_back(e(4, 3));
      out.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      break;
    case 'G':
      out.push_back({1, -1, 0});
      out.push_back({-2, 1, 1});
      break;
  }
  return out;
}

}  // namespace wzw::oracle
