#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "posgen/rational.hpp"

namespace posgen {

/// Exponent vector alpha = (alpha_1, ..., alpha_n), all entries >= 0.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically by exponents read left to right, larger first exponent
/// first.  For n = 2 this lists 1; x1, x2; x1^2, x1 x2, x2^2; ...
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(),
                                        a.end());
  }
};

/// All multi-indices with n entries and total degree <= d, in graded-lex
/// order.
inline std::vector<MultiIndex> indices_up_to(int n, int d) {
  std::vector<MultiIndex> out;
  for (int deg = 0; deg <= d; ++deg) {
    // Enumerate exponents of total degree `deg` in lex-descending order by
    // recursing on the first coordinate from high to low.
    MultiIndex cur(n, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == n - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
      }
      for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        self(self, pos + 1, remaining - e);
      }
    };
    if (n == 0) {
      if (deg == 0) out.push_back({});
      continue;
    }
    rec(rec, 0, deg);
  }
  return out;
}

/// Number of multi-indices with n entries and total degree <= d, i.e.
/// C(n + d, n).
inline Integer basis_size(int n, int d) { return binomial(n + d, n); }

inline Integer factorial(const MultiIndex& alpha) {
  Integer r = 1;
  for (int a : alpha) r *= factorial(a);
  return r;
}

/// Product of the coordinatewise binomials C(gamma_i, alpha_i).
inline Integer multi_binomial(const MultiIndex& gamma, const MultiIndex& alpha) {
  Integer r = 1;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    r *= binomial(gamma[i], alpha[i]);
    if (r == 0) break;
  }
  return r;
}

// MultiIndex is a std::vector alias, so these are named functions rather
// than operators: argument-dependent lookup would not find operators on a
// std:: type declared in this namespace.
inline MultiIndex index_sum(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// Coordinatewise a <= b.
inline bool divides(const MultiIndex& a, const MultiIndex& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline MultiIndex index_diff(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline bool is_zero(const MultiIndex& alpha) {
  return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
}

/// e_i as a multi-index of length n (i is 0-based).
inline MultiIndex unit_index(int n, int i) {
  MultiIndex e(n, 0);
  e[i] = 1;
  return e;
}

}  // namespace posgen
