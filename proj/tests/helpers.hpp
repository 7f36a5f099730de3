#pragma once

// Shared helpers for the unit tests and the acceptance runner: seeded
// random generators for every domain type plus independent oracles
// (deliberately different algorithms from the library implementations).

#include <random>
#include <vector>

#include "posgen/posgen.hpp"

namespace testutil {

using posgen::Integer;
using posgen::MomentSequence;
using posgen::MultiIndex;
using posgen::Point;
using posgen::Polynomial;
using posgen::Rational;
using posgen::RationalMatrix;
using posgen::TruncatedSeries;

using Rng = std::mt19937_64;

inline int rand_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
inline Rational rand_rational(Rng& rng, int num_bound, int den_bound) {
  return Rational(rand_int(rng, -num_bound, num_bound),
                  rand_int(rng, 1, den_bound));
}

inline Rational rand_nonzero_rational(Rng& rng, int num_bound, int den_bound) {
  Rational r;
  do {
    r = rand_rational(rng, num_bound, den_bound);
  } while (r == 0);
  return r;
}

inline Point rand_point(Rng& rng, int n, int bound) {
  Point x(n);
  for (Rational& c : x) c = rand_rational(rng, bound, bound);
  return x;
}

template <typename Tag>
posgen::BasicSeries<Tag> rand_series(Rng& rng, int n, int d, int max_terms,
                                     int num_bound, int den_bound) {
  posgen::BasicSeries<Tag> s(n, d);
  const std::vector<MultiIndex> all = posgen::indices_up_to(n, d);
  const int terms = rand_int(rng, 0, max_terms);
  for (int t = 0; t < terms; ++t)
    s.set(all[rand_int(rng, 0, static_cast<int>(all.size()) - 1)],
          rand_rational(rng, num_bound, den_bound));
  return s;
}

inline TruncatedSeries rand_group_element(Rng& rng, int n, int d, int max_terms,
                                          int num_bound, int den_bound) {
  TruncatedSeries s =
      rand_series<posgen::series_tag>(rng, n, d, max_terms, num_bound, den_bound);
  s.set(MultiIndex(n, 0), 1);
  return s;
}

inline TruncatedSeries rand_algebra_element(Rng& rng, int n, int d,
                                            int max_terms, int num_bound,
                                            int den_bound) {
  TruncatedSeries s =
      rand_series<posgen::series_tag>(rng, n, d, max_terms, num_bound, den_bound);
  s.set(MultiIndex(n, 0), 0);
  return s;
}

inline Polynomial rand_poly(Rng& rng, int n, int d, int max_terms,
                            int num_bound, int den_bound) {
  return rand_series<posgen::poly_tag>(rng, n, d, max_terms, num_bound,
                                       den_bound);
}

inline posgen::measures::AtomicMeasure rand_measure(Rng& rng, int n,
                                                    int max_atoms, int bound,
                                                    bool allow_signed) {
  posgen::measures::AtomicMeasure m(n);
  const int atoms = rand_int(rng, 0, max_atoms);
  for (int i = 0; i < atoms; ++i) {
    Rational w = rand_nonzero_rational(rng, bound, bound);
    if (!allow_signed) w = posgen::abs(w);
    m.add_atom(rand_point(rng, n, bound), w);
  }
  return m;
}

/// Substitution S_lambda p (x) = p(lambda x): scales c_alpha by
/// lambda^|alpha|.
inline Polynomial scale_vars(const Polynomial& p, const Rational& lambda) {
  Polynomial out(p.n(), p.d());
  for (const auto& [alpha, c] : p.terms())
    out.set(alpha, c * posgen::pow(lambda, posgen::degree(alpha)));
  return out;
}

/// Determinant by exact fraction-based Gaussian elimination with partial
/// pivoting (independent of the library's LDL^T path).
inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw posgen::Error("invalid_argument", "not square");
  Rational det = 1;
  const std::size_t k = m.rows();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && m.at(pivot, col) == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < k; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    for (std::size_t i = col + 1; i < k; ++i) {
      if (m.at(i, col) == 0) continue;
      const Rational f = m.at(i, col) / m.at(col, col);
      for (std::size_t j = col; j < k; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

/// PSD oracle: a symmetric matrix is PSD iff every principal minor
/// (all index subsets, not only leading) is nonnegative.  Exponential in
/// the size; fine for the small matrices used in tests.
inline bool psd_by_principal_minors(const RationalMatrix& m) {
  const std::size_t k = m.rows();
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    RationalMatrix sub(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        sub.at(i, j) = m.at(idx[i], idx[j]);
    if (determinant(sub) < 0) return false;
  }
  return true;
}

/// Bell numbers B_0..B_k by the Bell triangle recurrence.
inline std::vector<Integer> bell_numbers(int k) {
  std::vector<Integer> bell{1};
  std::vector<Integer> row{1};
  for (int i = 1; i <= k; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Binomial convolution oracle using factorial-quotient binomials, a
/// different route than the library's multiplicative multi_binomial.
inline MomentSequence seq_convolve_oracle(const MomentSequence& s,
                                          const MomentSequence& t) {
  const int d = std::min(s.d(), t.d());
  MomentSequence out(s.n(), d);
  for (const MultiIndex& gamma : posgen::indices_up_to(s.n(), d)) {
    Rational acc = 0;
    for (const MultiIndex& alpha : posgen::indices_up_to(s.n(), posgen::degree(gamma))) {
      if (!posgen::divides(alpha, gamma)) continue;
      const MultiIndex beta = posgen::index_diff(gamma, alpha);
      const Rational binom =
          Rational(posgen::factorial(gamma)) /
          (Rational(posgen::factorial(alpha)) * Rational(posgen::factorial(beta)));
      acc += binom * s.coeff(alpha) * t.coeff(beta);
    }
    out.set(gamma, acc);
  }
  return out;
}

}  // namespace testutil
