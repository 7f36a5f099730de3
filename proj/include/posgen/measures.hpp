#pragma once

#include <map>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/matrix.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"

namespace posgen::measures {

/// Finitely many weighted point masses on Q^n; weights may be signed.
/// Canonical form merges equal atoms and drops zero weights.
class AtomicMeasure {
 public:
  explicit AtomicMeasure(int n) : n_(n) {
    if (n < 1) throw Error("invalid_argument", "dimension must be >= 1");
  }

  int n() const { return n_; }

  AtomicMeasure& add_atom(const Point& y, const Rational& w) {
    if (static_cast<int>(y.size()) != n_)
      throw Error("dimension_mismatch", "atom has wrong dimension");
    auto [it, inserted] = atoms_.try_emplace(y, w);
    if (!inserted) it->second += w;
    if (it->second == 0) atoms_.erase(it);
    return *this;
  }

  const std::map<Point, Rational>& atoms() const { return atoms_; }

  bool nonnegative() const {
    for (const auto& [y, w] : atoms_)
      if (w < 0) return false;
    return true;
  }

  Rational total_mass() const {
    Rational t = 0;
    for (const auto& [y, w] : atoms_) t += w;
    return t;
  }

  bool operator==(const AtomicMeasure& other) const {
    return n_ == other.n_ && atoms_ == other.atoms_;
  }

 private:
  int n_;
  std::map<Point, Rational> atoms_;
};

inline AtomicMeasure dirac(const Point& y) {
  AtomicMeasure m(static_cast<int>(y.size()));
  m.add_atom(y, 1);
  return m;
}

inline Rational point_power(const Point& y, const MultiIndex& alpha) {
  Rational r = 1;
  for (std::size_t i = 0; i < y.size(); ++i)
    for (int e = 0; e < alpha[i]; ++e) r *= y[i];
  return r;
}

/// Truncated moments s_alpha = sum_i w_i y_i^alpha for |alpha| <= d.
inline MomentSequence measure_moments(const AtomicMeasure& m, int d) {
  MomentSequence s(m.n(), d);
  for (const MultiIndex& alpha : indices_up_to(m.n(), d)) {
    Rational v = 0;
    for (const auto& [y, w] : m.atoms()) v += w * point_power(y, alpha);
    s.set(alpha, v);
  }
  return s;
}

/// Convolution: atoms add, weights multiply, collisions merge exactly.
inline AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b) {
  if (a.n() != b.n())
    throw Error("dimension_mismatch", "measures live on different spaces");
  AtomicMeasure out(a.n());
  for (const auto& [ya, wa] : a.atoms())
    for (const auto& [yb, wb] : b.atoms()) {
      Point y(ya.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = ya[i] + yb[i];
      out.add_atom(y, wa * wb);
    }
  return out;
}

/// k-fold convolution power; k = 0 is the point mass at the origin.
inline AtomicMeasure power_convolve(const AtomicMeasure& m, int k) {
  if (k < 0) throw Error("invalid_argument", "negative convolution power");
  AtomicMeasure out = dirac(Point(m.n(), Rational(0)));
  for (int i = 0; i < k; ++i) out = convolve(out, m);
  return out;
}

/// The averaging action (integral of p(. + y) against the measure):
/// sum_i w_i p(x + y_i).
inline Polynomial apply_measure(const AtomicMeasure& m, const Polynomial& p) {
  if (m.n() != p.n())
    throw Error("dimension_mismatch", "measure and polynomial dimension differ");
  Polynomial out(p.n(), p.d());
  for (const auto& [y, w] : m.atoms()) out = add(out, scale(w, shift(p, y)));
  return out;
}

/// Moments of the centered Gaussian with covariance sigma, by the
/// integration-by-parts recursion s_alpha = sum_j sigma_{ij} (alpha - e_i)_j
/// s_{alpha - e_i - e_j} with i the first coordinate appearing in alpha.
/// sigma enters formally: symmetry is required, positivity is not, so
/// non-PSD inputs yield sequences that exact PSD checks then refute.
inline MomentSequence gaussian_moments(const RationalMatrix& sigma, int d) {
  const int n = static_cast<int>(sigma.rows());
  if (sigma.cols() != sigma.rows() || n < 1)
    throw Error("dimension_mismatch", "covariance must be square");
  if (!is_symmetric(sigma))
    throw Error("invalid_argument", "covariance must be symmetric");
  MomentSequence s(n, d);
  s.set(MultiIndex(n, 0), 1);
  for (const MultiIndex& alpha : indices_up_to(n, d)) {
    if (is_zero(alpha)) continue;
    int i = 0;
    while (alpha[i] == 0) ++i;
    const MultiIndex beta = index_diff(alpha, unit_index(n, i));
    Rational v = 0;
    for (int j = 0; j < n; ++j) {
      if (beta[j] == 0 || sigma.at(i, j) == 0) continue;
      v += sigma.at(i, j) * Rational(beta[j]) *
           s.coeff(index_diff(beta, unit_index(n, j)));
    }
    s.set(alpha, v);
  }
  return s;
}

/// Moments of c * X with X Poisson(lambda): s_j = c^j sum_i S(j,i) lambda^i
/// over Stirling numbers of the second kind (Touchard polynomials).
inline MomentSequence poisson_moments(const Rational& lambda, const Rational& c,
                                      int d) {
  std::vector<std::vector<Integer>> stirling(d + 1);
  for (int j = 0; j <= d; ++j) {
    stirling[j].assign(j + 1, 0);
    stirling[j][0] = j == 0 ? 1 : 0;
    for (int i = 1; i <= j; ++i)
      stirling[j][i] = (i < j ? Integer(i) * stirling[j - 1][i] : Integer(0)) +
                       stirling[j - 1][i - 1];
  }
  MomentSequence s(1, d);
  for (int j = 0; j <= d; ++j) {
    Rational moment = 0;
    Rational lpow = 1;
    for (int i = 0; i <= j; ++i) {
      if (i > 0) lpow *= lambda;
      moment += Rational(stirling[j][i]) * lpow;
    }
    s.set(MultiIndex{j}, pow(c, j) * moment);
  }
  return s;
}

}  // namespace posgen::measures
