#pragma once

#include <utility>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/liegroup.hpp"
#include "posgen/matrix.hpp"
#include "posgen/measures.hpp"
#include "posgen/moments.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"

namespace posgen::levy {

/// Drift b, Gaussian covariance sigma (symmetric PSD, checked exactly at
/// construction), and a finite nonnegative atomic jump measure nu with no
/// mass at the origin.
class LevyTriplet {
 public:
  LevyTriplet(Point b, RationalMatrix sigma, measures::AtomicMeasure nu)
      : b_(std::move(b)), sigma_(std::move(sigma)), nu_(std::move(nu)) {
    const int n = static_cast<int>(b_.size());
    if (n < 1) throw Error("invalid_triplet", "drift vector is empty");
    if (static_cast<int>(sigma_.rows()) != n ||
        static_cast<int>(sigma_.cols()) != n)
      throw Error("invalid_triplet", "covariance shape does not match drift");
    if (nu_.n() != n)
      throw Error("invalid_triplet", "jump measure dimension does not match");
    if (!is_symmetric(sigma_))
      throw Error("invalid_triplet", "covariance must be symmetric");
    if (moments::psd_check_matrix(sigma_, 0).violated)
      throw Error("invalid_triplet", "covariance must be positive semidefinite");
    if (!nu_.nonnegative())
      throw Error("invalid_triplet", "jump measure must have nonnegative weights");
    for (const auto& [y, w] : nu_.atoms()) {
      bool origin = true;
      for (const Rational& c : y) origin = origin && c == 0;
      if (origin)
        throw Error("invalid_triplet", "jump measure must not charge the origin");
    }
  }

  int n() const { return static_cast<int>(b_.size()); }
  const Point& b() const { return b_; }
  const RationalMatrix& sigma() const { return sigma_; }
  const measures::AtomicMeasure& nu() const { return nu_; }

 private:
  Point b_;
  RationalMatrix sigma_;
  measures::AtomicMeasure nu_;
};

/// The generator A = sum_{1 <= |alpha| <= d} (a_alpha / alpha!) d^alpha with
///   a_{e_i}       = b_i + sum of w y_i over atoms with |y|_2 >= 1,
///   a_{e_i + e_j} = sigma_{ij} + integral of x^{e_i+e_j} d nu,
///   a_alpha       = integral of x^alpha d nu          for |alpha| >= 3.
/// The |y|_2 >= 1 indicator compares sum y_l^2 against 1 exactly.
inline TruncatedSeries generator_from_triplet(const LevyTriplet& t, int d) {
  if (d < 1) throw Error("invalid_argument", "generator degree must be >= 1");
  const int n = t.n();
  const MomentSequence jump = measures::measure_moments(t.nu(), d);

  Point big_jump_mean(n, Rational(0));
  for (const auto& [y, w] : t.nu().atoms()) {
    Rational norm2 = 0;
    for (const Rational& c : y) norm2 += c * c;
    if (norm2 >= 1)
      for (int i = 0; i < n; ++i) big_jump_mean[i] += w * y[i];
  }

  TruncatedSeries a(n, d);
  for (const MultiIndex& alpha : indices_up_to(n, d)) {
    const int deg = degree(alpha);
    if (deg == 0) continue;
    Rational value;
    if (deg == 1) {
      int i = 0;
      while (alpha[i] == 0) ++i;
      value = t.b()[i] + big_jump_mean[i];
    } else if (deg == 2) {
      int i = 0, j = n - 1;
      while (alpha[i] == 0) ++i;
      while (alpha[j] == 0) --j;
      value = t.sigma().at(i, j) + jump.coeff(alpha);
    } else {
      value = jump.coeff(alpha);
    }
    a.set(alpha, value / Rational(factorial(alpha)));
  }
  return a;
}

/// Semigroup screening: check exp(t a) at each time against the level-k
/// moment-matrix condition.  Any violation disproves that a generates
/// positivity preservers; all-consistent is evidence, not proof.
inline std::vector<moments::PsdVerdict> check_generator_grid(
    const TruncatedSeries& a, const std::vector<Rational>& ts, int k) {
  if (!liegroup::is_algebra_element(a))
    throw Error("not_algebra_element", "generator must have zero constant term");
  if (2 * k > a.d())
    throw Error("insufficient_truncation",
                "generator truncation below 2k required by the level-k check");
  std::vector<moments::PsdVerdict> verdicts;
  verdicts.reserve(ts.size());
  for (const Rational& t : ts) {
    if (t < 0) throw Error("invalid_argument", "semigroup times must be >= 0");
    verdicts.push_back(moments::check_preserver(liegroup::exp(scale(t, a)), k));
  }
  return verdicts;
}

/// Dilation screening (univariate): check exp of the scaled family
/// a_alpha -> lambda^(k-|alpha|) a_alpha across the given lambdas.  A single
/// violation refutes membership; a clean grid proves nothing.
inline std::vector<moments::PsdVerdict> scaled_family_probe(
    const TruncatedSeries& a, int k, const std::vector<Rational>& lambdas,
    int level) {
  if (a.n() != 1)
    throw Error("dimension_mismatch", "scaling probe is univariate only");
  if (!liegroup::is_algebra_element(a))
    throw Error("not_algebra_element", "probe input must have zero constant term");
  if (2 * level > a.d())
    throw Error("insufficient_truncation",
                "operator truncation below 2k required by the level-k check");
  std::vector<moments::PsdVerdict> verdicts;
  verdicts.reserve(lambdas.size());
  for (const Rational& lambda : lambdas)
    verdicts.push_back(
        moments::check_preserver(liegroup::exp(liegroup::dilate(a, lambda, k)), level));
  return verdicts;
}

}  // namespace posgen::levy
