#pragma once

#include <algorithm>
#include <map>
#include <utility>

#include "posgen/error.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"

namespace posgen {

struct series_tag {};
struct poly_tag {};
struct moment_tag {};

/// Sparse map MultiIndex -> Rational over {alpha : |alpha| <= d}, with
/// missing keys meaning zero.  The same container backs three value kinds
/// that must not mix silently:
///   TruncatedSeries  coefficients q_alpha of an operator sum q_alpha d^alpha
///   Polynomial       coefficients c_alpha of sum c_alpha x^alpha
///   MomentSequence   values s_alpha
template <typename Tag>
class BasicSeries {
 public:
  using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

  BasicSeries(int n, int d) : n_(n), d_(d) {
    if (n < 1) throw Error("invalid_argument", "variable count must be >= 1");
    if (d < 0) throw Error("invalid_argument", "truncation degree must be >= 0");
  }

  int n() const { return n_; }
  int d() const { return d_; }

  Rational coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  /// Stores a coefficient; zero values erase the key so the canonical form
  /// never holds explicit zeros.
  BasicSeries& set(const MultiIndex& alpha, const Rational& value) {
    if (static_cast<int>(alpha.size()) != n_)
      throw Error("dimension_mismatch", "multi-index length != variable count");
    for (int a : alpha)
      if (a < 0) throw Error("invalid_argument", "negative exponent");
    if (degree(alpha) > d_)
      throw Error("invalid_argument", "term degree exceeds truncation degree");
    if (value == 0)
      coeffs_.erase(alpha);
    else
      coeffs_[alpha] = value;
    return *this;
  }

  BasicSeries& add_to(const MultiIndex& alpha, const Rational& value) {
    return set(alpha, coeff(alpha) + value);
  }

  const TermMap& terms() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  /// Largest total degree carrying a nonzero coefficient; -1 when zero.
  int top_degree() const {
    int top = -1;
    for (const auto& [alpha, c] : coeffs_) top = std::max(top, degree(alpha));
    return top;
  }

  bool operator==(const BasicSeries& other) const {
    return n_ == other.n_ && d_ == other.d_ && coeffs_ == other.coeffs_;
  }

 private:
  int n_;
  int d_;
  TermMap coeffs_;
};

using TruncatedSeries = BasicSeries<series_tag>;
using Polynomial = BasicSeries<poly_tag>;
using MomentSequence = BasicSeries<moment_tag>;

template <typename Tag>
void require_same_vars(const BasicSeries<Tag>& a, const BasicSeries<Tag>& b) {
  if (a.n() != b.n())
    throw Error("dimension_mismatch", "operands have different variable counts");
}

/// Restriction to total degree <= d (drops higher terms, caps the bound).
template <typename Tag>
BasicSeries<Tag> truncated(const BasicSeries<Tag>& a, int d) {
  BasicSeries<Tag> out(a.n(), std::min(a.d(), std::max(d, 0)));
  for (const auto& [alpha, c] : a.terms())
    if (degree(alpha) <= out.d()) out.set(alpha, c);
  return out;
}

/// Coefficientwise sum at the intersection truncation min(d_a, d_b).
template <typename Tag>
BasicSeries<Tag> add(const BasicSeries<Tag>& a, const BasicSeries<Tag>& b) {
  require_same_vars(a, b);
  BasicSeries<Tag> out = truncated(a, std::min(a.d(), b.d()));
  for (const auto& [alpha, c] : b.terms())
    if (degree(alpha) <= out.d()) out.add_to(alpha, c);
  return out;
}

template <typename Tag>
BasicSeries<Tag> scale(const Rational& r, const BasicSeries<Tag>& a) {
  BasicSeries<Tag> out(a.n(), a.d());
  if (r == 0) return out;
  for (const auto& [alpha, c] : a.terms()) out.set(alpha, r * c);
  return out;
}

template <typename Tag>
BasicSeries<Tag> operator+(const BasicSeries<Tag>& a, const BasicSeries<Tag>& b) {
  return add(a, b);
}

template <typename Tag>
BasicSeries<Tag> operator-(const BasicSeries<Tag>& a) {
  return scale(Rational(-1), a);
}

template <typename Tag>
BasicSeries<Tag> operator-(const BasicSeries<Tag>& a, const BasicSeries<Tag>& b) {
  return add(a, -b);
}

template <typename Tag>
BasicSeries<Tag> operator*(const Rational& r, const BasicSeries<Tag>& a) {
  return scale(r, a);
}

template <typename Tag>
BasicSeries<Tag> operator*(const BasicSeries<Tag>& a, const Rational& r) {
  return scale(r, a);
}

/// Exact value of p at a rational point.
inline Rational eval(const Polynomial& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.n())
    throw Error("dimension_mismatch", "evaluation point has wrong dimension");
  Rational total = 0;
  for (const auto& [alpha, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int e = 0; e < alpha[i]; ++e) term *= x[i];
    total += term;
  }
  return total;
}

/// q with q(x) = p(x + y), by binomial expansion of each monomial.
inline Polynomial shift(const Polynomial& p, const Point& y) {
  if (static_cast<int>(y.size()) != p.n())
    throw Error("dimension_mismatch", "shift vector has wrong dimension");
  Polynomial out(p.n(), p.d());
  for (const auto& [alpha, c] : p.terms()) {
    // (x+y)^alpha = sum_{beta <= alpha} C(alpha,beta) x^beta y^(alpha-beta)
    for (const MultiIndex& beta : indices_up_to(p.n(), degree(alpha))) {
      if (!divides(beta, alpha)) continue;
      Rational ypow = 1;
      MultiIndex rest = index_diff(alpha, beta);
      for (std::size_t i = 0; i < y.size(); ++i)
        for (int e = 0; e < rest[i]; ++e) ypow *= y[i];
      out.add_to(beta, c * Rational(multi_binomial(alpha, beta)) * ypow);
    }
  }
  return out;
}

/// The partial derivative d^alpha p.
inline Polynomial derivative(const Polynomial& p, const MultiIndex& alpha) {
  if (static_cast<int>(alpha.size()) != p.n())
    throw Error("dimension_mismatch", "derivative index has wrong dimension");
  Polynomial out(p.n(), p.d());
  for (const auto& [beta, c] : p.terms()) {
    if (!divides(alpha, beta)) continue;
    // d^alpha x^beta = prod beta_i!/(beta_i - alpha_i)! * x^(beta - alpha)
    Integer falling = 1;
    for (std::size_t i = 0; i < beta.size(); ++i)
      for (int e = beta[i]; e > beta[i] - alpha[i]; --e) falling *= e;
    out.add_to(index_diff(beta, alpha), c * Rational(falling));
  }
  return out;
}

}  // namespace posgen
