#pragma once

#include <map>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/matrix.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"

namespace posgen::liegroup {

/// The unit operator (constant coefficient 1, nothing else).
inline TruncatedSeries one(int n, int d) {
  TruncatedSeries u(n, d);
  u.set(MultiIndex(n, 0), 1);
  return u;
}

inline bool is_group_element(const TruncatedSeries& a) {
  return a.coeff(MultiIndex(a.n(), 0)) == 1;
}

inline bool is_algebra_element(const TruncatedSeries& a) {
  return a.coeff(MultiIndex(a.n(), 0)) == 0;
}

/// Cauchy product c_gamma = sum_{alpha+beta=gamma} a_alpha b_beta, kept to
/// total degree <= min(d_a, d_b).
inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_vars(a, b);
  const int d = std::min(a.d(), b.d());
  TruncatedSeries out(a.n(), d);
  for (const auto& [alpha, ca] : a.terms()) {
    const int da = degree(alpha);
    if (da > d) continue;
    for (const auto& [beta, cb] : b.terms()) {
      if (da + degree(beta) > d) break;  // terms are graded, rest only larger
      out.add_to(index_sum(alpha, beta), ca * cb);
    }
  }
  return out;
}

/// Truncated k-th power by repeated truncated multiplication.
inline TruncatedSeries power(const TruncatedSeries& a, int k) {
  if (k < 0) throw Error("invalid_argument", "negative operator power");
  TruncatedSeries out = one(a.n(), a.d());
  for (int i = 0; i < k; ++i) out = mul(out, a);
  return out;
}

/// Group inverse: the unique b with mul(a, b) = one, found by induction on
/// total degree via b_gamma = -sum_{0 != alpha <= gamma} a_alpha b_{gamma-alpha}.
inline TruncatedSeries inverse(const TruncatedSeries& a) {
  if (!is_group_element(a))
    throw Error("not_group_element", "inverse requires constant coefficient 1");
  TruncatedSeries b(a.n(), a.d());
  b.set(MultiIndex(a.n(), 0), 1);
  for (const MultiIndex& gamma : indices_up_to(a.n(), a.d())) {
    if (is_zero(gamma)) continue;
    Rational acc = 0;
    for (const auto& [alpha, ca] : a.terms()) {
      if (is_zero(alpha) || !divides(alpha, gamma)) continue;
      acc += ca * b.coeff(index_diff(gamma, alpha));
    }
    if (acc != 0) b.set(gamma, -acc);
  }
  return b;
}

/// exp(a) = sum_{k=0}^{d} a^k / k!; finite because a has zero constant term,
/// so a^k has no component of degree < k.
inline TruncatedSeries exp(const TruncatedSeries& a) {
  if (!is_algebra_element(a))
    throw Error("not_algebra_element", "exp requires constant coefficient 0");
  TruncatedSeries result = one(a.n(), a.d());
  TruncatedSeries pw = result;
  Rational kfact = 1;
  for (int k = 1; k <= a.d(); ++k) {
    pw = mul(pw, a);
    if (pw.is_zero()) break;
    kfact *= k;
    result = add(result, scale(Rational(1) / kfact, pw));
  }
  return result;
}

/// log(a) = -sum_{k=1}^{d} (one - a)^k / k; exact inverse of exp.
inline TruncatedSeries log(const TruncatedSeries& a) {
  if (!is_group_element(a))
    throw Error("not_group_element", "log requires constant coefficient 1");
  const TruncatedSeries nil = one(a.n(), a.d()) - a;
  TruncatedSeries result(a.n(), a.d());
  TruncatedSeries pw = one(a.n(), a.d());
  for (int k = 1; k <= a.d(); ++k) {
    pw = mul(pw, nil);
    if (pw.is_zero()) break;
    result = result - scale(Rational(1) / Rational(k), pw);
  }
  return result;
}

/// Dilation family: a_alpha -> lambda^(k - |alpha|) * a_alpha, with k an
/// explicit normalization exponent at least the top degree of a.
inline TruncatedSeries dilate(const TruncatedSeries& a, const Rational& lambda,
                              int k) {
  if (lambda < 0)
    throw Error("invalid_argument", "dilation parameter must be >= 0");
  if (k < a.top_degree())
    throw Error("invalid_normalization",
                "normalization exponent below top degree of the operator");
  TruncatedSeries out(a.n(), a.d());
  for (const auto& [alpha, c] : a.terms())
    out.set(alpha, pow(lambda, k - degree(alpha)) * c);
  return out;
}

/// The action sum_alpha q_alpha d^alpha p; degree never grows.
inline Polynomial apply(const TruncatedSeries& a, const Polynomial& p) {
  if (a.n() != p.n())
    throw Error("dimension_mismatch", "operator and polynomial dimension differ");
  Polynomial out(p.n(), p.d());
  for (const auto& [alpha, q] : a.terms()) {
    if (degree(alpha) > p.d()) break;  // derivative of everything is zero
    out = add(out, scale(q, derivative(p, alpha)));
  }
  return out;
}

/// Matrix of p -> a*p on the monomials of total degree <= d in graded-lex
/// order; unipotent upper-triangular whenever a is a group element.
inline RationalMatrix matrix_rep(const TruncatedSeries& a, int d) {
  if (a.d() < d)
    throw Error("insufficient_truncation",
                "operator truncation below requested basis degree");
  const std::vector<MultiIndex> basis = indices_up_to(a.n(), d);
  std::map<MultiIndex, std::size_t, GradedLexLess> row_of;
  for (std::size_t i = 0; i < basis.size(); ++i) row_of[basis[i]] = i;
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Polynomial mono(a.n(), d);
    mono.set(basis[j], 1);
    const Polynomial image = apply(a, mono);  // keep alive while iterating
    for (const auto& [gamma, c] : image.terms())
      m.at(row_of.at(gamma), j) = c;
  }
  return m;
}

}  // namespace posgen::liegroup
