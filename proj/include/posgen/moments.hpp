#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/liegroup.hpp"
#include "posgen/matrix.hpp"
#include "posgen/multi_index.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"

namespace posgen::moments {

/// Symmetric matrix M[i][j] = s_{basis[i] + basis[j]} over the monomial
/// basis of total degree <= level, graded-lex order.
struct MomentMatrix {
  int level;
  std::vector<MultiIndex> basis;
  RationalMatrix entries;
};

/// Outcome of the exact positive-semidefiniteness test.  `violated` comes
/// with a rational witness vector against the basis and its (strictly
/// negative) quadratic-form value v^T M v; a consistent verdict is
/// necessary-only evidence, never a membership certificate.
struct PsdVerdict {
  bool violated = false;
  int level = 0;
  std::vector<Rational> witness;
  Rational value = 0;
};

/// The sequence with s_0 = 1 and nothing else (unit of convolution).
inline MomentSequence unit_sequence(int n, int d) {
  MomentSequence s(n, d);
  s.set(MultiIndex(n, 0), 1);
  return s;
}

/// Sequence -> operator: q_alpha = s_alpha / alpha!.
inline TruncatedSeries d_map(const MomentSequence& s) {
  TruncatedSeries t(s.n(), s.d());
  for (const auto& [alpha, v] : s.terms())
    t.set(alpha, v / Rational(factorial(alpha)));
  return t;
}

/// Operator -> sequence: s_alpha = alpha! * q_alpha; inverse of d_map.
inline MomentSequence d_inv(const TruncatedSeries& t) {
  MomentSequence s(t.n(), t.d());
  for (const auto& [alpha, q] : t.terms())
    s.set(alpha, q * Rational(factorial(alpha)));
  return s;
}

/// Binomial convolution (s*t)_gamma = sum_{alpha+beta=gamma}
/// C(gamma,alpha) s_alpha t_beta; the sequence-side image of operator
/// multiplication under d_map.
inline MomentSequence seq_convolve(const MomentSequence& s,
                                   const MomentSequence& t) {
  require_same_vars(s, t);
  const int d = std::min(s.d(), t.d());
  MomentSequence out(s.n(), d);
  for (const auto& [alpha, sv] : s.terms()) {
    const int da = degree(alpha);
    if (da > d) continue;
    for (const auto& [beta, tv] : t.terms()) {
      if (da + degree(beta) > d) break;
      const MultiIndex gamma = index_sum(alpha, beta);
      out.add_to(gamma, Rational(multi_binomial(gamma, alpha)) * sv * tv);
    }
  }
  return out;
}

inline MomentMatrix moment_matrix(const MomentSequence& s, int k) {
  if (k < 0) throw Error("invalid_argument", "matrix level must be >= 0");
  if (2 * k > s.d())
    throw Error("insufficient_truncation",
                "sequence degree below 2k; moment matrix needs degree >= 2k");
  std::vector<MultiIndex> basis = indices_up_to(s.n(), k);
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      m.at(i, j) = s.coeff(index_sum(basis[i], basis[j]));
  return MomentMatrix{k, std::move(basis), std::move(m)};
}

/// Exact PSD decision by LDL^T with max-diagonal pivoting over the
/// rationals.  Non-PSD inputs always yield a witness v with v^T M v < 0,
/// rebuilt against the original matrix:
///   * a negative diagonal in a Schur complement refutes directly;
///   * a zero diagonal with a nonzero off-diagonal gives an indefinite
///     2x2 block, refuted by (1, -sign) coordinates;
///   * eliminated coordinates are recovered by back-substitution through
///     the recorded pivot rows.
inline PsdVerdict psd_check_matrix(const RationalMatrix& M, int level) {
  if (!is_symmetric(M))
    throw Error("contract_violation", "moment matrix must be symmetric");
  const std::size_t sz = M.rows();

  RationalMatrix W = M;
  std::vector<char> active(sz, 1);
  struct Step {
    std::size_t p;
    std::vector<Rational> row;  // pivot row over then-active columns
    Rational piv;
  };
  std::vector<Step> steps;

  auto violated_with = [&](std::vector<Rational> v) {
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      Rational dot = 0;
      for (std::size_t j = 0; j < sz; ++j)
        if (j != it->p) dot += it->row[j] * v[j];
      v[it->p] = -dot / it->piv;
    }
    Rational value = 0;
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j) value += v[i] * M.at(i, j) * v[j];
    if (value >= 0)
      throw Error("internal_error", "witness reconstruction lost negativity");
    PsdVerdict out;
    out.violated = true;
    out.level = level;
    out.witness = std::move(v);
    out.value = value;
    return out;
  };

  while (true) {
    bool have = false;
    std::size_t p = 0;
    for (std::size_t i = 0; i < sz; ++i)
      if (active[i] && (!have || W.at(i, i) > W.at(p, p))) {
        p = i;
        have = true;
      }
    if (!have) break;

    if (W.at(p, p) > 0) {
      Step step{p, std::vector<Rational>(sz, Rational(0)), W.at(p, p)};
      for (std::size_t j = 0; j < sz; ++j)
        if (active[j]) step.row[j] = W.at(p, j);
      active[p] = 0;
      for (std::size_t i = 0; i < sz; ++i) {
        if (!active[i] || step.row[i] == 0) continue;
        const Rational f = step.row[i] / step.piv;
        for (std::size_t j = 0; j < sz; ++j)
          if (active[j]) W.at(i, j) -= f * step.row[j];
      }
      steps.push_back(std::move(step));
      continue;
    }

    // Max diagonal <= 0: either a refutation hides here or the block is 0.
    for (std::size_t i = 0; i < sz; ++i)
      if (active[i] && W.at(i, i) < 0) {
        std::vector<Rational> v(sz, Rational(0));
        v[i] = 1;
        return violated_with(std::move(v));
      }
    for (std::size_t i = 0; i < sz; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < sz; ++j) {
        if (!active[j] || W.at(i, j) == 0) continue;
        std::vector<Rational> v(sz, Rational(0));
        v[i] = 1;
        v[j] = W.at(i, j) > 0 ? -1 : 1;
        return violated_with(std::move(v));
      }
    }
    break;  // all-zero block: remaining pivots are zero
  }

  PsdVerdict out;
  out.level = level;
  return out;
}

inline PsdVerdict psd_check(const MomentMatrix& m) {
  return psd_check_matrix(m.entries, m.level);
}

/// Necessary condition for t to preserve nonnegativity: the sequence
/// (alpha! q_alpha) must have a PSD moment matrix at level k.  A violation
/// is a proof of failure; consistency is not a proof of membership.
inline PsdVerdict check_preserver(const TruncatedSeries& t, int k) {
  if (2 * k > t.d())
    throw Error("insufficient_truncation",
                "operator truncation below 2k; preserver check needs d >= 2k");
  return psd_check(moment_matrix(d_inv(t), k));
}

}  // namespace posgen::moments
