#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/liegroup.hpp"
#include "posgen/rational.hpp"
#include "posgen/series.hpp"
#include "posgen/univariate.hpp"

namespace posgen::evolve {

/// The evolved polynomial p_t = exp(t a) p0, the closed-form solution of
/// d/dt p = a p with p_0 = p0.  The generator is restricted to the degree
/// of p0 first; higher-order terms annihilate p0 anyway.
inline Polynomial evolve(const TruncatedSeries& a, const Polynomial& p0,
                         const Rational& t) {
  if (!liegroup::is_algebra_element(a))
    throw Error("not_algebra_element",
                "evolution requires a generator with zero constant term");
  if (a.n() != p0.n())
    throw Error("dimension_mismatch", "generator and state dimension differ");
  const int top = std::max(p0.top_degree(), 0);
  const TruncatedSeries cut = top < a.d() ? truncated(a, top) : a;
  return liegroup::apply(liegroup::exp(scale(t, cut)), p0);
}

/// Snapshots along nondecreasing times t >= 0, one polynomial per time.
inline std::vector<Polynomial> trajectory(const TruncatedSeries& a,
                                          const Polynomial& p0,
                                          const std::vector<Rational>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] < 0)
      throw Error("invalid_argument", "trajectory times must be >= 0");
    if (i > 0 && ts[i] < ts[i - 1])
      throw Error("invalid_argument", "trajectory times must be nondecreasing");
  }
  std::vector<Polynomial> out;
  out.reserve(ts.size());
  for (const Rational& t : ts) out.push_back(evolve(a, p0, t));
  return out;
}

/// Exact verdict on p >= 0 over the whole real line, with the evidence:
/// either the structural reason (zero / odd degree / negative leading
/// coefficient / root-free odd part) or a rational interval certifying a
/// real root of odd multiplicity.  The interval brackets a sign change of
/// `odd_part` (lo < hi with opposite nonzero signs), or is a single exact
/// rational root when lo == hi.
struct NonnegCertificate {
  bool nonneg = false;
  std::string reason;
  UniPoly odd_part;
  std::optional<std::pair<Rational, Rational>> root_interval;
};

inline NonnegCertificate nonneg_univariate(const Polynomial& p) {
  if (p.n() != 1)
    throw Error("dimension_mismatch",
                "exact nonnegativity decision is univariate only");
  UniPoly u(static_cast<std::size_t>(p.d()) + 1, Rational(0));
  for (const auto& [alpha, c] : p.terms()) u[alpha[0]] = c;
  u = trimmed(std::move(u));

  NonnegCertificate cert;
  if (u.empty()) {
    cert.nonneg = true;
    cert.reason = "zero polynomial";
    return cert;
  }
  if (deg(u) % 2 == 1) {
    cert.reason = "odd degree";
    return cert;
  }
  if (u.back() < 0) {
    cert.reason = "negative leading coefficient";
    return cert;
  }
  cert.odd_part = odd_multiplicity_part(u);
  if (count_real_roots(cert.odd_part) == 0) {
    cert.nonneg = true;
    cert.reason = "no real root of odd multiplicity";
    return cert;
  }
  cert.reason = "real root of odd multiplicity";
  cert.root_interval = isolate_real_root(cert.odd_part);
  return cert;
}

/// Rational box, one (lo, hi) pair per coordinate.
using Box = std::vector<std::pair<Rational, Rational>>;

/// Result of grid sampling: `clean` means no negative value was found —
/// a necessary check only, never a nonnegativity proof.
struct GridScan {
  bool clean = true;
  Point witness;
  Rational value = 0;
};

inline GridScan nonneg_grid(const Polynomial& p, const Box& box, int per_axis) {
  if (static_cast<int>(box.size()) != p.n())
    throw Error("dimension_mismatch", "box dimension differs from polynomial");
  if (per_axis < 2)
    throw Error("invalid_argument", "grid needs at least 2 points per axis");
  for (const auto& [lo, hi] : box)
    if (lo > hi) throw Error("invalid_argument", "empty box");

  const int n = p.n();
  std::vector<int> idx(n, 0);
  GridScan scan;
  while (true) {
    Point x(n);
    for (int i = 0; i < n; ++i)
      x[i] = box[i].first + (box[i].second - box[i].first) * Rational(idx[i]) /
                                Rational(per_axis - 1);
    const Rational v = eval(p, x);
    if (v < 0) {
      scan.clean = false;
      scan.witness = std::move(x);
      scan.value = v;
      return scan;
    }
    int pos = 0;
    while (pos < n && ++idx[pos] == per_axis) idx[pos++] = 0;
    if (pos == n) break;
  }
  return scan;
}

}  // namespace posgen::evolve
