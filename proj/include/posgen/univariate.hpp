#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "posgen/error.hpp"
#include "posgen/rational.hpp"

namespace posgen::evolve {

/// Dense univariate polynomial, ascending coefficients, no trailing zeros;
/// the empty vector is the zero polynomial.
using UniPoly = std::vector<Rational>;

inline UniPoly trimmed(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Degree with deg(0) = -1.
inline int deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline int sign_of(const Rational& r) { return r == 0 ? 0 : (r < 0 ? -1 : 1); }

inline Rational eval_at(const UniPoly& p, const Rational& x) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

inline UniPoly diff(const UniPoly& p) {
  UniPoly q;
  for (std::size_t i = 1; i < p.size(); ++i) q.push_back(Rational(i) * p[i]);
  return q;
}

inline UniPoly sub(const UniPoly& a, const UniPoly& b) {
  UniPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return trimmed(std::move(c));
}

inline UniPoly mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trimmed(std::move(c));
}

/// Exact division with remainder: a = q*b + r, deg r < deg b.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.empty()) throw Error("invalid_argument", "division by zero polynomial");
  UniPoly r = a;
  UniPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  while (deg(r) >= deg(b)) {
    const std::size_t shift = r.size() - b.size();
    const Rational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r = trimmed(std::move(r));
  }
  return {trimmed(std::move(q)), std::move(r)};
}

inline UniPoly monic(UniPoly p) {
  if (p.empty()) return p;
  const Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return p;
}

inline UniPoly gcd_monic(UniPoly a, UniPoly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

/// Yun's squarefree decomposition: p = lc * prod factors[i]^(i+1) with the
/// returned factors monic, squarefree, and pairwise coprime (entry i holds
/// the multiplicity-(i+1) part; entries may be the constant 1).
inline std::vector<UniPoly> squarefree_factors(const UniPoly& p) {
  if (deg(p) < 1) return {};
  const UniPoly f = monic(trimmed(p));
  const UniPoly g = gcd_monic(f, diff(f));
  std::vector<UniPoly> factors;
  UniPoly b = divmod(f, g).first;
  UniPoly d = sub(divmod(diff(f), g).first, diff(b));
  while (deg(b) > 0) {
    UniPoly a = gcd_monic(b, d);
    b = divmod(b, a).first;
    const UniPoly c = divmod(d, a).first;
    d = sub(c, diff(b));
    factors.push_back(std::move(a));
  }
  return factors;
}

/// Product of the odd-multiplicity squarefree factors; p >= 0 fails on a
/// real root exactly when this part has one.  Monic, squarefree.
inline UniPoly odd_multiplicity_part(const UniPoly& p) {
  UniPoly out{Rational(1)};
  const std::vector<UniPoly> factors = squarefree_factors(p);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (i % 2 == 0) out = mul(out, factors[i]);  // entry i: multiplicity i+1
  return out;
}

/// Sturm chain p, p', then negated remainders until zero.
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  chain.push_back(trimmed(p));
  if (deg(chain[0]) < 1) return chain;
  chain.push_back(diff(chain[0]));
  while (deg(chain.back()) >= 0) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
  std::vector<int> signs;
  for (const UniPoly& q : chain) signs.push_back(sign_of(eval_at(q, x)));
  return variations(signs);
}

/// Sign variations at -infinity / +infinity from leading terms.
inline int variations_at_infinity(const std::vector<UniPoly>& chain,
                                  bool negative) {
  std::vector<int> signs;
  for (const UniPoly& q : chain) {
    if (q.empty()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(q.back());
    if (negative && deg(q) % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

/// Number of roots of the chain's polynomial in the half-open interval
/// (lo, hi]; the polynomial must be squarefree.
inline int roots_in(const std::vector<UniPoly>& chain, const Rational& lo,
                    const Rational& hi) {
  return variations_at(chain, lo) - variations_at(chain, hi);
}

/// Count of distinct real roots (any multiplicities in the input).
inline int count_real_roots(const UniPoly& p) {
  const UniPoly q = trimmed(p);
  if (deg(q) < 1) return 0;
  const UniPoly sf = divmod(q, gcd_monic(q, diff(q))).first;
  const std::vector<UniPoly> chain = sturm_chain(sf);
  return variations_at_infinity(chain, true) -
         variations_at_infinity(chain, false);
}

/// Every real root x of p satisfies |x| < 1 + max |c_i| / |c_lead|.
inline Rational cauchy_root_bound(const UniPoly& p) {
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, abs(p[i]));
  return 1 + m / abs(p.back());
}

/// For a squarefree p with at least one real root: a rational interval
/// certifying one.  Either lo < hi with p(lo)*p(hi) < 0, or lo == hi with
/// p(lo) = 0 (an exact rational root).
inline std::pair<Rational, Rational> isolate_real_root(const UniPoly& p) {
  const std::vector<UniPoly> chain = sturm_chain(p);
  const Rational bound = cauchy_root_bound(p);
  Rational lo = -bound, hi = bound;
  int count = roots_in(chain, lo, hi);
  if (count < 1) throw Error("internal_error", "no real root to isolate");
  while (true) {
    if (count == 1 && sign_of(eval_at(p, lo)) * sign_of(eval_at(p, hi)) < 0)
      return {lo, hi};
    const Rational mid = (lo + hi) / 2;
    if (eval_at(p, mid) == 0) return {mid, mid};
    const int left = roots_in(chain, lo, mid);
    if (left >= 1) {
      hi = mid;
      count = left;
    } else {
      lo = mid;
      count -= left;
    }
  }
}

}  // namespace posgen::evolve
