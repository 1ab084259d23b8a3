#pragma once

// Dense univariate polynomial arithmetic over a coefficient field, generic in
// a small context object so the same code serves Q and F_p. Polynomials are
// ascending coefficient vectors with no trailing zeros; the empty vector is 0.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ogm/common.hpp"

namespace ogm::detail {

struct QCtx {
  using Elem = mpq_class;
  Elem zero() const { return mpq_class(0); }
  Elem one() const { return mpq_class(1); }
  Elem from_mpz(const mpz_class& z) const { return mpq_class(z); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return mpq_class(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return mpq_class(a - b); }
  Elem mul(const Elem& a, const Elem& b) const { return mpq_class(a * b); }
  Elem neg(const Elem& a) const { return mpq_class(-a); }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw arithmetic_error("division by zero");
    return mpq_class(1 / a);
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

// Prime field on canonical representatives 0..p-1. p is small (<= 13) so
// plain long arithmetic never overflows.
struct FpCtx {
  long p = 0;
  using Elem = long;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_mpz(const mpz_class& z) const {
    mpz_class r = z % p;
    long v = r.get_si();
    return v < 0 ? v + p : v;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return ((a - b) % p + p) % p; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw arithmetic_error("division by zero");
    // extended Euclid on (a, p)
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      long q = r / nr;
      long tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

template <class K>
struct Poly {
  std::vector<typename K::Elem> c;
};

template <class K>
void poly_normalize(const K& k, Poly<K>& a) {
  while (!a.c.empty() && k.is_zero(a.c.back())) a.c.pop_back();
}

template <class K>
bool poly_is_zero(const Poly<K>& a) { return a.c.empty(); }

template <class K>
long poly_deg(const Poly<K>& a) { return static_cast<long>(a.c.size()) - 1; }

// index of the lowest nonzero coefficient; polynomial must be nonzero
template <class K>
long poly_ord(const K& k, const Poly<K>& a) {
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!k.is_zero(a.c[i])) return static_cast<long>(i);
  throw precondition_error("poly_ord of zero polynomial");
}

template <class K>
Poly<K> poly_const(const K& k, const typename K::Elem& e) {
  Poly<K> r;
  if (!k.is_zero(e)) r.c.push_back(e);
  return r;
}

template <class K>
Poly<K> poly_one(const K& k) { return poly_const(k, k.one()); }

template <class K>
Poly<K> poly_add(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  poly_normalize(k, r);
  return r;
}

template <class K>
Poly<K> poly_neg(const K& k, const Poly<K>& a) {
  Poly<K> r = a;
  for (auto& e : r.c) e = k.neg(e);
  return r;
}

template <class K>
Poly<K> poly_sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  return poly_add(k, a, poly_neg(k, b));
}

template <class K>
Poly<K> poly_mul(const K& k, const Poly<K>& a, const Poly<K>& b) {
  if (poly_is_zero(a) || poly_is_zero(b)) return {};
  Poly<K> r;
  r.c.resize(a.c.size() + b.c.size() - 1, k.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (k.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  poly_normalize(k, r);
  return r;
}

template <class K>
Poly<K> poly_scale(const K& k, const Poly<K>& a, const typename K::Elem& s) {
  if (k.is_zero(s)) return {};
  Poly<K> r = a;
  for (auto& e : r.c) e = k.mul(e, s);
  poly_normalize(k, r);
  return r;
}

// multiply by x^n
template <class K>
Poly<K> poly_shift(const K& k, const Poly<K>& a, long n) {
  if (poly_is_zero(a)) return {};
  Poly<K> r;
  r.c.assign(static_cast<std::size_t>(n), k.zero());
  r.c.insert(r.c.end(), a.c.begin(), a.c.end());
  return r;
}

// drop the lowest n coefficients (they must vanish)
template <class K>
Poly<K> poly_unshift(const K& k, const Poly<K>& a, long n) {
  Poly<K> r;
  for (long i = 0; i < n && i < static_cast<long>(a.c.size()); ++i)
    if (!k.is_zero(a.c[static_cast<std::size_t>(i)]))
      throw precondition_error("poly_unshift: low coefficient nonzero");
  if (static_cast<long>(a.c.size()) > n)
    r.c.assign(a.c.begin() + n, a.c.end());
  return r;
}

template <class K>
bool poly_eq(const K& k, const Poly<K>& a, const Poly<K>& b) {
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (!k.eq(a.c[i], b.c[i])) return false;
  return true;
}

// Euclidean division; remainders are kept monic-scaled only inside gcd.
template <class K>
void poly_divmod(const K& k, const Poly<K>& a, const Poly<K>& b,
                 Poly<K>& q, Poly<K>& rem) {
  if (poly_is_zero(b)) throw arithmetic_error("polynomial division by zero");
  q = {};
  rem = a;
  const auto lb = k.inv(b.c.back());
  long db = poly_deg(b);
  while (!poly_is_zero(rem) && poly_deg(rem) >= db) {
    long sh = poly_deg(rem) - db;
    auto coef = k.mul(rem.c.back(), lb);
    Poly<K> t = poly_shift(k, poly_scale(k, b, coef), sh);
    rem = poly_sub(k, rem, t);
    Poly<K> qt = poly_shift(k, poly_const(k, coef), sh);
    q = poly_add(k, q, qt);
  }
}

template <class K>
Poly<K> poly_make_monic(const K& k, const Poly<K>& a) {
  if (poly_is_zero(a)) return a;
  return poly_scale(k, a, k.inv(a.c.back()));
}

template <class K>
Poly<K> poly_gcd_monic(const K& k, Poly<K> a, Poly<K> b) {
  poly_normalize(k, a);
  poly_normalize(k, b);
  while (!poly_is_zero(b)) {
    Poly<K> q, r;
    poly_divmod(k, a, b, q, r);
    a = std::move(b);
    b = poly_make_monic(k, r);
  }
  return poly_make_monic(k, a);
}

// Power series inverse of a (constant term must be a unit) to given precision:
// returns s with a*s = 1 mod x^prec.
template <class K>
Poly<K> poly_series_inv(const K& k, const Poly<K>& a, long prec) {
  if (poly_is_zero(a) || k.is_zero(a.c[0]))
    throw arithmetic_error("series inverse needs a unit constant term");
  auto c0 = k.inv(a.c[0]);
  Poly<K> s;
  s.c.resize(static_cast<std::size_t>(prec), k.zero());
  for (long n = 0; n < prec; ++n) {
    if (n == 0) {
      s.c[0] = c0;
      continue;
    }
    auto acc = k.zero();
    for (long j = 1; j <= n && j <= poly_deg(a); ++j)
      acc = k.add(acc, k.mul(a.c[static_cast<std::size_t>(j)],
                             s.c[static_cast<std::size_t>(n - j)]));
    s.c[static_cast<std::size_t>(n)] = k.neg(k.mul(c0, acc));
  }
  poly_normalize(k, s);
  return s;
}

template <class K>
typename K::Elem poly_eval(const K& k, const Poly<K>& a,
                           const typename K::Elem& x) {
  auto acc = k.zero();
  for (auto it = a.c.rbegin(); it != a.c.rend(); ++it)
    acc = k.add(k.mul(acc, x), *it);
  return acc;
}

}  // namespace ogm::detail
