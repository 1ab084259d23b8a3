#include "ogm/scalars.hpp"

#include <cstdlib>

#include "ogm/detail/exprparse.hpp"

namespace ogm {

using detail::FpCtx;
using detail::Poly;
using detail::QCtx;
using detail::RatFuncRep;
using detail::RatPadic;
using detail::RFF;
using detail::RFQ;

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// number of factors p in z; z != 0
long val_mpz_at(const mpz_class& z, long p) {
  mpz_class rest;
  mpz_class mp(p);
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), mp.get_mpz_t()));
}

long val_mpq_at(const mpq_class& x, long p) {
  return val_mpz_at(x.get_num(), p) - val_mpz_at(x.get_den(), p);
}

template <class K>
RatFuncRep<K> rf_zero(K ctx) {
  return RatFuncRep<K>{0, {}, detail::poly_one(ctx), ctx};
}

// canonicalize e^v0 * num/den
template <class K>
RatFuncRep<K> rf_make(K ctx, long v0, Poly<K> num, Poly<K> den) {
  detail::poly_normalize(ctx, num);
  detail::poly_normalize(ctx, den);
  if (detail::poly_is_zero(den)) throw arithmetic_error("division by zero");
  if (detail::poly_is_zero(num)) return rf_zero(ctx);
  long a = detail::poly_ord(ctx, num);
  long b = detail::poly_ord(ctx, den);
  num = detail::poly_unshift(ctx, num, a);
  den = detail::poly_unshift(ctx, den, b);
  Poly<K> g = detail::poly_gcd_monic(ctx, num, den);
  if (detail::poly_deg(g) > 0) {
    Poly<K> q, r;
    detail::poly_divmod(ctx, num, g, q, r);
    num = q;
    detail::poly_divmod(ctx, den, g, q, r);
    den = q;
  }
  // normalize the denominator to constant term 1 (it is a unit of O)
  auto c0inv = ctx.inv(den.c[0]);
  den = detail::poly_scale(ctx, den, c0inv);
  num = detail::poly_scale(ctx, num, c0inv);
  return RatFuncRep<K>{v0 + a - b, num, den, ctx};
}

template <class K>
RatFuncRep<K> rf_add(const RatFuncRep<K>& x, const RatFuncRep<K>& y) {
  const K& k = x.ctx;
  if (detail::poly_is_zero(x.num)) return y;
  if (detail::poly_is_zero(y.num)) return x;
  long v = std::min(x.v, y.v);
  Poly<K> nx = detail::poly_shift(k, x.num, x.v - v);
  Poly<K> ny = detail::poly_shift(k, y.num, y.v - v);
  Poly<K> num = detail::poly_add(k, detail::poly_mul(k, nx, y.den),
                                 detail::poly_mul(k, ny, x.den));
  Poly<K> den = detail::poly_mul(k, x.den, y.den);
  return rf_make(k, v, std::move(num), std::move(den));
}

template <class K>
RatFuncRep<K> rf_mul(const RatFuncRep<K>& x, const RatFuncRep<K>& y) {
  const K& k = x.ctx;
  return rf_make(k, x.v + y.v, detail::poly_mul(k, x.num, y.num),
                 detail::poly_mul(k, x.den, y.den));
}

template <class K>
RatFuncRep<K> rf_neg(const RatFuncRep<K>& x) {
  RatFuncRep<K> r = x;
  r.num = detail::poly_neg(x.ctx, x.num);
  return r;
}

template <class K>
RatFuncRep<K> rf_inv(const RatFuncRep<K>& x) {
  if (detail::poly_is_zero(x.num)) throw arithmetic_error("division by zero");
  return rf_make(x.ctx, -x.v, x.den, x.num);
}

template <class K>
bool rf_eq(const RatFuncRep<K>& x, const RatFuncRep<K>& y) {
  if (detail::poly_is_zero(x.num) && detail::poly_is_zero(y.num)) return true;
  return x.v == y.v && detail::poly_eq(x.ctx, x.num, y.num) &&
         detail::poly_eq(x.ctx, x.den, y.den);
}

// truncated series expansion: all terms of x below e^m, as a Laurent polynomial
template <class K>
RatFuncRep<K> rf_residue(const RatFuncRep<K>& x, long m) {
  const K& k = x.ctx;
  if (detail::poly_is_zero(x.num) || x.v >= m) return rf_zero(k);
  long prec = m - x.v;
  Poly<K> inv = detail::poly_series_inv(k, x.den, prec);
  Poly<K> s = detail::poly_mul(k, x.num, inv);
  if (static_cast<long>(s.c.size()) > prec) s.c.resize(prec);
  detail::poly_normalize(k, s);
  return rf_make(k, x.v, std::move(s), detail::poly_one(k));
}

const char* kind_name(BackendKind k) {
  switch (k) {
    case BackendKind::RationalPadic: return "rational-padic";
    case BackendKind::RatFuncChar0: return "ratfunc-char0";
    case BackendKind::RatFuncFq: return "ratfunc-fq";
  }
  return "?";
}

std::string rf_coeff_str(const QCtx&, const mpq_class& c) { return c.get_str(); }
std::string rf_coeff_str(const FpCtx&, long c) { return std::to_string(c); }

// ascending-degree polynomial in e, compact signs: "1-2*e", "e^2+e^3"
template <class K>
std::string rf_poly_str(const K& k, const Poly<K>& pol, long shift) {
  std::string out;
  std::size_t terms = 0;
  for (std::size_t i = 0; i < pol.c.size(); ++i) {
    if (k.is_zero(pol.c[i])) continue;
    std::string cs = rf_coeff_str(k, pol.c[i]);
    long d = static_cast<long>(i) + shift;
    std::string term;
    if (d == 0) {
      term = cs;
    } else {
      std::string var = d == 1 ? "e" : ("e^" + std::to_string(d));
      if (cs == "1") term = var;
      else if (cs == "-1") term = "-" + var;
      else term = cs + "*" + var;
    }
    if (terms == 0) out = term;
    else if (!term.empty() && term[0] == '-') out += term;
    else out += "+" + term;
    ++terms;
  }
  return terms == 0 ? "0" : out;
}

template <class K>
std::size_t rf_term_count(const K& k, const Poly<K>& pol) {
  std::size_t n = 0;
  for (const auto& c : pol.c)
    if (!k.is_zero(c)) ++n;
  return n;
}

template <class K>
std::string rf_str(const RatFuncRep<K>& x) {
  const K& k = x.ctx;
  if (detail::poly_is_zero(x.num)) return "0";
  bool den_one = detail::poly_deg(x.den) == 0;  // den has constant term 1
  std::string prefix;
  if (x.v == 1) prefix = "e";
  else if (x.v != 0) prefix = "e^" + std::to_string(x.v);
  std::string ns = rf_poly_str(k, x.num, 0);
  bool num_one = ns == "1";
  std::string out;
  if (!prefix.empty()) {
    out = prefix;
    if (!num_one) {
      if (rf_term_count(k, x.num) > 1) out += "*(" + ns + ")";
      else out += "*" + ns;
    }
  } else {
    if (!den_one && rf_term_count(k, x.num) > 1) out = "(" + ns + ")";
    else out = ns;
  }
  if (!den_one) out += "/(" + rf_poly_str(k, x.den, 0) + ")";
  return out;
}

mpq_class mpq_pow_long(long base, long e) {
  mpz_class b(base);
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) return mpq_class(pw);
  mpq_class r(1, 1);
  r /= pw;
  return r;
}

}  // namespace

void BackendConfig::validate() const {
  if (k < 0) throw precondition_error("backend: k must be >= 0");
  switch (kind) {
    case BackendKind::RationalPadic:
      if (!is_prime(p)) throw precondition_error("rational-padic: p must be prime");
      break;
    case BackendKind::RatFuncChar0:
      break;
    case BackendKind::RatFuncFq:
      if (q < 2 || q > 16) throw precondition_error("ratfunc-fq: q must be a prime power <= 16");
      if (!is_prime(q))
        throw unsupported_error("ratfunc-fq: extension fields F_{p^r}, r > 1, are not supported; use a prime q");
      break;
  }
}

std::string BackendConfig::name() const { return kind_name(kind); }

struct ScalarAccess {
  static const Scalar::Rep& rep(const Scalar& s) { return s.rep_; }
  static Scalar make(Scalar::Rep r) { return Scalar(std::move(r)); }
};

namespace {

const RatPadic& as_rp(const Scalar& s) { return std::get<RatPadic>(ScalarAccess::rep(s)); }
const RFQ& as_rfq(const Scalar& s) { return std::get<RFQ>(ScalarAccess::rep(s)); }
const RFF& as_rff(const Scalar& s) { return std::get<RFF>(ScalarAccess::rep(s)); }

void check_same(const Scalar& a, const Scalar& b) {
  if (ScalarAccess::rep(a).index() != ScalarAccess::rep(b).index())
    throw precondition_error("scalar backends differ");
  if (std::holds_alternative<RatPadic>(ScalarAccess::rep(a)) &&
      as_rp(a).p != as_rp(b).p)
    throw precondition_error("scalar primes differ");
  if (std::holds_alternative<RFF>(ScalarAccess::rep(a)) &&
      as_rff(a).ctx.p != as_rff(b).ctx.p)
    throw precondition_error("scalar field sizes differ");
}

}  // namespace

Scalar Scalar::zero(const BackendConfig& cfg) { return from_integer(cfg, 0); }
Scalar Scalar::one(const BackendConfig& cfg) { return from_integer(cfg, 1); }

Scalar Scalar::from_integer(const BackendConfig& cfg, long n) {
  return from_mpz(cfg, mpz_class(n));
}

Scalar Scalar::from_mpz(const BackendConfig& cfg, const mpz_class& z) {
  switch (cfg.kind) {
    case BackendKind::RationalPadic:
      return ScalarAccess::make(RatPadic{mpq_class(z), cfg.p});
    case BackendKind::RatFuncChar0: {
      QCtx k;
      return ScalarAccess::make(rf_make(k, 0, detail::poly_const(k, mpq_class(z)),
                                        detail::poly_one(k)));
    }
    case BackendKind::RatFuncFq: {
      FpCtx k{cfg.q};
      return ScalarAccess::make(
          rf_make(k, 0, detail::poly_const(k, k.from_mpz(z)), detail::poly_one(k)));
    }
  }
  throw precondition_error("bad backend");
}

Scalar Scalar::from_mpq(const BackendConfig& cfg, const mpq_class& x) {
  switch (cfg.kind) {
    case BackendKind::RationalPadic: {
      mpq_class y = x;
      y.canonicalize();
      return ScalarAccess::make(RatPadic{y, cfg.p});
    }
    case BackendKind::RatFuncChar0: {
      QCtx k;
      return ScalarAccess::make(
          rf_make(k, 0, detail::poly_const(k, x), detail::poly_one(k)));
    }
    case BackendKind::RatFuncFq: {
      FpCtx k{cfg.q};
      long dn = k.from_mpz(mpz_class(x.get_den()));
      if (dn == 0)
        throw arithmetic_error("rational constant has denominator divisible by the characteristic");
      long nm = k.from_mpz(mpz_class(x.get_num()));
      return ScalarAccess::make(rf_make(
          k, 0, detail::poly_const(k, k.mul(nm, k.inv(dn))), detail::poly_one(k)));
    }
  }
  throw precondition_error("bad backend");
}

Scalar Scalar::uniformizer(const BackendConfig& cfg) {
  switch (cfg.kind) {
    case BackendKind::RationalPadic:
      return from_integer(cfg, cfg.p);
    case BackendKind::RatFuncChar0: {
      QCtx k;
      return ScalarAccess::make(rf_make(k, 1, detail::poly_one(k), detail::poly_one(k)));
    }
    case BackendKind::RatFuncFq: {
      FpCtx k{cfg.q};
      return ScalarAccess::make(rf_make(k, 1, detail::poly_one(k), detail::poly_one(k)));
    }
  }
  throw precondition_error("bad backend");
}

Scalar Scalar::f_element(const BackendConfig& cfg) {
  return uniformizer(cfg).pow(cfg.k);
}

Scalar Scalar::add(const Scalar& o) const {
  check_same(*this, o);
  if (auto* a = std::get_if<RatPadic>(&rep_))
    return ScalarAccess::make(RatPadic{mpq_class(a->x + as_rp(o).x), a->p});
  if (auto* a = std::get_if<RFQ>(&rep_))
    return ScalarAccess::make(rf_add(*a, as_rfq(o)));
  return ScalarAccess::make(rf_add(std::get<RFF>(rep_), as_rff(o)));
}

Scalar Scalar::sub(const Scalar& o) const { return add(o.neg()); }

Scalar Scalar::mul(const Scalar& o) const {
  check_same(*this, o);
  if (auto* a = std::get_if<RatPadic>(&rep_))
    return ScalarAccess::make(RatPadic{mpq_class(a->x * as_rp(o).x), a->p});
  if (auto* a = std::get_if<RFQ>(&rep_))
    return ScalarAccess::make(rf_mul(*a, as_rfq(o)));
  return ScalarAccess::make(rf_mul(std::get<RFF>(rep_), as_rff(o)));
}

Scalar Scalar::div(const Scalar& o) const { return mul(o.inv()); }

Scalar Scalar::neg() const {
  if (auto* a = std::get_if<RatPadic>(&rep_))
    return ScalarAccess::make(RatPadic{mpq_class(-a->x), a->p});
  if (auto* a = std::get_if<RFQ>(&rep_)) return ScalarAccess::make(rf_neg(*a));
  return ScalarAccess::make(rf_neg(std::get<RFF>(rep_)));
}

Scalar Scalar::inv() const {
  if (auto* a = std::get_if<RatPadic>(&rep_)) {
    if (sgn(a->x) == 0) throw arithmetic_error("division by zero");
    return ScalarAccess::make(RatPadic{mpq_class(1 / a->x), a->p});
  }
  if (auto* a = std::get_if<RFQ>(&rep_)) return ScalarAccess::make(rf_inv(*a));
  return ScalarAccess::make(rf_inv(std::get<RFF>(rep_)));
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  Scalar base = *this;
  Scalar acc = Scalar::one(field_config());
  while (n > 0) {
    if (n & 1) acc = acc.mul(base);
    base = base.mul(base);
    n >>= 1;
  }
  return acc;
}

bool Scalar::is_zero() const {
  if (auto* a = std::get_if<RatPadic>(&rep_)) return sgn(a->x) == 0;
  if (auto* a = std::get_if<RFQ>(&rep_)) return detail::poly_is_zero(a->num);
  return detail::poly_is_zero(std::get<RFF>(rep_).num);
}

bool Scalar::is_one() const { return *this == Scalar::one(field_config()); }

Valuation Scalar::val() const {
  if (is_zero()) return Valuation::infinite();
  if (auto* a = std::get_if<RatPadic>(&rep_))
    return Valuation::of(val_mpq_at(a->x, a->p));
  if (auto* a = std::get_if<RFQ>(&rep_)) return Valuation::of(a->v);
  return Valuation::of(std::get<RFF>(rep_).v);
}

Scalar Scalar::residue_mod(long m) const {
  if (auto* a = std::get_if<RatPadic>(&rep_)) {
    long p = a->p;
    mpq_class r(0);
    mpq_class y = a->x;
    FpCtx fp{p};
    while (sgn(y) != 0) {
      long d = val_mpq_at(y, p);
      if (d >= m) break;
      mpq_class z = y / mpq_pow_long(p, d);
      long nm = fp.from_mpz(mpz_class(z.get_num()));
      long dn = fp.from_mpz(mpz_class(z.get_den()));
      long digit = fp.mul(nm, fp.inv(dn));
      mpq_class step = digit * mpq_pow_long(p, d);
      r += step;
      y -= step;
    }
    return ScalarAccess::make(RatPadic{r, p});
  }
  if (auto* a = std::get_if<RFQ>(&rep_)) return ScalarAccess::make(rf_residue(*a, m));
  return ScalarAccess::make(rf_residue(std::get<RFF>(rep_), m));
}

Scalar Scalar::unit_part() const {
  if (is_zero()) throw arithmetic_error("unit_part of zero");
  BackendConfig cfg = field_config();
  return mul(Scalar::uniformizer(cfg).pow(-val().value()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (auto* x = std::get_if<RatPadic>(&ScalarAccess::rep(a)))
    return x->x == as_rp(b).x;
  if (auto* x = std::get_if<RFQ>(&ScalarAccess::rep(a)))
    return rf_eq(*x, as_rfq(b));
  return rf_eq(std::get<RFF>(ScalarAccess::rep(a)), as_rff(b));
}

std::string Scalar::str() const {
  if (auto* a = std::get_if<RatPadic>(&rep_)) return a->x.get_str();
  if (auto* a = std::get_if<RFQ>(&rep_)) return rf_str(*a);
  return rf_str(std::get<RFF>(rep_));
}

BackendKind Scalar::kind() const {
  if (std::holds_alternative<RatPadic>(rep_)) return BackendKind::RationalPadic;
  if (std::holds_alternative<RFQ>(rep_)) return BackendKind::RatFuncChar0;
  return BackendKind::RatFuncFq;
}

BackendConfig Scalar::field_config() const {
  BackendConfig cfg;
  cfg.kind = kind();
  cfg.k = 0;
  if (auto* a = std::get_if<RatPadic>(&rep_)) cfg.p = a->p;
  if (auto* a = std::get_if<RFF>(&rep_)) cfg.q = a->ctx.p;
  return cfg;
}

std::string format_scalar(const Scalar& x) { return x.str(); }

namespace {

struct ScalarParseOps {
  using Value = Scalar;
  BackendConfig cfg;

  Value from_mpz(const mpz_class& z) { return Scalar::from_mpz(cfg, z); }
  Value variable(const std::string& name, std::size_t pos) {
    if (name == "e" && cfg.kind != BackendKind::RationalPadic)
      return Scalar::uniformizer(cfg);
    throw parse_error("unknown symbol '" + name + "'", pos);
  }
  Value add(Value a, Value b) { return a.add(b); }
  Value sub(Value a, Value b) { return a.sub(b); }
  Value mul(Value a, Value b) { return a.mul(b); }
  Value div(Value a, Value b, std::size_t pos) {
    if (b.is_zero()) throw parse_error("division by zero", pos);
    return a.div(b);
  }
  Value pow(Value a, long e, std::size_t pos) {
    if (a.is_zero() && e < 0) throw parse_error("zero to a negative power", pos);
    return a.pow(e);
  }
  Value neg(Value a) { return a.neg(); }
};

}  // namespace

Scalar parse_scalar(std::string_view text, const BackendConfig& cfg) {
  cfg.validate();
  ScalarParseOps ops{cfg};
  detail::ExprParser<ScalarParseOps> p(text, ops);
  return p.parse();
}

}  // namespace ogm
