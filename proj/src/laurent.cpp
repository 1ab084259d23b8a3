#include "ogm/laurent.hpp"

#include <algorithm>

#include "ogm/detail/exprparse.hpp"

namespace ogm {

namespace {

void check_field(const BackendConfig& a, const BackendConfig& b) {
  if (!a.same_field(b)) throw precondition_error("mixed scalar fields");
}

long rnd_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

// scan limit for witness searches that are finite but lack an a-priori bound
// (k = 0 coefficient criterion); generous, hit only on internal bugs
constexpr long kWitnessScanCap = 4096;

}  // namespace

LaurentPoly LaurentPoly::monomial(const BackendConfig& cfg, long deg, const Scalar& c) {
  LaurentPoly r(cfg);
  r.set(deg, c);
  return r;
}

Scalar LaurentPoly::coeff(long deg) const {
  auto it = c_.find(deg);
  return it == c_.end() ? Scalar::zero(cfg_) : it->second;
}

void LaurentPoly::set(long deg, const Scalar& c) {
  if (c.is_zero()) c_.erase(deg);
  else c_.insert_or_assign(deg, c);
}

long LaurentPoly::min_degree() const {
  if (c_.empty()) throw precondition_error("degree of zero polynomial");
  return c_.begin()->first;
}

long LaurentPoly::max_degree() const {
  if (c_.empty()) throw precondition_error("degree of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::add(const LaurentPoly& o) const {
  check_field(cfg_, o.cfg_);
  LaurentPoly r = *this;
  for (const auto& [d, c] : o.c_) r.set(d, r.coeff(d).add(c));
  return r;
}

LaurentPoly LaurentPoly::sub(const LaurentPoly& o) const { return add(o.neg()); }

LaurentPoly LaurentPoly::mul(const LaurentPoly& o) const {
  check_field(cfg_, o.cfg_);
  LaurentPoly r(cfg_);
  for (const auto& [d1, c1] : c_)
    for (const auto& [d2, c2] : o.c_)
      r.set(d1 + d2, r.coeff(d1 + d2).add(c1.mul(c2)));
  return r;
}

LaurentPoly LaurentPoly::scale(const Scalar& s) const {
  LaurentPoly r(cfg_);
  if (s.is_zero()) return r;
  for (const auto& [d, c] : c_) r.set(d, c.mul(s));
  return r;
}

LaurentPoly LaurentPoly::neg() const {
  LaurentPoly r(cfg_);
  for (const auto& [d, c] : c_) r.set(d, c.neg());
  return r;
}

LaurentPoly LaurentPoly::shift(long n) const {
  LaurentPoly r(cfg_);
  for (const auto& [d, c] : c_) r.set(d + n, c);
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r(cfg_);
  for (const auto& [d, c] : c_) r.set(-d, c);
  return r;
}

Scalar LaurentPoly::eval(const Scalar& t) const {
  Scalar acc = Scalar::zero(cfg_);
  for (const auto& [d, c] : c_) acc = acc.add(c.mul(t.pow(d)));
  return acc;
}

Scalar LaurentPoly::eval_at_one() const {
  Scalar acc = Scalar::zero(cfg_);
  for (const auto& [d, c] : c_) acc = acc.add(c);
  return acc;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  check_field(a.cfg_, b.cfg_);
  if (a.c_.size() != b.c_.size()) return false;
  auto it = b.c_.begin();
  for (const auto& [d, c] : a.c_) {
    if (it->first != d || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

Scalar LaurentPoly2::coeff(long i, long j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Scalar::zero(cfg_) : it->second;
}

void LaurentPoly2::set(long i, long j, const Scalar& c) {
  if (c.is_zero()) c_.erase({i, j});
  else c_.insert_or_assign(Key{i, j}, c);
}

LaurentPoly2 LaurentPoly2::add(const LaurentPoly2& o) const {
  check_field(cfg_, o.cfg_);
  LaurentPoly2 r = *this;
  for (const auto& [k, c] : o.c_) r.set(k.first, k.second, r.coeff(k.first, k.second).add(c));
  return r;
}

LaurentPoly2 LaurentPoly2::sub(const LaurentPoly2& o) const { return add(o.neg()); }

LaurentPoly2 LaurentPoly2::mul(const LaurentPoly2& o) const {
  check_field(cfg_, o.cfg_);
  LaurentPoly2 r(cfg_);
  for (const auto& [k1, c1] : c_)
    for (const auto& [k2, c2] : o.c_) {
      long i = k1.first + k2.first, j = k1.second + k2.second;
      r.set(i, j, r.coeff(i, j).add(c1.mul(c2)));
    }
  return r;
}

LaurentPoly2 LaurentPoly2::scale(const Scalar& s) const {
  LaurentPoly2 r(cfg_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : c_) r.set(k.first, k.second, c.mul(s));
  return r;
}

LaurentPoly2 LaurentPoly2::neg() const {
  LaurentPoly2 r(cfg_);
  for (const auto& [k, c] : c_) r.set(k.first, k.second, c.neg());
  return r;
}

Scalar LaurentPoly2::eval(const Scalar& t1, const Scalar& t2) const {
  Scalar acc = Scalar::zero(cfg_);
  for (const auto& [k, c] : c_) acc = acc.add(c.mul(t1.pow(k.first)).mul(t2.pow(k.second)));
  return acc;
}

LaurentPoly2 LaurentPoly2::lift(const LaurentPoly& g, int which_var) {
  LaurentPoly2 r(g.config());
  for (const auto& [d, c] : g.terms()) {
    if (which_var == 1) r.set(d, 0, c);
    else r.set(0, d, c);
  }
  return r;
}

LaurentPoly LaurentPoly2::collapse_var(int which_var) const {
  LaurentPoly r(cfg_);
  for (const auto& [k, c] : c_) {
    long keep = which_var == 1 ? k.second : k.first;
    r.set(keep, r.coeff(keep).add(c));
  }
  return r;
}

bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
  check_field(a.cfg_, b.cfg_);
  if (a.c_.size() != b.c_.size()) return false;
  auto it = b.c_.begin();
  for (const auto& [k, c] : a.c_) {
    if (it->first != k || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

std::vector<Scalar> LaurentVector::component(long deg) const {
  auto it = c_.find(deg);
  if (it != c_.end()) return it->second;
  return std::vector<Scalar>(dim_, Scalar::zero(cfg_));
}

void LaurentVector::set(long deg, std::vector<Scalar> v) {
  if (v.size() != dim_) throw precondition_error("component dimension mismatch");
  bool allzero = std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  if (allzero) c_.erase(deg);
  else c_.insert_or_assign(deg, std::move(v));
}

bool operator==(const LaurentVector& a, const LaurentVector& b) {
  if (a.dim_ != b.dim_ || a.c_.size() != b.c_.size()) return false;
  auto it = b.c_.begin();
  for (const auto& [d, v] : a.c_) {
    if (it->first != d) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(v[i] == it->second[i])) return false;
    ++it;
  }
  return true;
}

mpz_class binomial_z(long i, long n) {
  if (n < 0) throw precondition_error("binomial: n must be >= 0");
  mpz_class r(1);
  for (long t = 0; t < n; ++t) {
    r *= mpz_class(i - t);
    mpz_class d(t + 1);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

Scalar binomial_scalar(const BackendConfig& cfg, long i, long n) {
  return Scalar::from_mpz(cfg, binomial_z(i, n));
}

LaurentPoly divided_power(const LaurentPoly& g, long n) {
  if (n < 0) throw precondition_error("divided_power: n must be >= 0");
  const BackendConfig& cfg = g.config();
  LaurentPoly r(cfg);
  for (const auto& [i, b] : g.terms()) {
    Scalar c = binomial_scalar(cfg, i, n).mul(b);
    if (!c.is_zero()) r.set(i - n, r.coeff(i - n).add(c));
  }
  return r;
}

Scalar l_functional(const LaurentPoly& g, long n, const BackendConfig& cfg) {
  if (n < 0) throw precondition_error("l_functional: n must be >= 0");
  Scalar acc = Scalar::zero(cfg);
  for (const auto& [i, b] : g.terms())
    acc = acc.add(binomial_scalar(cfg, i, n).mul(b));
  return acc.mul(Scalar::f_element(cfg).pow(n));
}

std::vector<Scalar> bold_l(const LaurentVector& x, long n, const BackendConfig& cfg) {
  if (n < 0) throw precondition_error("bold_l: n must be >= 0");
  std::vector<Scalar> acc(x.dim(), Scalar::zero(cfg));
  Scalar fn = Scalar::f_element(cfg).pow(n);
  for (const auto& [i, v] : x.terms()) {
    Scalar w = binomial_scalar(cfg, i, n).mul(fn);
    for (std::size_t t = 0; t < v.size(); ++t) acc[t] = acc[t].add(w.mul(v[t]));
  }
  return acc;
}

std::vector<Scalar> taylor_coefficients(const LaurentPoly& h) {
  if (h.is_zero()) return {};
  if (h.min_degree() < 0)
    throw precondition_error("taylor_coefficients: negative degrees present");
  long d = h.max_degree();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(d) + 1);
  for (long n = 0; n <= d; ++n)
    out.push_back(divided_power(h, n).eval_at_one());
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

long s_membership_bound(const LaurentPoly& g, const BackendConfig& cfg) {
  if (g.is_zero()) return 0;
  if (cfg.k == 0) return 0;
  long vmin = 0;
  bool first = true;
  for (const auto& [i, b] : g.terms()) {
    long v = b.val().value();
    if (first || v < vmin) { vmin = v; first = false; }
  }
  if (vmin >= 0) return 0;
  return (-vmin + cfg.k - 1) / cfg.k;  // ceil(-vmin / k)
}

namespace {

// assumes membership; g = T^{-m} sum a_n ((T-1)/f)^n with m minimal
GeneratorExpression express_unchecked(const LaurentPoly& g, const BackendConfig& cfg) {
  GeneratorExpression ex;
  if (g.is_zero()) return ex;
  ex.m = std::max(0L, -g.min_degree());
  LaurentPoly h = g.shift(ex.m);
  std::vector<Scalar> c = taylor_coefficients(h);
  Scalar f = Scalar::f_element(cfg);
  for (std::size_t n = 0; n < c.size(); ++n)
    ex.coeffs.push_back(c[n].mul(f.pow(static_cast<long>(n))));
  return ex;
}

}  // namespace

LaurentPoly expand_generator_expression(const BackendConfig& cfg,
                                        const GeneratorExpression& ex) {
  Scalar f = Scalar::f_element(cfg);
  LaurentPoly x(cfg);  // (T-1)/f
  x.set(1, f.inv());
  x.set(0, f.inv().neg());
  LaurentPoly acc(cfg);
  LaurentPoly xp(cfg);
  xp.set(0, Scalar::one(cfg));
  for (std::size_t n = 0; n < ex.coeffs.size(); ++n) {
    acc = acc.add(xp.scale(ex.coeffs[n]));
    if (n + 1 < ex.coeffs.size()) xp = xp.mul(x);
  }
  return acc.shift(-ex.m);
}

MembershipVerdict s_membership(const LaurentPoly& g, const BackendConfig& cfg) {
  cfg.validate();
  MembershipVerdict v;
  if (g.is_zero()) {
    v.member = true;
    v.expression = GeneratorExpression{};
    return v;
  }
  if (cfg.k == 0) {
    // S is A[T, T^-1]: integrality of the coefficients decides; the witness is
    // still the least failing L_n, found by direct scan (one always exists)
    bool ok = true;
    for (const auto& [i, b] : g.terms())
      if (!b.is_integral()) { ok = false; break; }
    if (!ok) {
      for (long n = 0; n <= kWitnessScanCap; ++n) {
        Scalar ln = l_functional(g, n, cfg);
        if (!ln.is_integral()) {
          v.member = false;
          v.witness = MembershipWitness{n, ln};
          return v;
        }
      }
      throw std::logic_error("membership witness scan exceeded cap");
    }
  } else {
    long bound = s_membership_bound(g, cfg);
    for (long n = 0; n < bound; ++n) {
      Scalar ln = l_functional(g, n, cfg);
      if (!ln.is_integral()) {
        v.member = false;
        v.witness = MembershipWitness{n, ln};
        return v;
      }
    }
  }
  v.member = true;
  GeneratorExpression ex = express_unchecked(g, cfg);
  if (!(expand_generator_expression(cfg, ex) == g))
    throw std::logic_error("generator expression failed re-expansion");
  for (const auto& c : ex.coeffs)
    if (!c.is_integral())
      throw std::logic_error("generator expression has non-integral coefficient");
  v.expression = std::move(ex);
  return v;
}

GeneratorExpression express_in_generators(const LaurentPoly& g, const BackendConfig& cfg) {
  MembershipVerdict v = s_membership(g, cfg);
  if (!v.member)
    throw arithmetic_error("express_in_generators: not a member (L_" +
                           std::to_string(v.witness->n) + " = " +
                           v.witness->value.str() + ")");
  return *v.expression;
}

MembershipVerdict s_tensor_membership(const LaurentPoly2& x, const BackendConfig& cfg) {
  cfg.validate();
  MembershipVerdict v;
  if (x.is_zero()) {
    v.member = true;
    return v;
  }

  // first-variable functional L_n, value in F[T2, T2^-1]
  auto lvar1 = [&](long n) {
    LaurentPoly out(cfg);
    Scalar fn = Scalar::f_element(cfg).pow(n);
    for (const auto& [k, c] : x.terms()) {
      Scalar w = binomial_scalar(cfg, k.first, n).mul(fn).mul(c);
      if (!w.is_zero()) out.set(k.second, out.coeff(k.second).add(w));
    }
    return out;
  };

  if (cfg.k == 0) {
    bool ok = true;
    for (const auto& [k, c] : x.terms())
      if (!c.is_integral()) { ok = false; break; }
    if (ok) {
      v.member = true;
      return v;
    }
    for (long n = 0; n <= kWitnessScanCap; ++n) {
      LaurentPoly g = lvar1(n);
      MembershipVerdict inner = s_membership(g, cfg);
      if (!inner.member) {
        v.member = false;
        v.witness = MembershipWitness{n, inner.witness->value};
        return v;
      }
    }
    throw std::logic_error("tensor membership witness scan exceeded cap");
  }

  long vmin = 0;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    long val = c.val().value();
    if (first || val < vmin) { vmin = val; first = false; }
  }
  long bound = vmin >= 0 ? 0 : (-vmin + cfg.k - 1) / cfg.k;
  // beyond the bound every L_n lands in A[T2, T2^-1], a subring of S
  for (long n = 0; n < bound; ++n) {
    MembershipVerdict inner = s_membership(lvar1(n), cfg);
    if (!inner.member) {
      v.member = false;
      v.witness = MembershipWitness{n, inner.witness->value};
      return v;
    }
  }
  v.member = true;
  return v;
}

bool s_infinity_membership(const LaurentPoly& g) {
  return g.eval_at_one().is_integral();
}

namespace {

bool coeff_needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return true;
  return false;
}

std::string one_term(const std::string& cs, const std::string& var, long d) {
  if (d == 0) return cs;
  std::string v = d == 1 ? var : var + "^" + std::to_string(d);
  if (cs == "1") return v;
  if (cs == "-1") return "-" + v;
  std::string c = coeff_needs_parens(cs) ? "(" + cs + ")" : cs;
  return c + "*" + v;
}

std::string join_terms(const std::vector<std::string>& ts) {
  if (ts.empty()) return "0";
  std::string out = ts[0];
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!ts[i].empty() && ts[i][0] == '-') out += ts[i];
    else out += "+" + ts[i];
  }
  return out;
}

}  // namespace

std::string format_laurent(const LaurentPoly& g) {
  std::vector<std::string> ts;
  for (const auto& [d, c] : g.terms()) ts.push_back(one_term(c.str(), "T", d));
  return join_terms(ts);
}

std::string format_laurent2(const LaurentPoly2& g) {
  std::vector<std::string> ts;
  for (const auto& [k, c] : g.terms()) {
    std::string cs = c.str();
    if (k.first == 0 && k.second == 0) {
      ts.push_back(cs);
      continue;
    }
    std::string mono;
    if (k.first != 0)
      mono = k.first == 1 ? "T1" : "T1^" + std::to_string(k.first);
    if (k.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += k.second == 1 ? "T2" : "T2^" + std::to_string(k.second);
    }
    if (cs == "1") ts.push_back(mono);
    else if (cs == "-1") ts.push_back("-" + mono);
    else ts.push_back((coeff_needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono);
  }
  return join_terms(ts);
}

namespace {

// nvars = 1 parses T; nvars = 2 parses T1/T2; values are two-variable
// polynomials either way, collapsed at the end for the one-variable form.
struct LaurentParseOps {
  using Value = LaurentPoly2;
  BackendConfig cfg;
  int nvars;

  Value constant(const Scalar& s) {
    Value v(cfg);
    v.set(0, 0, s);
    return v;
  }
  Value from_mpz(const mpz_class& z) { return constant(Scalar::from_mpz(cfg, z)); }
  Value variable(const std::string& name, std::size_t pos) {
    if (name == "e" && cfg.kind != BackendKind::RationalPadic)
      return constant(Scalar::uniformizer(cfg));
    if (nvars == 1 && name == "T") {
      Value v(cfg);
      v.set(1, 0, Scalar::one(cfg));
      return v;
    }
    if (nvars == 2 && (name == "T1" || name == "T2")) {
      Value v(cfg);
      v.set(name == "T1" ? 1 : 0, name == "T1" ? 0 : 1, Scalar::one(cfg));
      return v;
    }
    throw parse_error("unknown symbol '" + name + "'", pos);
  }
  Value add(Value a, Value b) { return a.add(b); }
  Value sub(Value a, Value b) { return a.sub(b); }
  Value mul(Value a, Value b) { return a.mul(b); }
  // only unit monomials c*T1^i*T2^j can divide
  Value inv_of(const Value& b, std::size_t pos) {
    if (b.terms().size() != 1)
      throw parse_error("divisor must be a single invertible term", pos);
    const auto& [k, c] = *b.terms().begin();
    Value r(b.config());
    r.set(-k.first, -k.second, c.inv());
    return r;
  }
  Value div(Value a, Value b, std::size_t pos) {
    if (b.is_zero()) throw parse_error("division by zero", pos);
    return a.mul(inv_of(b, pos));
  }
  Value pow(Value a, long e, std::size_t pos) {
    if (e < 0) {
      if (a.is_zero()) throw parse_error("zero to a negative power", pos);
      a = inv_of(a, pos);
      e = -e;
    }
    Value acc = constant(Scalar::one(cfg));
    for (long i = 0; i < e; ++i) acc = acc.mul(a);
    return acc;
  }
  Value neg(Value a) { return a.neg(); }
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const BackendConfig& cfg) {
  cfg.validate();
  LaurentParseOps ops{cfg, 1};
  detail::ExprParser<LaurentParseOps> p(text, ops);
  LaurentPoly2 two = p.parse();
  LaurentPoly out(cfg);
  for (const auto& [k, c] : two.terms()) out.set(k.first, c);
  return out;
}

LaurentPoly2 parse_laurent2(std::string_view text, const BackendConfig& cfg) {
  cfg.validate();
  LaurentParseOps ops{cfg, 2};
  detail::ExprParser<LaurentParseOps> p(text, ops);
  return p.parse();
}

Scalar sample_integral_scalar(const BackendConfig& cfg, std::mt19937_64& rng, long bound) {
  if (cfg.kind == BackendKind::RationalPadic)
    return Scalar::from_integer(cfg, rnd_range(rng, -bound, bound));
  // small polynomial in e
  Scalar e = Scalar::uniformizer(cfg);
  Scalar acc = Scalar::zero(cfg);
  long deg = rnd_range(rng, 0, 2);
  for (long d = 0; d <= deg; ++d)
    acc = acc.add(Scalar::from_integer(cfg, rnd_range(rng, -bound, bound)).mul(e.pow(d)));
  return acc;
}

Scalar sample_scalar(const BackendConfig& cfg, std::mt19937_64& rng) {
  Scalar x = sample_integral_scalar(cfg, rng, 4);
  if (cfg.kind == BackendKind::RationalPadic) {
    long den = rnd_range(rng, 1, 9);
    while (den % cfg.p == 0) den /= cfg.p;  // keep the denominator a unit
    x = x.div(Scalar::from_integer(cfg, den));
  } else if (rnd_range(rng, 0, 1) == 1) {
    // a unit denominator 1 + c*e
    Scalar d = Scalar::one(cfg).add(
        Scalar::from_integer(cfg, rnd_range(rng, -3, 3)).mul(Scalar::uniformizer(cfg)));
    x = x.div(d);
  }
  long v = rnd_range(rng, -2, 2);
  return x.mul(Scalar::uniformizer(cfg).pow(v));
}

LaurentPoly sample_laurent(const BackendConfig& cfg, std::mt19937_64& rng,
                           long max_abs_degree, long max_terms) {
  LaurentPoly g(cfg);
  long nterms = rnd_range(rng, 1, max_terms);
  for (long t = 0; t < nterms; ++t) {
    long d = rnd_range(rng, -max_abs_degree, max_abs_degree);
    g.set(d, g.coeff(d).add(sample_scalar(cfg, rng)));
  }
  return g;
}

LaurentPoly sample_s_member(const BackendConfig& cfg, std::mt19937_64& rng,
                            long max_m, long max_n) {
  GeneratorExpression ex;
  ex.m = rnd_range(rng, 0, max_m);
  long top = rnd_range(rng, 0, max_n);
  for (long n = 0; n <= top; ++n)
    ex.coeffs.push_back(sample_integral_scalar(cfg, rng, 4));
  return expand_generator_expression(cfg, ex);
}

}  // namespace ogm
