#pragma once

// Exact scalar arithmetic in the fraction field F of a discrete valuation
// ring O, with three interchangeable backends:
//   rational-padic   F = Q,      O = Z localized at a prime p,  pi = p
//   ratfunc-char0    F = Q(e),   O = Q[e] localized at (e),     pi = e
//   ratfunc-fq       F = F_q(e), O = F_q[e] localized at (e),   pi = e
// Everything is arbitrary precision; no floating point anywhere.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "ogm/common.hpp"
#include "ogm/detail/polyfield.hpp"

namespace ogm {

enum class BackendKind { RationalPadic, RatFuncChar0, RatFuncFq };

struct BackendConfig {
  BackendKind kind = BackendKind::RationalPadic;
  long p = 0;  // rational-padic only
  long q = 0;  // ratfunc-fq only
  long k = 0;  // the distinguished element is f = pi^k

  // Throws unsupported_error / precondition_error on invalid combinations.
  // q must be prime: prime-power extension fields are declared out of scope.
  void validate() const;

  friend bool operator==(const BackendConfig&, const BackendConfig&) = default;
  // same field, ignoring k (k only selects f inside that field)
  bool same_field(const BackendConfig& o) const {
    return kind == o.kind && p == o.p && q == o.q;
  }
  std::string name() const;
};

namespace detail {

struct RatPadic {
  mpq_class x;
  long p;
};

// e^v * num/den with num(0) != 0, den(0) = 1, gcd(num,den)=1.
// Zero is num = 0, v = 0, den = 1.
template <class K>
struct RatFuncRep {
  long v;
  Poly<K> num;
  Poly<K> den;
  K ctx;
};

using RFQ = RatFuncRep<QCtx>;
using RFF = RatFuncRep<FpCtx>;

}  // namespace detail

class Scalar {
 public:
  static Scalar zero(const BackendConfig& cfg);
  static Scalar one(const BackendConfig& cfg);
  static Scalar from_integer(const BackendConfig& cfg, long n);
  static Scalar from_mpz(const BackendConfig& cfg, const mpz_class& z);
  // Rational constants; on ratfunc-fq the denominator must be prime to q.
  static Scalar from_mpq(const BackendConfig& cfg, const mpq_class& x);
  static Scalar uniformizer(const BackendConfig& cfg);  // p, or e
  static Scalar f_element(const BackendConfig& cfg);    // pi^k

  Scalar add(const Scalar& o) const;
  Scalar sub(const Scalar& o) const;
  Scalar mul(const Scalar& o) const;
  Scalar div(const Scalar& o) const;
  Scalar neg() const;
  Scalar inv() const;
  Scalar pow(long n) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b) { return a.add(b); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a.sub(b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return a.mul(b); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a.div(b); }
  Scalar operator-() const { return neg(); }

  bool is_zero() const;
  bool is_one() const;
  Valuation val() const;
  bool is_integral() const { return val().at_least(0); }
  bool val_at_least(long m) const { return val().at_least(m); }
  bool is_unit() const { return !is_zero() && val().value() == 0; }

  // canonical representative modulo pi^m O (finite pi-adic digit expansion /
  // truncated power series); well defined on all of F
  Scalar residue_mod(long m) const;
  // x = pi^v * unit_part(); x must be nonzero
  Scalar unit_part() const;
  bool congruent_mod(const Scalar& o, long m) const {
    return sub(o).val_at_least(m);
  }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;
  BackendKind kind() const;
  // config this scalar belongs to, with k = 0 (k is not a property of values)
  BackendConfig field_config() const;

 private:
  using Rep = std::variant<detail::RatPadic, detail::RFQ, detail::RFF>;
  explicit Scalar(Rep r) : rep_(std::move(r)) {}
  Rep rep_;

  friend struct ScalarAccess;
};

// Canonical textual form; parse(format(x)) == x.
std::string format_scalar(const Scalar& x);
Scalar parse_scalar(std::string_view text, const BackendConfig& cfg);

}  // namespace ogm
