#pragma once

// The affine group scheme whose R-points are pairs (t, x) with t - 1 = f*x
// and t invertible, together with its coordinate ring in two presentations:
// Laurent polynomials in T (via T = 1 + fX) and fractions num(X)/(1+fX)^m
// with numerator over O. Hopf structure maps are provided in both
// presentations, plus an exact axiom verifier used by the self-test suites.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ogm/laurent.hpp"

namespace ogm {

// ring a point lives over: O itself, its fraction field F, or O/pi^m
struct RingTag {
  enum Kind { O, F, Quot } kind = O;
  long m = 0;  // modulus exponent, Quot only

  static RingTag ring_o() { return {O, 0}; }
  static RingTag ring_f() { return {F, 0}; }
  static RingTag quotient(long m) { return {Quot, m}; }

  friend bool operator==(const RingTag&, const RingTag&) = default;
  std::string str() const;  // "O", "F", "O/pi^m"
};

RingTag parse_ring_tag(std::string_view text);

// a point (t, x); representatives over O/pi^m are kept as canonical residues
struct GPoint {
  Scalar t;
  Scalar x;
  RingTag ring;
};

// checks t - 1 = f*x (a congruence mod pi^m on quotient tags) and that t is
// invertible in the tagged ring; canonicalizes quotient representatives
GPoint make_point(const Scalar& t, const Scalar& x, RingTag ring,
                  const BackendConfig& cfg);

GPoint group_identity(const BackendConfig& cfg, RingTag ring);
GPoint group_law(const GPoint& a, const GPoint& b, const BackendConfig& cfg);
GPoint group_inverse(const GPoint& a, const BackendConfig& cfg);
bool points_equal(const GPoint& a, const GPoint& b);

struct GPointVerdict {
  bool accepted = false;
  std::optional<GPoint> point;  // over O on acceptance
  std::string reason;           // set on rejection
};

// t is an O-point iff v(t) = 0 and v(t - 1) >= k; then x = (t - 1)/f
GPointVerdict g_points_membership(const Scalar& t, const BackendConfig& cfg);

// deterministic random point over the given ring (unit 1 + fx by
// construction; resamples in the rare k = 0 non-unit case)
GPoint sample_g_point(const BackendConfig& cfg, std::mt19937_64& rng, RingTag ring);

// Hopf maps on the Laurent presentation. comult is the algebra map
// T^i -> T1^i T2^i, counit is evaluation at T = 1, antipode is T -> T^-1.
LaurentPoly2 comult(const LaurentPoly& g);
Scalar counit(const LaurentPoly& g);
LaurentPoly antipode(const LaurentPoly& g);

// num(X)/(1+fX)^m with num over O; canonical: m = 0 or (1+fX) does not
// divide num in O[X], numerator trimmed, zero is (0, m=0)
class XPresElement {
 public:
  // canonicalizes; throws precondition_error on non-integral coefficients
  XPresElement(const BackendConfig& cfg, std::vector<Scalar> num, long m);
  static XPresElement zero(const BackendConfig& cfg);
  static XPresElement one(const BackendConfig& cfg);
  static XPresElement gen_x(const BackendConfig& cfg);  // X itself
  static XPresElement from_integer(const BackendConfig& cfg, long n);

  const BackendConfig& config() const { return cfg_; }
  const std::vector<Scalar>& num() const { return num_; }
  long denom_power() const { return m_; }
  bool is_zero() const { return num_.empty(); }

  XPresElement add(const XPresElement& o) const;
  XPresElement sub(const XPresElement& o) const;
  XPresElement mul(const XPresElement& o) const;
  XPresElement neg() const;

  friend XPresElement operator+(const XPresElement& a, const XPresElement& b) { return a.add(b); }
  friend XPresElement operator-(const XPresElement& a, const XPresElement& b) { return a.sub(b); }
  friend XPresElement operator*(const XPresElement& a, const XPresElement& b) { return a.mul(b); }
  friend bool operator==(const XPresElement& a, const XPresElement& b);
  friend bool operator!=(const XPresElement& a, const XPresElement& b) { return !(a == b); }

 private:
  std::vector<Scalar> num_;  // ascending powers of X, no trailing zeros
  long m_ = 0;
  BackendConfig cfg_;
};

// num(X1, X2)/((1+fX1)(1+fX2))^m; canonical: m = 0 or the numerator is not
// divisible by the full product (1+fX1)(1+fX2)
class XPres2 {
 public:
  XPres2(const BackendConfig& cfg, LaurentPoly2 num, long m);

  const BackendConfig& config() const { return cfg_; }
  const LaurentPoly2& num() const { return num_; }
  long denom_power() const { return m_; }

  friend bool operator==(const XPres2& a, const XPres2& b);
  friend bool operator!=(const XPres2& a, const XPres2& b) { return !(a == b); }

 private:
  LaurentPoly2 num_;  // support in degrees >= 0 only
  long m_ = 0;
  BackendConfig cfg_;
};

// the algebra map with X -> X1 + X2 + f X1 X2 (so 1+fX -> (1+fX1)(1+fX2))
XPres2 comult_x(const XPresElement& a);
// evaluation at X = 0
Scalar counit_x(const XPresElement& a);
// the algebra map with X -> -X/(1+fX)
XPresElement antipode_x(const XPresElement& a);

// substitute X = (T-1)/f and (1+fX)^-1 = T^-1
LaurentPoly to_t(const XPresElement& a);
LaurentPoly2 to_t2(const XPres2& a);
// inverse conversion; throws arithmetic_error with the membership witness
// when g is not integral for the configured k
XPresElement from_t(const LaurentPoly& g, const BackendConfig& cfg);

// exact value at X = xv (1 + f*xv must be nonzero)
Scalar eval_x(const XPresElement& a, const Scalar& xv);
// canonical residue of the value at an O/pi^mod point with x-coordinate xv;
// well defined on residue classes since only O-coefficients and the inverse
// of the unit 1 + f*xv are involved
Scalar eval_x_mod(const XPresElement& a, const Scalar& xv, long mod);

std::string format_xpres(const XPresElement& a);

struct HopfAxiomCheck {
  std::string axiom;  // coassoc | counit | antipode | mult | closure
  bool pass = true;
  std::string witness;  // first violating element, formatted
};

struct HopfReport {
  bool all_pass = true;
  long elements_checked = 0;
  std::vector<HopfAxiomCheck> checks;
};

// exact checks on the generators T, T^-1, (T-1)/f and `samples` random
// members: coassociativity, both counit laws, the antipode convolution law,
// multiplicativity of comult, and closure of comult into the tensor square
HopfReport verify_hopf_axioms(const BackendConfig& cfg, long samples,
                              unsigned long seed);

}  // namespace ogm
