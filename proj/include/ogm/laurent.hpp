#pragma once

// Laurent polynomials over the fraction field F, the divided-power operators
// D^[n], the functionals L_n(g) = f^n (D^[n]g)(1), and exact membership tests
// for the subrings S_k = O[T, T^-1, (T-1)/f] they cut out, together with
// tensor-square and grading-limit variants.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ogm/scalars.hpp"

namespace ogm {

class LaurentPoly {
 public:
  explicit LaurentPoly(const BackendConfig& cfg) : cfg_(cfg) {}
  static LaurentPoly monomial(const BackendConfig& cfg, long deg, const Scalar& c);

  const BackendConfig& config() const { return cfg_; }
  const std::map<long, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(long deg) const;
  void set(long deg, const Scalar& c);  // prunes zeros
  long min_degree() const;              // empty -> precondition_error
  long max_degree() const;

  LaurentPoly add(const LaurentPoly& o) const;
  LaurentPoly sub(const LaurentPoly& o) const;
  LaurentPoly mul(const LaurentPoly& o) const;
  LaurentPoly scale(const Scalar& s) const;
  LaurentPoly neg() const;
  LaurentPoly shift(long n) const;        // multiply by T^n
  LaurentPoly invert_variable() const;    // T -> T^-1
  Scalar eval(const Scalar& t) const;     // t must be a unit if negative degrees occur
  Scalar eval_at_one() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return a.add(b); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a.sub(b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return a.mul(b); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  std::map<long, Scalar> c_;
  BackendConfig cfg_;
};

// Two-variable Laurent polynomials in T1, T2 (elements of F[T1^, T2^]).
class LaurentPoly2 {
 public:
  using Key = std::pair<long, long>;
  explicit LaurentPoly2(const BackendConfig& cfg) : cfg_(cfg) {}

  const BackendConfig& config() const { return cfg_; }
  const std::map<Key, Scalar>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(long i, long j) const;
  void set(long i, long j, const Scalar& c);

  LaurentPoly2 add(const LaurentPoly2& o) const;
  LaurentPoly2 sub(const LaurentPoly2& o) const;
  LaurentPoly2 mul(const LaurentPoly2& o) const;
  LaurentPoly2 scale(const Scalar& s) const;
  LaurentPoly2 neg() const;
  Scalar eval(const Scalar& t1, const Scalar& t2) const;

  // embed a one-variable polynomial as a polynomial in T1 or T2
  static LaurentPoly2 lift(const LaurentPoly& g, int which_var);
  // sum out one variable at T = 1 (the counit in that slot)
  LaurentPoly collapse_var(int which_var) const;

  friend LaurentPoly2 operator+(const LaurentPoly2& a, const LaurentPoly2& b) { return a.add(b); }
  friend LaurentPoly2 operator-(const LaurentPoly2& a, const LaurentPoly2& b) { return a.sub(b); }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) { return a.mul(b); }
  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

 private:
  std::map<Key, Scalar> c_;
  BackendConfig cfg_;
};

// Finite sums sum_i T^i (x) v_i with v_i in F^r.
class LaurentVector {
 public:
  LaurentVector(const BackendConfig& cfg, std::size_t dim) : cfg_(cfg), dim_(dim) {}

  const BackendConfig& config() const { return cfg_; }
  std::size_t dim() const { return dim_; }
  const std::map<long, std::vector<Scalar>>& terms() const { return c_; }
  std::vector<Scalar> component(long deg) const;  // zero vector if absent
  void set(long deg, std::vector<Scalar> v);      // prunes zero vectors

  friend bool operator==(const LaurentVector& a, const LaurentVector& b);

 private:
  std::map<long, std::vector<Scalar>> c_;
  BackendConfig cfg_;
  std::size_t dim_;
};

// binomial(i, n) for any integer i, n >= 0 (falling factorial over n!)
mpz_class binomial_z(long i, long n);
Scalar binomial_scalar(const BackendConfig& cfg, long i, long n);

// D^[n]: sum b_i T^i  ->  sum binom(i,n) b_i T^{i-n}
LaurentPoly divided_power(const LaurentPoly& g, long n);

// L_n(g) = f^n * sum_i binom(i,n) b_i = f^n (D^[n]g)(1)
Scalar l_functional(const LaurentPoly& g, long n, const BackendConfig& cfg);

// componentwise L_n on a vector-valued element
std::vector<Scalar> bold_l(const LaurentVector& x, long n, const BackendConfig& cfg);

// c_n = (D^[n]h)(1) for h supported in degrees >= 0; h = sum c_n (T-1)^n
std::vector<Scalar> taylor_coefficients(const LaurentPoly& h);

// g = T^{-m} * sum_n coeffs[n] * ((T-1)/f)^n, all coeffs integral
struct GeneratorExpression {
  long m = 0;
  std::vector<Scalar> coeffs;
};

struct MembershipWitness {
  long n;
  Scalar value;  // the offending L_n, not integral
};

struct MembershipVerdict {
  bool member = false;
  std::optional<MembershipWitness> witness;       // set on failure
  std::optional<GeneratorExpression> expression;  // set on S_k success
};

// stopping bound: checking L_n for n < bound decides membership
long s_membership_bound(const LaurentPoly& g, const BackendConfig& cfg);

MembershipVerdict s_membership(const LaurentPoly& g, const BackendConfig& cfg);

// g must be a member; throws arithmetic_error with the witness otherwise.
// m is minimal with T^m g polynomial in T.
GeneratorExpression express_in_generators(const LaurentPoly& g, const BackendConfig& cfg);

LaurentPoly expand_generator_expression(const BackendConfig& cfg,
                                        const GeneratorExpression& ex);

// membership in S_k (x) S_k inside F[T1^, T2^]
MembershipVerdict s_tensor_membership(const LaurentPoly2& x, const BackendConfig& cfg);

// the k -> infinity limit ring: only L_0 = evaluation at 1 must be integral
bool s_infinity_membership(const LaurentPoly& g);

// text form: terms "c*T^i" joined with +/-; parse(format(g)) == g
std::string format_laurent(const LaurentPoly& g);
LaurentPoly parse_laurent(std::string_view text, const BackendConfig& cfg);
std::string format_laurent2(const LaurentPoly2& g);
LaurentPoly2 parse_laurent2(std::string_view text, const BackendConfig& cfg);

// deterministic sample helpers (used by the self-test suites)
Scalar sample_integral_scalar(const BackendConfig& cfg, std::mt19937_64& rng, long bound);
Scalar sample_scalar(const BackendConfig& cfg, std::mt19937_64& rng);
LaurentPoly sample_laurent(const BackendConfig& cfg, std::mt19937_64& rng,
                           long max_abs_degree, long max_terms);
// member of S_k by construction: T^{-m} sum a_n ((T-1)/f)^n
LaurentPoly sample_s_member(const BackendConfig& cfg, std::mt19937_64& rng,
                            long max_m, long max_n);

}  // namespace ogm
