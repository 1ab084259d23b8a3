#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ogm/laurent.hpp"
#include "ogm/scalars.hpp"

using namespace ogm;

namespace {

BackendConfig padic(long p, long k) {
  BackendConfig cfg;
  cfg.kind = BackendKind::RationalPadic;
  cfg.p = p;
  cfg.k = k;
  return cfg;
}

BackendConfig char0(long k) {
  BackendConfig cfg;
  cfg.kind = BackendKind::RatFuncChar0;
  cfg.k = k;
  return cfg;
}

BackendConfig fq(long q, long k) {
  BackendConfig cfg;
  cfg.kind = BackendKind::RatFuncFq;
  cfg.q = q;
  cfg.k = k;
  return cfg;
}

}  // namespace

TEST_CASE("padic valuations and field arithmetic") {
  BackendConfig cfg = padic(2, 1);
  Scalar x = parse_scalar("3/4", cfg);
  CHECK(x.val().value() == -2);
  CHECK(!x.is_integral());
  CHECK((x * Scalar::from_integer(cfg, 4)).is_integral());
  CHECK(parse_scalar("12", cfg).val().value() == 2);
  CHECK(Scalar::zero(cfg).val().is_infinite());
  CHECK((x - x).is_zero());
  CHECK((x * x.inv()).is_one());
  CHECK(x.pow(3) == parse_scalar("27/64", cfg));
  CHECK(x.pow(-2) == parse_scalar("16/9", cfg));
  CHECK(x.pow(0).is_one());
  CHECK(Scalar::uniformizer(cfg) == Scalar::from_integer(cfg, 2));
  CHECK(Scalar::f_element(padic(2, 3)) == Scalar::from_integer(cfg, 8));
}

TEST_CASE("padic residues, units and congruences") {
  BackendConfig cfg = padic(3, 1);
  Scalar x = parse_scalar("14", cfg);
  CHECK(x.residue_mod(2) == parse_scalar("5", cfg));
  CHECK(x.congruent_mod(parse_scalar("5", cfg), 2));
  CHECK(!x.congruent_mod(parse_scalar("5", cfg), 3));
  Scalar z = parse_scalar("18", cfg);
  CHECK(z.val().value() == 2);
  CHECK(z.unit_part() == parse_scalar("2", cfg));
  CHECK(z == Scalar::uniformizer(cfg).pow(2) * z.unit_part());
  // 1/2 is a 3-adic integer; 2*5 = 10 = 1 mod 9
  CHECK(parse_scalar("1/2", cfg).residue_mod(2) == parse_scalar("5", cfg));
  CHECK(parse_scalar("1/2", cfg).is_integral());
  CHECK(parse_scalar("1/3", cfg).val().value() == -1);
}

TEST_CASE("rational function field in characteristic zero") {
  BackendConfig cfg = char0(1);
  Scalar x = parse_scalar("(e^2+e^3)/2", cfg);
  CHECK(x.val().value() == 2);
  CHECK(x.unit_part() == parse_scalar("(1+e)/2", cfg));
  Scalar y = parse_scalar("e/(1-e)", cfg);
  CHECK(y.val().value() == 1);
  CHECK(y * parse_scalar("1-e", cfg) == Scalar::uniformizer(cfg));
  // geometric-series residue: e/(1-e) = e + e^2 + e^3 + ... mod e^4
  CHECK(y.residue_mod(4) == parse_scalar("e+e^2+e^3", cfg));
  CHECK(y.congruent_mod(parse_scalar("e+e^2+e^3", cfg), 4));
}

TEST_CASE("rational function field over F_q") {
  BackendConfig cfg = fq(3, 1);
  CHECK(parse_scalar("1/2", cfg) == Scalar::from_integer(cfg, 2));
  CHECK(Scalar::from_integer(cfg, 3).is_zero());
  CHECK(Scalar::from_integer(cfg, -1) == Scalar::from_integer(cfg, 2));
  Scalar x = parse_scalar("e/(1+e)", cfg);
  CHECK(x.val().value() == 1);
  CHECK(x * parse_scalar("1+e", cfg) == Scalar::uniformizer(cfg));
  // denominators carrying the field characteristic do not embed
  CHECK_THROWS(Scalar::from_mpq(cfg, mpq_class(1, 3)));
}

TEST_CASE("backend validation rejects bad configurations") {
  BackendConfig composite = fq(6, 1);
  CHECK_THROWS(composite.validate());
  BackendConfig nop = padic(0, 1);
  CHECK_THROWS(nop.validate());
  BackendConfig nonprime = padic(9, 1);
  CHECK_THROWS(nonprime.validate());
  BackendConfig negk = padic(2, -1);
  CHECK_THROWS(negk.validate());
  CHECK_NOTHROW(padic(2, 0).validate());
  CHECK_NOTHROW(char0(0).validate());
}

TEST_CASE("scalar text round trips") {
  const BackendConfig cfgs[] = {padic(2, 1), padic(5, 2), char0(1), fq(3, 1)};
  std::mt19937_64 rng(13);
  for (const BackendConfig& cfg : cfgs) {
    for (int i = 0; i < 50; ++i) {
      Scalar x = sample_scalar(cfg, rng);
      CHECK(parse_scalar(format_scalar(x), cfg) == x);
    }
  }
  // the U+2212 minus sign is accepted everywhere the ASCII one is
  BackendConfig cfg = padic(2, 1);
  CHECK(parse_scalar("−3/4", cfg) == parse_scalar("-3/4", cfg));
  CHECK(parse_scalar("5 − 2", cfg) == parse_scalar("3", cfg));
}
