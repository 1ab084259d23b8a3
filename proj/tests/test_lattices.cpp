#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ogm/lattices.hpp"

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

Matrix from_rows(const BackendConfig& cfg,
                 std::vector<std::vector<const char*>> rows) {
  Matrix m(cfg, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = parse_scalar(rows[i][j], cfg);
  return m;
}

std::vector<Scalar> vec(const BackendConfig& cfg, std::vector<const char*> xs) {
  std::vector<Scalar> v;
  for (const char* x : xs) v.push_back(parse_scalar(x, cfg));
  return v;
}

}  // namespace

TEST_CASE("canonical form does not depend on the presenting basis") {
  BackendConfig cfg = padic(2, 1);
  Matrix b = from_rows(cfg, {{"2", "1"}, {"0", "1"}});
  Matrix u = from_rows(cfg, {{"1", "3"}, {"0", "1"}});   // unimodular
  Matrix w = from_rows(cfg, {{"3", "2"}, {"1", "1"}});   // det -1
  CHECK(Lattice::from_basis(b) == Lattice::from_basis(b.mul(u)));
  CHECK(Lattice::from_basis(b) == Lattice::from_basis(b.mul(w)));
  // redundant generators collapse to the same lattice
  Matrix wide = from_rows(cfg, {{"2", "1", "3"}, {"0", "1", "1"}});
  CHECK(Lattice::from_basis(wide) == Lattice::from_basis(b));
  CHECK(Lattice::standard(cfg, 3).basis() == Matrix::identity(cfg, 3));
  Matrix d = from_rows(cfg, {{"4", "0"}, {"0", "1/2"}});
  CHECK(Lattice::from_basis(d).pivot_exponents() == std::vector<long>{2, -1});
  // rank-deficient generators are rejected
  Matrix sing = from_rows(cfg, {{"1", "2"}, {"2", "4"}});
  CHECK_THROWS(Lattice::from_basis(sing));
}

TEST_CASE("membership, containment, sum, intersection, index, dual") {
  BackendConfig cfg = padic(2, 1);
  Lattice m1 = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"0", "4"}}));
  Lattice m2 = Lattice::from_basis(from_rows(cfg, {{"4", "0"}, {"0", "1"}}));
  CHECK(lattice_membership(vec(cfg, {"2", "4"}), m1));
  CHECK(!lattice_membership(vec(cfg, {"1", "1"}), m1));
  Lattice sum = lattice_sum(m1, m2);
  Lattice inter = lattice_intersect(m1, m2);
  CHECK(sum == Lattice::standard(cfg, 2));
  CHECK(inter == Lattice::from_basis(from_rows(cfg, {{"4", "0"}, {"0", "4"}})));
  CHECK(lattice_contains(sum, m1));
  CHECK(lattice_contains(m1, inter));
  CHECK(!lattice_contains(m1, m2));
  CHECK(lattice_index(sum, m1) == 2);
  CHECK(lattice_index(m1, inter) == 2);
  CHECK(lattice_index(sum, inter) == 4);
  CHECK(lattice_dual(lattice_dual(m1)) == m1);
  CHECK(lattice_dual(Lattice::from_basis(from_rows(cfg, {{"8"}}))) ==
        Lattice::from_basis(from_rows(cfg, {{"1/8"}})));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Lattice m = sample_lattice(cfg, rng, 3, 2);
    CHECK(lattice_dual(lattice_dual(m)) == m);
    CHECK(lattice_sum(m, m) == m);
    CHECK(lattice_intersect(m, m) == m);
  }
}

TEST_CASE("degree operators are binomial diagonals") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Matrix c1 = c_operator(v, 1, cfg);
  CHECK(c1.at(0, 0) == parse_scalar("3", cfg));
  CHECK(c1.at(1, 1) == parse_scalar("6", cfg));
  CHECK(c1.at(0, 1).is_zero());
  Matrix c2 = c_operator(v, 2, cfg);
  CHECK(c2.at(0, 0).is_zero());  // binom(1,2) = 0
  CHECK(c2.at(1, 1) == parse_scalar("9", cfg));
  CHECK(c_operator(v, 0, cfg) == Matrix::identity(cfg, 2));
  // negative degrees through the binomial extension
  GradedSpace w{{-2}};
  CHECK(c_operator(w, 2, cfg).at(0, 0) == parse_scalar("27", cfg));
}

TEST_CASE("conductor depth and the stability bound") {
  BackendConfig cfg = padic(3, 1);
  Lattice m = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));
  CHECK(conductor_depth(Lattice::standard(cfg, 2)) == 0);
  CHECK(conductor_depth(m) == 1);
  GradedSpace v{{1, 2}};
  CHECK(stability_bound(v, m, cfg) == 2);
  CHECK(stability_bound(v, m, padic(3, 2)) == 1);
  CHECK(stability_bound(v, m, char0(1)) == 1);
  CHECK_THROWS_AS(stability_bound(v, m, padic(3, 0)), unsupported_error);
  CHECK_THROWS_AS(stability_bound(v, m, fq(3, 0)), unsupported_error);
}

TEST_CASE("stability worked examples") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice good = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));
  Lattice bad = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "9"}}));
  AdmissibilityVerdict av = admissible(v, good, cfg);
  CHECK(av.admissible);
  av = admissible(v, bad, cfg);
  CHECK(!av.admissible);
  REQUIRE(av.witness.has_value());
  CHECK(av.witness->n == 1);
  // diagonal lattices are always stable
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    Matrix d(cfg, 3, 3);
    for (std::size_t j = 0; j < 3; ++j)
      d.at(j, j) = Scalar::uniformizer(cfg).pow((long)(rng() % 7) - 3);
    GradedSpace v3{{-1, 2, 4}};
    CHECK(admissible(v3, Lattice::from_basis(d), cfg).admissible);
  }
  // stability is a property of the homothety class
  Scalar pi = Scalar::uniformizer(cfg);
  for (int i = 0; i < 15; ++i) {
    Lattice m = sample_lattice(cfg, rng, 2, 2);
    Lattice mshift = Lattice::from_basis(m.basis().scale(pi));
    CHECK(admissible(v, m, cfg).admissible ==
          admissible(v, mshift, cfg).admissible);
  }
}

TEST_CASE("stable hull") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice good = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));
  Lattice bad = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "9"}}));
  CHECK(admissible_hull(v, good, cfg) == good);
  CHECK(admissible_hull(v, bad, cfg) == good);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 15; ++i) {
    Lattice m = sample_lattice(cfg, rng, 3, 2);
    GradedSpace v3{{0, 1, 3}};
    Lattice h = admissible_hull(v3, m, cfg);
    CHECK(lattice_contains(h, m));
    CHECK(admissible(v3, h, cfg).admissible);
  }
}

TEST_CASE("sampling is deterministic and depth bounded") {
  BackendConfig cfg = padic(2, 1);
  std::mt19937_64 r1(8), r2(8);
  for (int i = 0; i < 10; ++i) {
    Lattice a = sample_lattice(cfg, r1, 3, 2);
    Lattice b = sample_lattice(cfg, r2, 3, 2);
    CHECK(a == b);
    for (long e : a.pivot_exponents()) {
      CHECK(e >= -2);
      CHECK(e <= 2);
    }
    for (std::size_t row = 0; row < 3; ++row)
      for (std::size_t col = 0; col < 3; ++col)
        CHECK(a.basis().at(row, col).val().at_least(-2));
  }
}
