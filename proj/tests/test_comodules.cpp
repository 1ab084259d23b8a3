#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ogm/comodules.hpp"

using namespace ogm;

namespace {

BackendConfig padic(long p, long k) {
  BackendConfig cfg;
  cfg.kind = BackendKind::RationalPadic;
  cfg.p = p;
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

}  // namespace

TEST_CASE("coaction matrix of the worked pair") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice m = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));
  ComoduleMatrix cm = build_comodule(v, m, cfg);
  REQUIRE(cm.rank() == 2);
  CHECK(cm.entries[0][0] == parse_laurent("T", cfg));
  CHECK(cm.entries[0][1].is_zero());
  CHECK(cm.entries[1][0] == parse_laurent("(T^2-T)/3", cfg));
  CHECK(cm.entries[1][1] == parse_laurent("T^2", cfg));
  ComoduleReport rep = verify_comodule(cm);
  CHECK(rep.all_pass());
  // the construction preserves the input pair
  CHECK(cm.space.degrees == v.degrees);
  CHECK(cm.lattice == m);
}

TEST_CASE("grouplike diagonal comodules") {
  BackendConfig cfg = padic(2, 2);
  GradedSpace v{{0, 2, 5}};
  ComoduleMatrix cm = build_comodule(v, Lattice::standard(cfg, 3), cfg);
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t j = 0; j < 3; ++j) {
      if (l == j)
        CHECK(cm.entries[l][j] ==
              LaurentPoly::monomial(cfg, v.degrees[j], Scalar::one(cfg)));
      else
        CHECK(cm.entries[l][j].is_zero());
    }
  CHECK(verify_comodule(cm).all_pass());
}

TEST_CASE("non-stable input fails with matching witnesses") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice bad = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "9"}}));
  try {
    build_comodule(v, bad, cfg);
    FAIL("construction should have thrown");
  } catch (const non_admissible_error& e) {
    const NonAdmissibleDetail& d = e.detail();
    REQUIRE(d.verdict.witness.has_value());
    CHECK(d.verdict.witness->n == 1);
    CHECK(d.entry.witness.n == 1);
    CHECK(d.entry.l == 1);
    CHECK(d.entry.j == 0);
    CHECK(d.entry.witness.value == parse_scalar("1/3", cfg));
  }
}

TEST_CASE("points act through the coaction") {
  BackendConfig cfg = padic(2, 1);
  GradedSpace v{{0, 2, 5}};
  ComoduleMatrix diag = build_comodule(v, Lattice::standard(cfg, 3), cfg);
  GPoint pt = make_point(parse_scalar("3", cfg), parse_scalar("1", cfg),
                         RingTag::ring_o(), cfg);
  Matrix rho = point_action(diag, pt);
  CHECK(rho.at(0, 0).is_one());
  CHECK(rho.at(1, 1) == parse_scalar("9", cfg));
  CHECK(rho.at(2, 2) == parse_scalar("243", cfg));
  CHECK(rho.at(1, 0).is_zero());

  BackendConfig c3 = padic(3, 1);
  GradedSpace w{{1, 2}};
  Lattice m = Lattice::from_basis(from_rows(c3, {{"1", "0"}, {"1", "3"}}));
  ComoduleMatrix cm = build_comodule(w, m, c3);
  GPoint p4 = make_point(parse_scalar("4", c3), parse_scalar("1", c3),
                         RingTag::ring_o(), c3);
  Matrix r4 = point_action(cm, p4);
  CHECK(r4 == from_rows(c3, {{"4", "0"}, {"4", "16"}}));
  CHECK(r4.is_integral());
  CHECK(point_action(cm, group_identity(c3, RingTag::ring_o())) ==
        Matrix::identity(c3, 2));
}

TEST_CASE("morphisms are graded lattice maps") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice m = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));
  MorphismVerdict mv = morphism_check(Matrix::identity(cfg, 2), v, m, v, m);
  CHECK(mv.accepted);
  // swapping the graded lines is not a morphism
  Matrix swap = from_rows(cfg, {{"0", "1"}, {"1", "0"}});
  mv = morphism_check(swap, v, m, v, m);
  CHECK(!mv.accepted);
  CHECK(!mv.graded);
  REQUIRE(mv.bad_entry.has_value());
  // scaling out of the target lattice is not a morphism
  GradedSpace w{{2, 2}};
  Matrix half = from_rows(cfg, {{"1/3", "0"}, {"0", "1"}});
  mv = morphism_check(half, w, Lattice::standard(cfg, 2), w,
                      Lattice::standard(cfg, 2));
  CHECK(!mv.accepted);
  CHECK(mv.graded);
  REQUIRE(mv.bad_column.has_value());
  CHECK(*mv.bad_column == 0);
  // accepted maps commute with the coactions
  ComoduleMatrix cm = build_comodule(v, m, cfg);
  CHECK(coaction_square_commutes(Matrix::identity(cfg, 2), cm, cm));
}

TEST_CASE("elementary divisors of a lattice map") {
  BackendConfig cfg = padic(3, 1);
  Matrix phi = from_rows(cfg, {{"1", "0"}, {"3", "9"}});
  SmithDecomposition snf = smith_normal_form(phi);
  CHECK(snf.exponents == std::vector<long>{0, 2});
  CHECK(snf.u.is_integral());
  CHECK(snf.u.det().is_unit());
  CHECK(smith_normal_form(Matrix::identity(cfg, 3)).exponents ==
        std::vector<long>{0, 0, 0});
}

TEST_CASE("torsion quotients") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Lattice m = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "3"}}));

  // multiplication by pi: quotient is (O/pi)^2
  Matrix phi = Matrix::identity(cfg, 2).scale(Scalar::uniformizer(cfg));
  TorsionComodule tc = quotient_comodule(phi, v, m, v, m);
  CHECK(tc.moduli == std::vector<long>{1, 1});
  CHECK(tc.length() == 2);
  CHECK(verify_torsion_comodule(tc).all_pass());

  // inclusion of 3M realized as the identity map between the two pairs
  Lattice src = Lattice::from_basis(phi.mul(m.basis()));
  TorsionComodule inc = quotient_comodule(Matrix::identity(cfg, 2), v, src, v, m);
  CHECK(inc.length() == 2);
  CHECK(verify_torsion_comodule(inc).all_pass());

  // a map with a trivial cyclic factor keeps it as modulus zero
  GradedSpace w{{1, 1}};
  Matrix d = from_rows(cfg, {{"1", "0"}, {"0", "9"}});
  TorsionComodule dz = quotient_comodule(d, w, Lattice::standard(cfg, 2), w,
                                         Lattice::standard(cfg, 2));
  CHECK(dz.moduli == std::vector<long>{0, 2});
  CHECK(dz.length() == 2);
  CHECK(verify_torsion_comodule(dz).all_pass());
}

TEST_CASE("any grading coacts for the limit ring") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  // fails stability at level one, but the limit ring has no such constraint
  Lattice bad = Lattice::from_basis(from_rows(cfg, {{"1", "0"}, {"1", "9"}}));
  CHECK(!admissible(v, bad, cfg).admissible);
  GradingReport rep = grading_comodule(bad, v);
  CHECK(rep.all_pass());
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    Lattice m = sample_lattice(cfg, rng, 3, 3);
    GradedSpace v3{{-2, 0, 3}};
    CHECK(grading_comodule(m, v3).all_pass());
  }
}
