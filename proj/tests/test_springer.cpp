#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "ogm/springer.hpp"

using namespace ogm;

namespace {

WindowSpec mkspec(std::vector<long> degrees, long k, long a, long q) {
  WindowSpec spec;
  spec.degrees = std::move(degrees);
  spec.k = k;
  spec.a = a;
  spec.q = q;
  return spec;
}

}  // namespace

TEST_CASE("rank one windows hold one lattice per level") {
  for (long q : {2L, 5L}) {
    for (long a = 0; a <= 3; ++a) {
      StableLatticeSet set = enumerate_stable_lattices(mkspec({3}, 1, a, q));
      CHECK(set.total() == 2 * a + 1);
      CHECK((long)set.lattices.size() == 2 * a + 1);
      for (const auto& [index, count] : set.strata) {
        CHECK(count == 1);
        CHECK(index >= -a);
        CHECK(index <= a);
      }
    }
  }
}

TEST_CASE("two-line window counts") {
  // degrees (0,1), k=1, a=1: strata 1, q+1, 2q+1, q+1, 1
  const std::pair<long, long> totals[] = {{2, 13}, {3, 17}, {5, 25}, {7, 33}};
  for (auto [q, total] : totals) {
    StableLatticeSet set = enumerate_stable_lattices(mkspec({0, 1}, 1, 1, q));
    CHECK(set.total() == total);
    CHECK(set.strata.at(-2) == 1);
    CHECK(set.strata.at(-1) == q + 1);
    CHECK(set.strata.at(0) == 2 * q + 1);
    CHECK(set.strata.at(1) == q + 1);
    CHECK(set.strata.at(2) == 1);
    // shifting both degrees does not change the counts
    StableLatticeSet shifted = enumerate_stable_lattices(mkspec({1, 2}, 1, 1, q));
    CHECK(shifted.strata == set.strata);
  }
}

TEST_CASE("window size and the candidate estimate") {
  WindowSpec spec = mkspec({0, 1}, 1, 1, 3);
  CHECK(estimate_candidates(spec) == 3 * (1 + 3 + 9));
  // tight level: stability is automatic once v(C_n) clears the window
  StableLatticeSet frozen = enumerate_stable_lattices(mkspec({0, 1}, 2, 1, 3));
  CHECK(frozen.total() ==
        (long)window_lattices_by_submodule_search(mkspec({0, 1}, 2, 1, 3)).size());
  CHECK(frozen.total() == 23);
  // trivial window: only the standard lattice
  StableLatticeSet point = enumerate_stable_lattices(mkspec({0, 1}, 1, 0, 5));
  CHECK(point.total() == 1);
  CHECK(point.lattices[0] == Lattice::standard(point.lattices[0].config(), 2));
}

TEST_CASE("enumeration agrees with the submodule oracle") {
  WindowSpec spec = mkspec({0, 1}, 1, 1, 2);
  std::vector<Lattice> window = window_lattices_by_submodule_search(spec);
  CHECK((long)window.size() == 2 * 2 + 3 * 2 + 5);  // q^2 + 3q + 5
  GradedSpace v{spec.degrees};
  BackendConfig cfg = spec.backend();
  std::set<std::string> expect, got;
  auto key = [](const Lattice& m) {
    std::string s;
    for (std::size_t i = 0; i < m.rank(); ++i)
      for (std::size_t j = 0; j < m.rank(); ++j) s += m.basis().at(i, j).str() + ";";
    return s;
  };
  for (const Lattice& m : window)
    if (admissible(v, m, cfg).admissible) expect.insert(key(m));
  for (const Lattice& m : enumerate_stable_lattices(spec).lattices)
    got.insert(key(m));
  CHECK(got == expect);
}

TEST_CASE("stratum constraint and monotone growth") {
  StableLatticeSet one = enumerate_stable_lattices([&] {
    WindowSpec spec = mkspec({0, 1}, 1, 1, 3);
    spec.index_constraint = -1;
    return spec;
  }());
  CHECK(one.strata.size() == 1);
  CHECK(one.strata.at(-1) == 4);
  for (const Lattice& m : one.lattices) {
    long idx = 0;
    for (long e : m.pivot_exponents()) idx += e;
    CHECK(idx == -1);
  }
  // a larger window sees every lattice of the smaller one
  long t1 = enumerate_stable_lattices(mkspec({0, 1}, 1, 1, 2)).total();
  long t2 = enumerate_stable_lattices(mkspec({0, 1}, 1, 2, 2)).total();
  CHECK(t1 < t2);
}

TEST_CASE("counts interpolate to cell-like polynomials") {
  PolyFitReport rep = polynomiality_check(mkspec({0, 1}, 1, 1, 2), {2, 3, 5, 7});
  CHECK(rep.polynomial);
  REQUIRE(rep.strata.size() == 5);
  CHECK(format_polynomial(rep.strata[0].poly) == "1");
  CHECK(format_polynomial(rep.strata[1].poly) == "q+1");
  CHECK(format_polynomial(rep.strata[2].poly) == "2*q+1");
  CHECK(format_polynomial(rep.strata[3].poly) == "q+1");
  CHECK(format_polynomial(rep.strata[4].poly) == "1");
  for (const StratumFit& sf : rep.strata) {
    CHECK(sf.matched);
    CHECK(sf.affine_cell_shape);
  }
  // rank one: constant polynomial at every level
  PolyFitReport r1 = polynomiality_check(mkspec({4}, 1, 2, 2), {2, 3, 5});
  CHECK(r1.polynomial);
  for (const StratumFit& sf : r1.strata)
    CHECK(format_polynomial(sf.poly) == "1");
}

TEST_CASE("fit failures are reported, not repaired") {
  std::vector<std::pair<long, mpz_class>> pts = {
      {2, mpz_class(7)}, {3, mpz_class(13)}, {5, mpz_class(31)}, {7, mpz_class(58)}};
  CHECK(!fit_counts(pts, 2).matched);
  pts[3].second = 57;  // q^2 + q + 1
  CountFit fit = fit_counts(pts, 2);
  CHECK(fit.matched);
  CHECK(format_polynomial(fit.coeffs) == "q^2+q+1");
  CHECK_THROWS_AS(fit_counts(pts, 5), precondition_error);
}

TEST_CASE("guards") {
  WindowSpec spec = mkspec({0, 1, 2}, 1, 2, 7);
  spec.ceiling = 10;
  CHECK_THROWS_AS(enumerate_stable_lattices(spec), unsupported_error);
  CHECK_THROWS(mkspec({0, 1}, 1, -1, 2).validate());
  CHECK_THROWS(mkspec({0, 1}, 1, 1, 6).validate());
  CHECK_THROWS(mkspec({}, 1, 1, 2).validate());
}
