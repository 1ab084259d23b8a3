#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ogm/json_io.hpp"

using namespace ogm;

namespace {

BackendConfig padic(long p, long k) {
  BackendConfig cfg;
  cfg.kind = BackendKind::RationalPadic;
  cfg.p = p;
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

TEST_CASE("backend descriptors") {
  BackendConfig cfg = padic(2, 1);
  CHECK(backend_to_json(cfg).dump() == R"({"backend":"rational-padic","p":2,"k":1})");
  CHECK(backend_from_json(backend_to_json(cfg)) == cfg);
  BackendConfig rf = fq(3, 2);
  CHECK(backend_from_json(backend_to_json(rf)) == rf);
  CHECK_THROWS_AS(backend_from_json(Json{{"backend", "nope"}}), parse_error);
  CHECK_THROWS_AS(backend_from_json(Json{{"backend", "ratfunc-fq"}, {"q", 6}, {"k", 1}}),
                  unsupported_error);
}

TEST_CASE("laurent documents") {
  BackendConfig cfg = padic(2, 1);
  LaurentPoly g = parse_laurent("T^2/2 - 3*T^-1", cfg);
  CHECK(laurent_from_json(laurent_to_json(g), cfg) == g);
  CHECK(laurent_to_json(g).dump() == R"({"coeffs":{"-1":"-3","2":"1/2"}})");
  CHECK(laurent_from_json(Json::parse(R"({"coeffs":{}})"), cfg).is_zero());
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"coeffs":{"x":"1"}})"), cfg),
                  parse_error);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"coeffs":{"1":"zz"}})"), cfg),
                  parse_error);
  LaurentPoly2 two = parse_laurent2("T1*T2 - T2^-3/4", cfg);
  CHECK(laurent2_from_json(laurent2_to_json(two), cfg) == two);
}

TEST_CASE("matrices and pairs") {
  BackendConfig cfg = padic(3, 1);
  Matrix m(cfg, 2, 2);
  m.at(0, 0) = parse_scalar("1", cfg);
  m.at(1, 0) = parse_scalar("1", cfg);
  m.at(1, 1) = parse_scalar("3", cfg);
  CHECK(matrix_to_json(m).dump() == R"([["1","1"],["0","3"]])");  // columns
  CHECK(matrix_from_json(matrix_to_json(m), cfg) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])"), cfg),
                  parse_error);
  GradedSpace v{{1, 2}};
  Lattice lat = Lattice::from_basis(m);
  Json pj = pair_to_json(v, lat);
  auto [v2, lat2] = pair_from_json(pj, cfg);
  CHECK(v2.degrees == v.degrees);
  CHECK(lat2 == lat);
}

TEST_CASE("points and windows") {
  BackendConfig cfg = padic(2, 1);
  GPoint pt = make_point(parse_scalar("3", cfg), parse_scalar("1", cfg),
                         RingTag::quotient(4), cfg);
  GPoint back = point_from_json(point_to_json(pt), cfg);
  CHECK(points_equal(pt, back));
  CHECK(point_to_json(pt)["ring"] == "O/pi^4");
  WindowSpec spec;
  spec.degrees = {0, 1};
  spec.k = 1;
  spec.a = 1;
  spec.q = 5;
  spec.index_constraint = -1;
  WindowSpec rt = window_from_json(window_to_json(spec));
  CHECK(rt.degrees == spec.degrees);
  CHECK(rt.q == 5);
  CHECK(rt.index_constraint == spec.index_constraint);
  Json wj = window_to_json(spec);
  wj.erase("index");
  CHECK(!window_from_json(wj).index_constraint.has_value());
}

TEST_CASE("verdict documents match the wire format") {
  BackendConfig cfg = padic(2, 1);
  MembershipVerdict v = s_membership(parse_laurent("(T-1)/4", cfg), cfg);
  CHECK(membership_to_json(v).dump() ==
        R"({"member":false,"witness":{"n":1,"value":"1/2"}})");
  MembershipVerdict ok = s_membership(parse_laurent("(T-1)/2", cfg), cfg);
  CHECK(membership_to_json(ok).dump() ==
        R"({"member":true,"expression":{"m":0,"coeffs":["0","1"]}})");
  GeneratorExpression ex = expression_from_json(expression_to_json(*ok.expression), cfg);
  CHECK(expand_generator_expression(cfg, ex) ==
        parse_laurent("(T-1)/2", cfg));
}

TEST_CASE("report shapes stay stable") {
  BackendConfig cfg = padic(3, 1);
  GradedSpace v{{1, 2}};
  Matrix b(cfg, 2, 2);
  b.at(0, 0) = parse_scalar("1", cfg);
  b.at(1, 0) = parse_scalar("1", cfg);
  b.at(1, 1) = parse_scalar("3", cfg);
  Lattice m = Lattice::from_basis(b);
  AdmissibilityVerdict av = admissible(v, m, cfg);
  CHECK(admissibility_to_json(av).dump() == R"({"admissible":true,"bound":2})");
  ComoduleMatrix cm = build_comodule(v, m, cfg);
  Json cj = comodule_to_json(cm, verify_comodule(cm));
  CHECK(cj["admissible"] == true);
  CHECK(cj["axioms"]["coassoc"] == "pass");
  CHECK(cj["entries"][1][0]["coeffs"]["1"] == "-1/3");
  HopfReport hr = verify_hopf_axioms(cfg, 5, 1);
  Json hj = hopf_report_to_json(hr);
  CHECK(hj["all_pass"] == true);
  CHECK(hj["checks"].size() == 5);
}
