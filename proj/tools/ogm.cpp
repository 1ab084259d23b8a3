#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ogm/json_io.hpp"
#include "ogm/selftest.hpp"

using namespace ogm;

namespace {

struct BackendOpts {
  std::string backend = "rational-padic";
  long p = 2;
  long q = 2;
  long k = 1;
};

void add_backend_flags(CLI::App* c, BackendOpts& o) {
  c->add_option("--backend", o.backend,
                "rational-padic | ratfunc-char0 | ratfunc-fq")
      ->check(CLI::IsMember({"rational-padic", "ratfunc-char0", "ratfunc-fq"}));
  c->add_option("--p", o.p, "residue characteristic (rational-padic)");
  c->add_option("--q", o.q, "field size, prime (ratfunc-fq)");
  c->add_option("--k", o.k, "level: f = pi^k");
}

BackendConfig make_backend(const BackendOpts& o) {
  BackendConfig cfg;
  cfg.kind = o.backend == "rational-padic"  ? BackendKind::RationalPadic
             : o.backend == "ratfunc-char0" ? BackendKind::RatFuncChar0
                                            : BackendKind::RatFuncFq;
  cfg.p = o.p;
  cfg.q = o.q;
  cfg.k = o.k;
  cfg.validate();
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

void emit(const Json& j, const std::string& out_path) {
  std::string text = j.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw precondition_error("cannot write '" + out_path + "'");
  out << text;
}

Json parse_input(const std::string& path) { return Json::parse(read_file(path)); }

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key))
    throw parse_error(std::string("missing key '") + key + "'", 0);
  return j.at(key);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hopf-algebra, lattice and comodule toolkit over a DVR"};
  app.require_subcommand(1);
  int rc = 0;
  std::string out_path;

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  // membership
  BackendOpts mem_b;
  std::string mem_laurent, mem_space = "sk";
  auto* mem = app.add_subcommand(
      "membership", "decide membership in S_k, S_k (x) S_k, or the limit ring");
  add_backend_flags(mem, mem_b);
  add_out(mem);
  mem->add_option("--laurent", mem_laurent, "element, e.g. \"(T-1)/2\" or \"T1*T2\"")
      ->required();
  mem->add_option("--space", mem_space, "sk (default) | tensor | sinf")
      ->check(CLI::IsMember({"sk", "tensor", "sinf"}));
  mem->callback([&] {
    BackendConfig cfg = make_backend(mem_b);
    MembershipVerdict v;
    if (mem_space == "tensor") {
      v = s_tensor_membership(parse_laurent2(mem_laurent, cfg), cfg);
    } else if (mem_space == "sinf") {
      LaurentPoly g = parse_laurent(mem_laurent, cfg);
      v.member = s_infinity_membership(g);
      if (!v.member) v.witness = MembershipWitness{0, l_functional(g, 0, cfg)};
    } else {
      v = s_membership(parse_laurent(mem_laurent, cfg), cfg);
    }
    emit(membership_to_json(v), out_path);
    rc = v.member ? 0 : 1;
  });

  // express
  BackendOpts ex_b;
  std::string ex_laurent;
  auto* ex = app.add_subcommand("express",
                                "write a member as T^-m * sum a_n ((T-1)/f)^n");
  add_backend_flags(ex, ex_b);
  add_out(ex);
  ex->add_option("--laurent", ex_laurent, "element of S_k")->required();
  ex->callback([&] {
    BackendConfig cfg = make_backend(ex_b);
    MembershipVerdict v = s_membership(parse_laurent(ex_laurent, cfg), cfg);
    if (!v.member) {
      emit(membership_to_json(v), out_path);
      rc = 1;
      return;
    }
    emit(expression_to_json(*v.expression), out_path);
  });

  // hopf-verify
  BackendOpts hv_b;
  long hv_samples = 50;
  unsigned long hv_seed = 42;
  auto* hv = app.add_subcommand("hopf-verify",
                                "check the Hopf axioms on generators and samples");
  add_backend_flags(hv, hv_b);
  add_out(hv);
  hv->add_option("--samples", hv_samples, "random members to draw (default 50)");
  hv->add_option("--seed", hv_seed, "sample seed (default 42)");
  hv->callback([&] {
    HopfReport rep = verify_hopf_axioms(make_backend(hv_b), hv_samples, hv_seed);
    emit(hopf_report_to_json(rep), out_path);
    rc = rep.all_pass ? 0 : 1;
  });

  // admissible
  BackendOpts ad_b;
  std::string ad_in;
  auto* ad = app.add_subcommand("admissible",
                                "decide C_n-stability of a graded pair");
  add_backend_flags(ad, ad_b);
  add_out(ad);
  ad->add_option("--in", ad_in, "pair file: {\"degrees\": [...], \"basis\": [[...]]}")
      ->required();
  ad->callback([&] {
    BackendConfig cfg = make_backend(ad_b);
    auto [v, m] = pair_from_json(parse_input(ad_in), cfg);
    AdmissibilityVerdict av = admissible(v, m, cfg);
    emit(admissibility_to_json(av), out_path);
    rc = av.admissible ? 0 : 1;
  });

  // comodule
  auto* co = app.add_subcommand("comodule", "build, verify and use comodules");
  co->require_subcommand(1);
  BackendOpts co_b;
  std::string co_in;
  auto add_co_common = [&](CLI::App* c, const char* in_help) {
    add_backend_flags(c, co_b);
    add_out(c);
    c->add_option("--in", co_in, in_help)->required();
  };

  auto emit_comodule = [&](bool with_entries) {
    BackendConfig cfg = make_backend(co_b);
    auto [v, m] = pair_from_json(parse_input(co_in), cfg);
    try {
      ComoduleMatrix cm = build_comodule(v, m, cfg);
      Json j = comodule_to_json(cm, verify_comodule(cm));
      if (!with_entries) {
        j.erase("entries");
        j.erase("basis");
      }
      emit(j, out_path);
    } catch (const non_admissible_error& e) {
      emit(non_admissible_to_json(e.detail()), out_path);
      rc = 1;
    }
  };

  auto* cob = co->add_subcommand("build", "construct the coaction matrix");
  add_co_common(cob, "pair file: {\"degrees\": [...], \"basis\": [[...]]}");
  cob->callback([&] { emit_comodule(true); });

  auto* cov = co->add_subcommand("verify", "re-check the comodule axioms");
  add_co_common(cov, "pair file: {\"degrees\": [...], \"basis\": [[...]]}");
  cov->callback([&] { emit_comodule(false); });

  auto* coa = co->add_subcommand("act", "evaluate the point action");
  add_co_common(coa, "file: {\"degrees\", \"basis\", \"point\": {\"t\",\"x\",\"ring\"}}");
  coa->callback([&] {
    BackendConfig cfg = make_backend(co_b);
    Json j = parse_input(co_in);
    auto [v, m] = pair_from_json(j, cfg);
    GPoint pt = point_from_json(field(j, "point"), cfg);
    try {
      ComoduleMatrix cm = build_comodule(v, m, cfg);
      Json out;
      out["matrix"] = matrix_to_json(point_action(cm, pt));
      emit(out, out_path);
    } catch (const non_admissible_error& e) {
      emit(non_admissible_to_json(e.detail()), out_path);
      rc = 1;
    }
  });

  auto* coq = co->add_subcommand("quotient", "torsion comodule of an injective morphism");
  add_co_common(coq, "file: {\"source\": pair, \"target\": pair, \"map\": [[...]]}");
  coq->callback([&] {
    BackendConfig cfg = make_backend(co_b);
    Json j = parse_input(co_in);
    auto [v, m] = pair_from_json(field(j, "source"), cfg);
    auto [vp, mp] = pair_from_json(field(j, "target"), cfg);
    Matrix phi = matrix_from_json(field(j, "map"), cfg);
    MorphismVerdict mv = morphism_check(phi, v, m, vp, mp);
    if (!mv.accepted) {
      emit(morphism_to_json(mv), out_path);
      rc = 1;
      return;
    }
    TorsionComodule tc = quotient_comodule(phi, v, m, vp, mp);
    TorsionReport rep = verify_torsion_comodule(tc);
    emit(torsion_to_json(tc, rep), out_path);
    rc = rep.all_pass() ? 0 : 1;
  });

  // springer
  auto* sp = app.add_subcommand("springer", "stable lattices in a valuation window");
  sp->require_subcommand(1);
  std::vector<long> sp_degrees;
  long sp_a = 0, sp_q = 2, sp_k = 1, sp_index = 0, sp_ceiling = 1000000;
  std::vector<long> sp_qs = {2, 3, 5, 7};
  std::vector<CLI::Option*> sp_index_opts;  // one per subcommand
  auto add_sp_common = [&](CLI::App* c) {
    add_out(c);
    c->add_option("--degrees", sp_degrees, "grading, e.g. 0,1")
        ->required()
        ->delimiter(',');
    c->add_option("--a", sp_a, "window radius (default 0)");
    c->add_option("--k", sp_k, "level: f = e^k (default 1)");
    c->add_option("--ceiling", sp_ceiling, "candidate-count guard (default 10^6)");
    sp_index_opts.push_back(c->add_option("--index", sp_index, "keep only this stratum"));
  };
  auto make_spec = [&] {
    WindowSpec spec;
    spec.degrees = sp_degrees;
    spec.k = sp_k;
    spec.a = sp_a;
    spec.q = sp_q;
    spec.ceiling = sp_ceiling;
    for (const CLI::Option* o : sp_index_opts)
      if (o->count() > 0) spec.index_constraint = sp_index;
    spec.validate();
    return spec;
  };

  auto* spe = sp->add_subcommand("enum", "list the stable lattices");
  add_sp_common(spe);
  spe->add_option("--q", sp_q, "field size, prime (default 2)");
  spe->callback([&] {
    WindowSpec spec = make_spec();
    Json out;
    out["spec"] = window_to_json(spec);
    Json set = stable_set_to_json(enumerate_stable_lattices(spec));
    out["strata"] = set["strata"];
    out["lattices"] = set["lattices"];
    emit(out, out_path);
  });

  auto* spc = sp->add_subcommand("count", "count per relative-index stratum");
  add_sp_common(spc);
  spc->add_option("--q", sp_q, "field size, prime (default 2)");
  spc->callback([&] {
    WindowSpec spec = make_spec();
    Json out;
    out["spec"] = window_to_json(spec);
    out["strata"] = strata_to_json(count_stable_lattices(spec));
    emit(out, out_path);
  });

  auto* spp = sp->add_subcommand("polyfit", "fit stratum counts to polynomials in q");
  add_sp_common(spp);
  spp->add_option("--qs", sp_qs, "primes to sample (default 2,3,5,7)")->delimiter(',');
  spp->callback([&] {
    WindowSpec tmpl = make_spec();
    PolyFitReport rep = polynomiality_check(tmpl, sp_qs);
    Json out;
    out["spec"] = window_to_json(tmpl);
    out["spec"].erase("q");  // per-point, listed under "qs"
    Json fit = polyfit_to_json(rep);
    for (auto& kv : fit.items()) out[kv.key()] = kv.value();
    emit(out, out_path);
    rc = rep.polynomial ? 0 : 1;
  });

  // selftest
  unsigned long st_seed = 42;
  std::string st_suite;
  auto* st = app.add_subcommand("selftest", "run the property suites");
  add_out(st);
  st->add_option("--seed", st_seed, "suite seed (default 42)");
  CLI::Option* st_suite_opt =
      st->add_option("--suite", st_suite, "run a single suite by name");
  st->callback([&] {
    std::optional<std::string> suite;
    if (st_suite_opt->count() > 0) suite = st_suite;
    SelfTestReport rep = run_selftest(st_seed, suite);
    Json out;
    out["seed"] = rep.seed;
    Json suites = Json::array();
    for (const SuiteResult& s : rep.suites) {
      Json r;
      r["name"] = s.name;
      r["pass"] = s.pass;
      r["cases"] = s.cases;
      r["failures"] = s.failures;
      suites.push_back(std::move(r));
    }
    out["suites"] = std::move(suites);
    out["all_pass"] = rep.all_pass();
    emit(out, out_path);
    rc = rep.all_pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "ogm: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
