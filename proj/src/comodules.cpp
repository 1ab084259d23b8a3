#include "ogm/comodules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ogm {

namespace {

std::string entry_tag(std::size_t l, std::size_t j) {
  return "(" + std::to_string(l) + "," + std::to_string(j) + ")";
}

// sum_l s_lj(T1) * s_ml(T2), the coefficient of m_mm in (id (x) Delta)Delta
LaurentPoly2 coassoc_rhs(const std::vector<std::vector<LaurentPoly>>& e,
                         std::size_t mm, std::size_t j, const BackendConfig& cfg) {
  LaurentPoly2 acc(cfg);
  for (std::size_t l = 0; l < e.size(); ++l)
    acc = acc.add(LaurentPoly2::lift(e[l][j], 1).mul(LaurentPoly2::lift(e[mm][l], 2)));
  return acc;
}

void check_counit_exact(const std::vector<std::vector<LaurentPoly>>& e,
                        const BackendConfig& cfg, bool& ok,
                        std::vector<std::string>& failures) {
  for (std::size_t l = 0; l < e.size(); ++l)
    for (std::size_t j = 0; j < e.size(); ++j) {
      Scalar expect = l == j ? Scalar::one(cfg) : Scalar::zero(cfg);
      if (!(counit(e[l][j]) == expect)) {
        ok = false;
        failures.push_back("counit of entry " + entry_tag(l, j) + " is " +
                           counit(e[l][j]).str());
      }
    }
}

void check_coassoc_exact(const std::vector<std::vector<LaurentPoly>>& e,
                         const BackendConfig& cfg, bool& ok,
                         std::vector<std::string>& failures) {
  for (std::size_t mm = 0; mm < e.size(); ++mm)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (!(comult(e[mm][j]) == coassoc_rhs(e, mm, j, cfg))) {
        ok = false;
        failures.push_back("coassociativity fails at " + entry_tag(mm, j));
      }
}

// representative of g modulo pi^a S: reduce the generator-expression
// coefficients to their canonical residues
LaurentPoly reduce_mod_pi_s(const LaurentPoly& g, long a, const BackendConfig& cfg) {
  if (a <= 0) return LaurentPoly(cfg);
  if (g.is_zero()) return g;
  GeneratorExpression ex = express_in_generators(g, cfg);
  for (auto& c : ex.coeffs) c = c.residue_mod(a);
  return expand_generator_expression(cfg, ex);
}

}  // namespace

std::vector<std::vector<LaurentPoly>> coaction_entries(const GradedSpace& v,
                                                       const Matrix& basis,
                                                       const BackendConfig& cfg) {
  std::size_t r = v.rank();
  if (basis.rows() != r || basis.cols() != r)
    throw precondition_error("basis size does not match the graded space");
  Matrix binv = basis.inverse();
  std::vector<std::vector<LaurentPoly>> e(r, std::vector<LaurentPoly>(r, LaurentPoly(cfg)));
  std::set<long> degs(v.degrees.begin(), v.degrees.end());
  for (long d : degs) {
    Matrix p(cfg, r, r);
    for (std::size_t j = 0; j < r; ++j)
      if (v.degrees[j] == d) p.at(j, j) = Scalar::one(cfg);
    Matrix md = binv.mul(p).mul(basis);
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t j = 0; j < r; ++j)
        if (!md.at(l, j).is_zero()) e[l][j].set(d, md.at(l, j));
  }
  return e;
}

ComoduleMatrix build_comodule(const GradedSpace& v, const Lattice& m,
                              const BackendConfig& cfg) {
  cfg.validate();
  if (v.rank() != m.rank())
    throw precondition_error("graded space and lattice rank mismatch");
  AdmissibilityVerdict av = admissible(v, m, cfg);
  auto entries = coaction_entries(v, m.basis(), cfg);
  std::size_t r = v.rank();

  std::optional<EntryWitness> worst;
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j) {
      MembershipVerdict mv = s_membership(entries[l][j], cfg);
      if (!mv.member && (!worst || mv.witness->n < worst->witness.n))
        worst = EntryWitness{l, j, *mv.witness};
    }

  if (!av.admissible) {
    if (!worst)
      throw std::logic_error("non-admissible lattice with integral coaction entries");
    std::ostringstream os;
    os << "lattice is not stable: C_" << av.witness->n
       << " moves a basis vector outside; coaction entry "
       << entry_tag(worst->l, worst->j) << " has L_" << worst->witness.n << " = "
       << worst->witness.value.str() << " outside O";
    throw non_admissible_error(os.str(), NonAdmissibleDetail{av, *worst});
  }
  if (worst)
    throw std::logic_error("admissible lattice with a non-integral coaction entry");

  // base-change re-check: the entry coefficients must reassemble the graded
  // projectors, B * coeff_d(sigma) * B^-1 = P_d
  std::set<long> degs(v.degrees.begin(), v.degrees.end());
  for (long d : degs) {
    Matrix cd(cfg, r, r);
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t j = 0; j < r; ++j) cd.at(l, j) = entries[l][j].coeff(d);
    Matrix back = m.basis().mul(cd).mul(m.basis().inverse());
    Matrix p(cfg, r, r);
    for (std::size_t j = 0; j < r; ++j)
      if (v.degrees[j] == d) p.at(j, j) = Scalar::one(cfg);
    if (!(back == p))
      throw std::logic_error("coaction entries do not reproduce the grading");
  }

  return ComoduleMatrix{v, m, cfg, std::move(entries)};
}

ComoduleReport verify_comodule(const ComoduleMatrix& cm) {
  ComoduleReport rep;
  std::size_t r = cm.rank();
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j) {
      MembershipVerdict mv = s_membership(cm.entries[l][j], cm.cfg);
      if (!mv.member) {
        rep.integrality = false;
        rep.failures.push_back("entry " + entry_tag(l, j) + " has L_" +
                               std::to_string(mv.witness->n) + " = " +
                               mv.witness->value.str() + " outside O");
      }
    }
  check_counit_exact(cm.entries, cm.cfg, rep.counit, rep.failures);
  check_coassoc_exact(cm.entries, cm.cfg, rep.coassoc, rep.failures);
  return rep;
}

Matrix point_action(const ComoduleMatrix& cm, const GPoint& pt) {
  if (pt.ring.kind == RingTag::F)
    throw precondition_error("point must be over O or O/pi^m");
  std::size_t r = cm.rank();
  Matrix rho(cm.cfg, r, r);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j) {
      XPresElement xe = from_t(cm.entries[l][j], cm.cfg);
      if (pt.ring.kind == RingTag::O) {
        Scalar val = eval_x(xe, pt.x);
        if (!val.is_integral())
          throw std::logic_error("coaction value left O at an O-point");
        rho.at(l, j) = val;
      } else {
        rho.at(l, j) = eval_x_mod(xe, pt.x, pt.ring.m);
      }
    }
  if (!rho.det().is_unit())
    throw std::logic_error("point action has non-unit determinant");
  return rho;
}

MorphismVerdict morphism_check(const Matrix& phi, const GradedSpace& v,
                               const Lattice& m, const GradedSpace& vp,
                               const Lattice& mp) {
  if (phi.rows() != vp.rank() || phi.cols() != v.rank())
    throw precondition_error("morphism shape does not match the pairs");
  MorphismVerdict out;
  for (std::size_t i = 0; i < phi.rows() && out.graded; ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (vp.degrees[i] != v.degrees[j] && !phi.at(i, j).is_zero()) {
        out.graded = false;
        out.bad_entry = {i, j};
        break;
      }
  for (std::size_t j = 0; j < m.rank(); ++j) {
    if (!lattice_membership(phi.apply(m.basis().col(j)), mp)) {
      out.maps_lattice = false;
      out.bad_column = j;
      break;
    }
  }
  out.accepted = out.graded && out.maps_lattice;
  if (out.accepted) {
    ComoduleMatrix src = build_comodule(v, m, phi.config());
    ComoduleMatrix dst = build_comodule(vp, mp, phi.config());
    if (!coaction_square_commutes(phi, src, dst))
      throw std::logic_error("accepted morphism fails to commute with the coactions");
  }
  return out;
}

bool coaction_square_commutes(const Matrix& phi, const ComoduleMatrix& src,
                              const ComoduleMatrix& dst) {
  const BackendConfig& cfg = src.cfg;
  Matrix big = dst.lattice.basis().inverse().mul(phi).mul(src.lattice.basis());
  if (!big.is_integral()) return false;
  std::size_t rs = src.rank(), rd = dst.rank();
  for (std::size_t i = 0; i < rd; ++i)
    for (std::size_t j = 0; j < rs; ++j) {
      LaurentPoly lhs(cfg), rhs(cfg);
      for (std::size_t l = 0; l < rs; ++l)
        lhs = lhs.add(src.entries[l][j].scale(big.at(i, l)));
      for (std::size_t l = 0; l < rd; ++l)
        rhs = rhs.add(dst.entries[i][l].scale(big.at(l, j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

SmithDecomposition smith_normal_form(const Matrix& phi) {
  if (phi.rows() != phi.cols()) throw precondition_error("matrix must be square");
  if (!phi.is_integral()) throw precondition_error("matrix must be integral");
  const BackendConfig& cfg = phi.config();
  std::size_t r = phi.rows();
  Matrix a = phi;
  Matrix u = Matrix::identity(cfg, r);

  for (std::size_t t = 0; t < r; ++t) {
    // pivot: least valuation in the trailing submatrix
    std::size_t pi_ = t, pj = t;
    Valuation best = Valuation::infinite();
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < r; ++j) {
        Valuation val = a.at(i, j).val();
        if (val < best) {
          best = val;
          pi_ = i;
          pj = j;
        }
      }
    if (best.is_infinite())
      throw arithmetic_error("matrix is singular");
    if (pi_ != t)
      for (std::size_t j = 0; j < r; ++j) {
        std::swap(a.at(t, j), a.at(pi_, j));
        std::swap(u.at(j, t), u.at(j, pi_));  // columns of U track row swaps
      }
    if (pj != t)
      for (std::size_t i = 0; i < r; ++i) std::swap(a.at(i, t), a.at(i, pj));
    // normalize the pivot to an exact power of pi
    Scalar unit = a.at(t, t).unit_part();
    Scalar uinv = unit.inv();
    for (std::size_t j = t; j < r; ++j) a.at(t, j) = a.at(t, j) * uinv;
    for (std::size_t i = 0; i < r; ++i) u.at(i, t) = u.at(i, t) * unit;
    // clear the column with row operations (mirrored on U), then the row
    for (std::size_t i = t + 1; i < r; ++i) {
      Scalar fac = a.at(i, t) / a.at(t, t);
      if (fac.is_zero()) continue;
      for (std::size_t j = t; j < r; ++j) a.at(i, j) = a.at(i, j) - fac * a.at(t, j);
      for (std::size_t i2 = 0; i2 < r; ++i2)
        u.at(i2, t) = u.at(i2, t) + fac * u.at(i2, i);
    }
    for (std::size_t j = t + 1; j < r; ++j) {
      Scalar fac = a.at(t, j) / a.at(t, t);
      if (fac.is_zero()) continue;
      for (std::size_t i = t; i < r; ++i) a.at(i, j) = a.at(i, j) - fac * a.at(i, t);
    }
  }

  SmithDecomposition out{u, {}};
  for (std::size_t t = 0; t < r; ++t)
    out.exponents.push_back(a.at(t, t).val().value());
  if (!u.is_integral() || !u.det().is_unit())
    throw std::logic_error("smith transform is not unimodular");
  // W = D^-1 U^-1 phi must be integral with unit determinant
  Matrix w = u.inverse().mul(phi);
  Scalar pi = Scalar::uniformizer(cfg);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      w.at(i, j) = w.at(i, j) * pi.pow(-out.exponents[i]);
  if (!w.is_integral() || !w.det().is_unit())
    throw std::logic_error("smith decomposition failed verification");
  return out;
}

long TorsionComodule::length() const {
  long s = 0;
  for (long a : moduli) s += a;
  return s;
}

TorsionComodule quotient_comodule(const Matrix& phi, const GradedSpace& v,
                                  const Lattice& m, const GradedSpace& vp,
                                  const Lattice& mp) {
  MorphismVerdict mv = morphism_check(phi, v, m, vp, mp);
  if (!mv.accepted)
    throw precondition_error("map is not a morphism of pairs");
  if (v.rank() != vp.rank() || phi.det().is_zero())
    throw arithmetic_error("morphism is not injective with torsion cokernel");
  const BackendConfig& cfg = phi.config();
  Matrix big = mp.basis().inverse().mul(phi).mul(m.basis());
  SmithDecomposition sd = smith_normal_form(big);
  Matrix adapted = mp.basis().mul(sd.u);
  auto entries = coaction_entries(vp, adapted, cfg);
  std::size_t r = vp.rank();
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j)
      entries[l][j] = reduce_mod_pi_s(entries[l][j], sd.exponents[l], cfg);
  TorsionComodule tc{vp, sd.exponents, adapted, std::move(entries), cfg};
  TorsionReport rep = verify_torsion_comodule(tc);
  if (!rep.all_pass())
    throw std::logic_error("torsion comodule failed axiom verification: " +
                           (rep.failures.empty() ? std::string("?") : rep.failures[0]));
  return tc;
}

TorsionReport verify_torsion_comodule(const TorsionComodule& tc) {
  TorsionReport rep;
  const BackendConfig& cfg = tc.cfg;
  std::size_t r = tc.moduli.size();
  Scalar pi = Scalar::uniformizer(cfg);

  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j) {
      const LaurentPoly& e = tc.entries[l][j];
      if (!s_membership(e, cfg).member) {
        rep.integrality = false;
        rep.failures.push_back("entry " + entry_tag(l, j) + " is not in S");
        continue;
      }
      long c = std::max(0L, tc.moduli[l] - tc.moduli[j]);
      if (c > 0 && !s_membership(e.scale(pi.pow(-c)), cfg).member) {
        rep.divisibility = false;
        rep.failures.push_back("entry " + entry_tag(l, j) + " is not divisible by pi^" +
                               std::to_string(c) + " in S");
      }
      Scalar expect = l == j ? Scalar::one(cfg) : Scalar::zero(cfg);
      if (!counit(e).sub(expect).val_at_least(tc.moduli[l])) {
        rep.counit = false;
        rep.failures.push_back("counit of entry " + entry_tag(l, j) +
                               " is wrong modulo pi^" + std::to_string(tc.moduli[l]));
      }
    }

  for (std::size_t mm = 0; mm < r; ++mm)
    for (std::size_t j = 0; j < r; ++j) {
      LaurentPoly2 diff = comult(tc.entries[mm][j]).sub(coassoc_rhs(tc.entries, mm, j, cfg));
      LaurentPoly2 scaled = diff.scale(pi.pow(-tc.moduli[mm]));
      if (!s_tensor_membership(scaled, cfg).member) {
        rep.coassoc = false;
        rep.failures.push_back("coassociativity fails at " + entry_tag(mm, j) +
                               " modulo pi^" + std::to_string(tc.moduli[mm]));
      }
    }
  return rep;
}

GradingReport grading_comodule(const Lattice& m, const GradedSpace& v) {
  const BackendConfig& cfg = m.config();
  GradingReport rep;
  auto entries = coaction_entries(v, m.basis(), cfg);
  std::size_t r = v.rank();
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j < r; ++j)
      if (!s_infinity_membership(entries[l][j])) {
        rep.s_infinity = false;
        rep.failures.push_back("entry " + entry_tag(l, j) +
                               " has non-integral coefficient sum");
      }
  check_counit_exact(entries, cfg, rep.counit, rep.failures);
  check_coassoc_exact(entries, cfg, rep.coassoc, rep.failures);
  return rep;
}

}  // namespace ogm
