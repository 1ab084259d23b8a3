#pragma once

// Coactions on lattices: from an admissible pair (graded space, lattice)
// build the coaction matrix with entries in S_k, verify the comodule axioms
// exactly, evaluate the action at group points, check and quotient
// morphisms of pairs (torsion comodules with per-factor moduli), and run the
// grading-as-coaction checks for the limit ring S_infinity.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ogm/groupscheme.hpp"
#include "ogm/lattices.hpp"

namespace ogm {

// entries[l][j] = s_lj with Delta(m_j) = sum_l s_lj (x) m_l, for the basis
// with columns m_j; s_lj = sum_i (B^-1 P_i B)_lj T^i over the degrees i
std::vector<std::vector<LaurentPoly>> coaction_entries(const GradedSpace& v,
                                                       const Matrix& basis,
                                                       const BackendConfig& cfg);

struct ComoduleMatrix {
  GradedSpace space;
  Lattice lattice;
  BackendConfig cfg;
  std::vector<std::vector<LaurentPoly>> entries;
  std::size_t rank() const { return space.rank(); }
};

struct EntryWitness {
  std::size_t l = 0, j = 0;     // entry position
  MembershipWitness witness;    // its least failing L_n
};

struct NonAdmissibleDetail {
  AdmissibilityVerdict verdict;  // from the lattice-side stability test
  EntryWitness entry;            // coaction entry with the least failing L_n
};

// construction failure; carries both the lattice-side witness and the
// entry-side witness so callers can cross-check the two routes
class non_admissible_error : public arithmetic_error {
 public:
  non_admissible_error(const std::string& what, NonAdmissibleDetail detail)
      : arithmetic_error(what), detail_(std::move(detail)) {}
  const NonAdmissibleDetail& detail() const { return detail_; }

 private:
  NonAdmissibleDetail detail_;
};

// throws non_admissible_error when the pair is not admissible; the returned
// entries are all verified members of S_k, and the reconstruction
// B * coeff_i(sigma) * B^-1 = P_i is re-checked degree by degree
ComoduleMatrix build_comodule(const GradedSpace& v, const Lattice& m,
                              const BackendConfig& cfg);

struct ComoduleReport {
  bool coassoc = true;
  bool counit = true;
  bool integrality = true;
  std::vector<std::string> failures;
  bool all_pass() const { return coassoc && counit && integrality; }
};

// exact axiom checks: comult(s_mj) = sum_l s_lj(T1) s_ml(T2), counit of an
// entry is the Kronecker delta, and every entry lies in S_k
ComoduleReport verify_comodule(const ComoduleMatrix& cm);

// rho(pt): entrywise value of the coaction at a point over O or O/pi^m,
// computed through the X-presentation so quotient points stay exact
Matrix point_action(const ComoduleMatrix& cm, const GPoint& pt);

struct MorphismVerdict {
  bool accepted = false;
  bool graded = true;
  bool maps_lattice = true;
  // first degree-mixing nonzero entry / first basis column escaping M'
  std::optional<std::pair<std::size_t, std::size_t>> bad_entry;
  std::optional<std::size_t> bad_column;
};

// acceptance per the category definition: entries connecting unequal degrees
// vanish and phi(M) lies in M'. Accepted maps are re-checked to commute with
// the two coactions (a theorem, asserted).
MorphismVerdict morphism_check(const Matrix& phi, const GradedSpace& v,
                               const Lattice& m, const GradedSpace& vp,
                               const Lattice& mp);

// does Phi = B'^-1 phi B satisfy integrality plus Phi sigma = sigma' Phi?
// (equivalent to the coaction square commuting over O)
bool coaction_square_commutes(const Matrix& phi, const ComoduleMatrix& src,
                              const ComoduleMatrix& dst);

// phi = U * diag(pi^{a_i}) * W with U, W integral of unit determinant and
// exponents ascending; only U is returned (the basis change on the target)
struct SmithDecomposition {
  Matrix u;
  std::vector<long> exponents;
};
SmithDecomposition smith_normal_form(const Matrix& phi);

struct TorsionComodule {
  GradedSpace space;          // grading of the ambient target pair
  std::vector<long> moduli;   // component l is O/pi^{moduli[l]}, ascending
  Matrix basis;               // columns: the basis of M' adapted to phi(M)
  std::vector<std::vector<LaurentPoly>> entries;  // reduced mod pi^{a_l} S
  BackendConfig cfg;
  long length() const;        // sum of the moduli
};

struct TorsionReport {
  bool integrality = true;   // entries lie in S_k
  bool divisibility = true;  // entry (l,j) lies in pi^max(0, a_l - a_j) S
  bool counit = true;        // counit(s_lj) = delta_lj mod pi^{a_l}
  bool coassoc = true;       // coassociativity mod pi^{a_m} (S (x) S)
  std::vector<std::string> failures;
  bool all_pass() const { return integrality && divisibility && counit && coassoc; }
};

// the quotient M'/phi(M) with its induced coaction; phi must be an accepted
// morphism with nonzero determinant. Axioms are verified at the moduli.
TorsionComodule quotient_comodule(const Matrix& phi, const GradedSpace& v,
                                  const Lattice& m, const GradedSpace& vp,
                                  const Lattice& mp);

TorsionReport verify_torsion_comodule(const TorsionComodule& tc);

struct GradingReport {
  bool s_infinity = true;  // every entry has integral coefficient sum
  bool counit = true;
  bool coassoc = true;
  std::vector<std::string> failures;
  bool all_pass() const { return s_infinity && counit && coassoc; }
};

// any lattice and any grading coact through the limit ring: entries need
// only integral coefficient sums, no stability; axioms still hold exactly
GradingReport grading_comodule(const Lattice& m, const GradedSpace& v);

}  // namespace ogm
