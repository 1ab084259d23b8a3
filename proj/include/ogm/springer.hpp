#pragma once

// Finite windows of the lattice ind-space over F_q(e): enumerate the
// lattices M with e^a L <= M <= e^-a L that are stable under the diagonal
// degree operators, stratify counts by relative index, and fit per-stratum
// counts to polynomials in q. A brute-force submodule search over
// (O/e^{2a})^r provides an independent oracle for the HNF enumeration.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ogm/lattices.hpp"

namespace ogm {

struct WindowSpec {
  std::vector<long> degrees;
  long k = 1;  // f = e^k, k >= 1 here (the shortcut for residue char 0 never applies)
  long a = 0;  // window radius
  long q = 2;  // field size, prime
  std::optional<long> index_constraint;  // keep only strata with this index
  long ceiling = 1000000;                // candidate-count guard

  BackendConfig backend() const;
  void validate() const;
};

// sum over pivot tuples of the candidate counts q^{sum_i i*(c_i + a)}
mpz_class estimate_candidates(const WindowSpec& spec);

struct StableLatticeSet {
  std::vector<Lattice> lattices;  // enumeration order: pivot tuple, then digits
  std::map<long, long> strata;    // relative index (valuation of det) -> count
  long total() const;
};

// all C-stable lattices in the window, by canonical-form enumeration with a
// direct B^-1 C_n B integrality filter; throws unsupported_error when the
// estimate exceeds spec.ceiling
StableLatticeSet enumerate_stable_lattices(const WindowSpec& spec);
std::map<long, long> count_stable_lattices(const WindowSpec& spec);

// independent oracle: every lattice in the window (stability NOT filtered),
// found as submodules of (O/e^{2a})^r by closure search, lifted through HNF.
// Deterministically sorted. Guarded by the same ceiling.
std::vector<Lattice> window_lattices_by_submodule_search(const WindowSpec& spec);

struct CountFit {
  std::vector<mpq_class> coeffs;  // ascending; from the first bound+1 points
  bool matched = false;           // every supplied point reproduced exactly
};

// exact Lagrange fit through the first degree_bound+1 points, validated on
// the rest; throws precondition_error when fewer points than that are given
CountFit fit_counts(const std::vector<std::pair<long, mpz_class>>& points,
                    long degree_bound);

std::string format_polynomial(const std::vector<mpq_class>& coeffs);  // variable q

struct StratumFit {
  long index = 0;
  std::vector<mpz_class> counts;  // aligned with the q list
  std::vector<mpq_class> poly;    // fitted coefficients, ascending
  bool matched = false;
  bool affine_cell_shape = false;  // all coefficients non-negative integers
};

struct PolyFitReport {
  std::vector<long> qs;
  std::vector<StratumFit> strata;  // ascending by index
  bool polynomial = true;          // every stratum matched
};

// run the template across the given primes q and fit each stratum count
PolyFitReport polynomiality_check(const WindowSpec& tmpl, const std::vector<long>& qs);

}  // namespace ogm
