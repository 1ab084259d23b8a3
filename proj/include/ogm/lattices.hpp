#pragma once

// Full-rank O-lattices in F^r, kept in a canonical column echelon form
// ("HNF"): lower triangular with pivots pi^{a_i} on the diagonal and each
// entry left of a pivot reduced to its canonical residue modulo that pivot.
// Two bases span the same lattice iff their canonical forms are identical.
// On top of that: the diagonal degree operators C_n and the stability test
// that decides whether a lattice supports an integral coaction.

#include <optional>
#include <random>
#include <vector>

#include "ogm/matrix.hpp"

namespace ogm {

struct GradedSpace {
  std::vector<long> degrees;  // degree of coordinate i
  std::size_t rank() const { return degrees.size(); }
};

class Lattice {
 public:
  // canonicalizes; throws arithmetic_error when the columns do not have full
  // row rank (r x m input with m >= r allowed)
  static Lattice from_basis(const Matrix& generators);
  // O^r
  static Lattice standard(const BackendConfig& cfg, std::size_t r);

  const Matrix& basis() const { return basis_; }       // canonical, r x r
  std::size_t rank() const { return basis_.rows(); }
  const BackendConfig& config() const { return basis_.config(); }
  // valuations of the diagonal pivots
  std::vector<long> pivot_exponents() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  explicit Lattice(Matrix b) : basis_(std::move(b)) {}
  Matrix basis_;
};

// canonical column echelon form of a full-row-rank r x m matrix
Matrix hnf(const Matrix& generators);

bool lattice_membership(const std::vector<Scalar>& v, const Lattice& m);
// does m contain sub?
bool lattice_contains(const Lattice& m, const Lattice& sub);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);
// length of m/sub; precondition: m contains sub
long lattice_index(const Lattice& m, const Lattice& sub);
// dual with respect to the standard pairing
Lattice lattice_dual(const Lattice& m);

// C_n = diag(f^n * binom(d_j, n)) in the graded coordinates
Matrix c_operator(const GradedSpace& v, long n, const BackendConfig& cfg);

// least D >= 0 with pi^D O^r inside M inside pi^-D O^r
long conductor_depth(const Lattice& m);

// N such that C_n M in M for 1 <= n <= N forces it for all n.
// char 0: N = 1; k >= 1: N = ceil(2*conductor/k); otherwise unsupported.
long stability_bound(const GradedSpace& v, const Lattice& m, const BackendConfig& cfg);

struct AdmissibilityWitness {
  long n;                   // least n with C_n M not inside M
  std::vector<Scalar> vec;  // a basis vector taken outside
};

struct AdmissibilityVerdict {
  bool admissible = false;
  std::optional<AdmissibilityWitness> witness;
  long bound = 0;
};

AdmissibilityVerdict admissible(const GradedSpace& v, const Lattice& m,
                                const BackendConfig& cfg);

// smallest C-stable lattice containing m (exists: the saturation chain is
// bounded by pi^-D O^r); useful as a generator of admissible examples
Lattice admissible_hull(const GradedSpace& v, const Lattice& m, const BackendConfig& cfg);

// random lattice given directly by a canonical form: pivots pi^{c_i} with
// c_i in [-depth, depth], off-pivot residues with valuations >= -depth
Lattice sample_lattice(const BackendConfig& cfg, std::mt19937_64& rng,
                       std::size_t r, long depth);

}  // namespace ogm
