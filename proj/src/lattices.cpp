#include "ogm/lattices.hpp"

#include <algorithm>

#include "ogm/laurent.hpp"

namespace ogm {

namespace {

long rnd_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

}  // namespace

Matrix hnf(const Matrix& gen) {
  const BackendConfig cfg = gen.config();
  const std::size_t r = gen.rows();
  std::size_t m = gen.cols();
  if (m < r) throw arithmetic_error("hnf: fewer generators than rank");
  Matrix w = gen;

  // eliminate: after step i, row i is zero beyond column i
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t best = m;
    Valuation bestv = Valuation::infinite();
    for (std::size_t j = i; j < m; ++j) {
      const Scalar& e = w.at(i, j);
      if (e.is_zero()) continue;
      Valuation v = e.val();
      if (best == m || v < bestv) {
        best = j;
        bestv = v;
      }
    }
    if (best == m) throw arithmetic_error("hnf: generators are not full rank");
    if (best != i)
      for (std::size_t t = 0; t < r; ++t) std::swap(w.at(t, i), w.at(t, best));
    // normalize the pivot to an exact power of pi
    Scalar unit_inv = w.at(i, i).unit_part().inv();
    for (std::size_t t = 0; t < r; ++t) w.at(t, i) = w.at(t, i).mul(unit_inv);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (w.at(i, j).is_zero()) continue;
      Scalar fac = w.at(i, j).div(w.at(i, i));  // integral: pivot has least valuation
      for (std::size_t t = i; t < r; ++t)
        w.at(t, j) = w.at(t, j).sub(fac.mul(w.at(t, i)));
    }
  }

  Matrix h(cfg, r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) h.at(i, j) = w.at(i, j);

  // reduce entries left of each pivot to canonical residues mod the pivot
  for (std::size_t i = 0; i < r; ++i) {
    long ai = h.at(i, i).val().value();
    for (std::size_t j = 0; j < i; ++j) {
      const Scalar& e = h.at(i, j);
      if (e.is_zero()) continue;
      Scalar rho = e.residue_mod(ai);
      Scalar fac = e.sub(rho).div(h.at(i, i));
      if (fac.is_zero()) continue;
      for (std::size_t t = i; t < r; ++t)
        h.at(t, j) = h.at(t, j).sub(fac.mul(h.at(t, i)));
    }
  }
  return h;
}

Lattice Lattice::from_basis(const Matrix& generators) {
  return Lattice(hnf(generators));
}

Lattice Lattice::standard(const BackendConfig& cfg, std::size_t r) {
  return Lattice(Matrix::identity(cfg, r));
}

std::vector<long> Lattice::pivot_exponents() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < rank(); ++i)
    out.push_back(basis_.at(i, i).val().value());
  return out;
}

bool lattice_membership(const std::vector<Scalar>& v, const Lattice& m) {
  std::vector<Scalar> c = m.basis().solve(v);
  for (const auto& x : c)
    if (!x.is_integral()) return false;
  return true;
}

bool lattice_contains(const Lattice& m, const Lattice& sub) {
  Matrix c = m.basis().inverse().mul(sub.basis());
  return c.is_integral();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  const std::size_t r = a.rank();
  if (b.rank() != r) throw precondition_error("lattice_sum: ranks differ");
  Matrix cat(a.config(), r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      cat.at(i, j) = a.basis().at(i, j);
      cat.at(i, r + j) = b.basis().at(i, j);
    }
  return Lattice::from_basis(cat);
}

Lattice lattice_dual(const Lattice& m) {
  return Lattice::from_basis(m.basis().inverse().transpose());
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
  // (A cap B)^* = A^* + B^*
  return lattice_dual(lattice_sum(lattice_dual(a), lattice_dual(b)));
}

long lattice_index(const Lattice& m, const Lattice& sub) {
  Matrix c = m.basis().inverse().mul(sub.basis());
  if (!c.is_integral())
    throw precondition_error("lattice_index: second lattice not contained in first");
  return c.det().val().value();
}

Matrix c_operator(const GradedSpace& v, long n, const BackendConfig& cfg) {
  if (n < 0) throw precondition_error("c_operator: n must be >= 0");
  Matrix m(cfg, v.rank(), v.rank());
  Scalar fn = Scalar::f_element(cfg).pow(n);
  for (std::size_t j = 0; j < v.rank(); ++j)
    m.at(j, j) = fn.mul(binomial_scalar(cfg, v.degrees[j], n));
  return m;
}

long conductor_depth(const Lattice& m) {
  Valuation vb = m.basis().min_entry_valuation();
  Valuation vi = m.basis().inverse().min_entry_valuation();
  long d = 0;
  if (!vb.is_infinite()) d = std::max(d, -vb.value());
  if (!vi.is_infinite()) d = std::max(d, -vi.value());
  return d;
}

long stability_bound(const GradedSpace& v, const Lattice& m, const BackendConfig& cfg) {
  (void)v;
  if (cfg.kind == BackendKind::RatFuncChar0) return 1;
  if (cfg.k == 0)
    throw unsupported_error(
        "stability is undecidable here with k = 0 outside characteristic zero");
  long d = conductor_depth(m);
  return (2 * d + cfg.k - 1) / cfg.k;  // ceil(2D/k)
}

AdmissibilityVerdict admissible(const GradedSpace& v, const Lattice& m,
                                const BackendConfig& cfg) {
  if (v.rank() != m.rank()) throw precondition_error("admissible: rank mismatch");
  AdmissibilityVerdict out;
  out.bound = stability_bound(v, m, cfg);
  for (long n = 1; n <= out.bound; ++n) {
    Matrix cn = c_operator(v, n, cfg);
    for (std::size_t j = 0; j < m.rank(); ++j) {
      std::vector<Scalar> img = cn.apply(m.basis().col(j));
      if (!lattice_membership(img, m)) {
        out.admissible = false;
        out.witness = AdmissibilityWitness{n, m.basis().col(j)};
        return out;
      }
    }
  }
  out.admissible = true;
  return out;
}

Lattice admissible_hull(const GradedSpace& v, const Lattice& m, const BackendConfig& cfg) {
  long bound = stability_bound(v, m, cfg);
  Lattice cur = m;
  for (;;) {
    const std::size_t r = cur.rank();
    Matrix cat(cfg, r, r * static_cast<std::size_t>(bound + 1));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) cat.at(i, j) = cur.basis().at(i, j);
    for (long n = 1; n <= bound; ++n) {
      Matrix cn = c_operator(v, n, cfg);
      Matrix prod = cn.mul(cur.basis());
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i)
          cat.at(i, static_cast<std::size_t>(n) * r + j) = prod.at(i, j);
    }
    Lattice next = Lattice::from_basis(cat);
    if (next == cur) return cur;
    cur = next;
  }
}

Lattice sample_lattice(const BackendConfig& cfg, std::mt19937_64& rng,
                       std::size_t r, long depth) {
  Matrix b(cfg, r, r);
  Scalar pi = Scalar::uniformizer(cfg);
  std::vector<long> piv;
  for (std::size_t i = 0; i < r; ++i) piv.push_back(rnd_range(rng, -depth, depth));
  for (std::size_t i = 0; i < r; ++i) b.at(i, i) = pi.pow(piv[i]);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      // a residue mod pi^{piv[i]} with valuation >= -depth
      Scalar e = Scalar::zero(cfg);
      for (long d = -depth; d < piv[i]; ++d) {
        long digit = rnd_range(rng, 0, 2);
        if (digit != 0)
          e = e.add(Scalar::from_integer(cfg, digit).mul(pi.pow(d)));
      }
      b.at(i, j) = e.residue_mod(piv[i]);
    }
  return Lattice::from_basis(b);
}

}  // namespace ogm
