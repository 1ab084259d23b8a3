#include "ogm/springer.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ogm/common.hpp"
#include "ogm/laurent.hpp"

namespace ogm {

namespace {

// odometer over pivot tuples in [-a, a]^r, last index fastest
bool next_tuple(std::vector<long>& c, long a) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < a) {
      ++c[i];
      for (std::size_t j = i + 1; j < c.size(); ++j) c[j] = -a;
      return true;
    }
  }
  return false;
}

long tuple_index(const std::vector<long>& c) {
  long s = 0;
  for (long ci : c) s += ci;
  return s;
}

// row i carries i off-pivot entries with c_i + a free digits each
mpz_class tuple_candidates(const std::vector<long>& c, long a, long q) {
  long exp = 0;
  for (std::size_t i = 0; i < c.size(); ++i) exp += static_cast<long>(i) * (c[i] + a);
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(q),
                static_cast<unsigned long>(exp));
  return n;
}

bool tuple_selected(const WindowSpec& spec, const std::vector<long>& c) {
  return !spec.index_constraint || tuple_index(c) == *spec.index_constraint;
}

void check_ceiling(const WindowSpec& spec) {
  mpz_class est = estimate_candidates(spec);
  if (est > spec.ceiling) {
    throw unsupported_error("window search needs about " + est.get_str() +
                            " candidates, over the ceiling of " +
                            std::to_string(spec.ceiling));
  }
}

// C_n conjugated back through the basis must be integral for every n up to
// the conductor-driven bound; the diagonal is rebuilt from the raw binomial
// formula so this filter shares no code with the membership-based test
bool window_stable(const Matrix& b, const Matrix& binv,
                   const std::vector<long>& degrees, const BackendConfig& cfg) {
  long d = 0;
  Valuation vb = b.min_entry_valuation();
  Valuation vi = binv.min_entry_valuation();
  if (!vb.is_infinite()) d = std::max(d, -vb.value());
  if (!vi.is_infinite()) d = std::max(d, -vi.value());
  long bound = (2 * d + cfg.k - 1) / cfg.k;
  Scalar pi = Scalar::uniformizer(cfg);
  std::size_t r = degrees.size();
  for (long n = 1; n <= bound; ++n) {
    Matrix cn(cfg, r, r);
    for (std::size_t j = 0; j < r; ++j) {
      cn.at(j, j) =
          Scalar::from_mpz(cfg, binomial_z(degrees[j], n)).mul(pi.pow(cfg.k * n));
    }
    if (!binv.mul(cn).mul(b).is_integral()) return false;
  }
  return true;
}

struct DigitSlot {
  std::size_t i, j;  // off-pivot position, j < i
  long d;            // contributes digit * pi^d
};

// emit(basis, relative index) for every stable lattice in the window
template <class F>
void enumerate_window(const WindowSpec& spec, F&& emit) {
  spec.validate();
  check_ceiling(spec);
  const BackendConfig cfg = spec.backend();
  const std::size_t r = spec.degrees.size();
  const long a = spec.a;
  const Scalar pi = Scalar::uniformizer(cfg);

  std::vector<Scalar> digit_scalar;
  for (long v = 0; v < spec.q; ++v) digit_scalar.push_back(Scalar::from_integer(cfg, v));

  std::vector<long> c(r, -a);
  do {
    if (!tuple_selected(spec, c)) continue;
    std::vector<DigitSlot> slots;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < i; ++j)
        for (long d = -a; d < c[i]; ++d) slots.push_back({i, j, d});
    std::vector<int> digits(slots.size(), 0);
    const long stratum = tuple_index(c);
    for (;;) {
      Matrix b(cfg, r, r);
      for (std::size_t i = 0; i < r; ++i) b.at(i, i) = pi.pow(c[i]);
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (digits[s] == 0) continue;
        const DigitSlot& sl = slots[s];
        b.at(sl.i, sl.j) =
            b.at(sl.i, sl.j).add(digit_scalar[digits[s]].mul(pi.pow(sl.d)));
      }
      Matrix binv = b.inverse();
      // pi^a binv integral makes pi^a O^r a sublattice; the other inclusion
      // holds by construction (all entries have valuation >= -a)
      if (binv.min_entry_valuation().at_least(-a) &&
          window_stable(b, binv, spec.degrees, cfg)) {
        emit(b, stratum);
      }
      std::size_t s = slots.size();
      while (s > 0 && digits[s - 1] == spec.q - 1) digits[--s] = 0;
      if (s == 0) break;
      ++digits[s - 1];
    }
  } while (next_tuple(c, a));
}

// ---- submodule-search oracle over Q = (O/e^{2a})^r ----
//
// Elements are base-q digit strings: digit (coord*2a + pos) is the
// coefficient of e^{pos-a} in that coordinate.

struct QuotientModule {
  long q;
  std::size_t r;
  long nd;  // digits per coordinate
  std::uint32_t count = 1;
  std::vector<std::uint32_t> powq;

  QuotientModule(long q_, std::size_t r_, long nd_) : q(q_), r(r_), nd(nd_) {
    powq.resize(r * nd + 1, 1);
    for (std::size_t i = 1; i < powq.size(); ++i)
      powq[i] = powq[i - 1] * static_cast<std::uint32_t>(q);
    count = powq[r * nd];
  }

  int digit(std::uint32_t x, std::size_t pos) const {
    return static_cast<int>((x / powq[pos]) % q);
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const {
    std::uint32_t z = 0;
    for (std::size_t pos = 0; pos < r * static_cast<std::size_t>(nd); ++pos)
      z += static_cast<std::uint32_t>((digit(x, pos) + digit(y, pos)) % q) * powq[pos];
    return z;
  }

  // multiply by the polynomial with digits p (length nd), truncated at e^{2a}
  std::uint32_t smul(const std::vector<int>& p, std::uint32_t x) const {
    std::uint32_t z = 0;
    for (std::size_t coord = 0; coord < r; ++coord) {
      for (long out = 0; out < nd; ++out) {
        long acc = 0;
        for (long s = 0; s <= out; ++s)
          acc += p[s] * digit(x, coord * nd + (out - s));
        z += static_cast<std::uint32_t>(acc % q) * powq[coord * nd + out];
      }
    }
    return z;
  }
};

}  // namespace

BackendConfig WindowSpec::backend() const {
  BackendConfig cfg;
  cfg.kind = BackendKind::RatFuncFq;
  cfg.q = q;
  cfg.k = k;
  return cfg;
}

void WindowSpec::validate() const {
  if (degrees.empty()) throw precondition_error("window needs at least one coordinate");
  if (k < 1) throw precondition_error("window enumeration requires k >= 1");
  if (a < 0) throw precondition_error("window radius must be >= 0");
  if (ceiling < 1) throw precondition_error("candidate ceiling must be positive");
  backend().validate();
}

mpz_class estimate_candidates(const WindowSpec& spec) {
  mpz_class total = 0;
  std::vector<long> c(spec.degrees.size(), -spec.a);
  do {
    if (tuple_selected(spec, c)) total += tuple_candidates(c, spec.a, spec.q);
  } while (next_tuple(c, spec.a));
  return total;
}

long StableLatticeSet::total() const {
  long n = 0;
  for (const auto& [idx, cnt] : strata) n += cnt;
  return n;
}

StableLatticeSet enumerate_stable_lattices(const WindowSpec& spec) {
  StableLatticeSet out;
  enumerate_window(spec, [&](const Matrix& b, long stratum) {
    Lattice m = Lattice::from_basis(b);
    if (m.basis() != b)
      throw std::logic_error("window enumeration produced a non-canonical basis");
    out.lattices.push_back(std::move(m));
    ++out.strata[stratum];
  });
  return out;
}

std::map<long, long> count_stable_lattices(const WindowSpec& spec) {
  std::map<long, long> strata;
  enumerate_window(spec, [&](const Matrix&, long stratum) { ++strata[stratum]; });
  return strata;
}

std::vector<Lattice> window_lattices_by_submodule_search(const WindowSpec& spec) {
  spec.validate();
  check_ceiling(spec);
  const BackendConfig cfg = spec.backend();
  const std::size_t r = spec.degrees.size();
  const long a = spec.a;
  if (a == 0) return {Lattice::standard(cfg, r)};

  const long nd = 2 * a;
  double size = 1;
  for (std::size_t i = 0; i < r * static_cast<std::size_t>(nd); ++i) size *= spec.q;
  if (size > 65536)
    throw unsupported_error("submodule search space has " + std::to_string(size) +
                            " elements; refine the window");

  QuotientModule qm(spec.q, r, nd);

  // distinct cyclic submodules, each with one generator
  std::map<std::vector<std::uint32_t>, std::uint32_t> cyclic;  // orbit -> generator
  {
    std::uint32_t scalars = 1;
    for (long i = 0; i < nd; ++i) scalars *= static_cast<std::uint32_t>(spec.q);
    std::vector<int> p(nd);
    for (std::uint32_t v = 1; v < qm.count; ++v) {
      std::set<std::uint32_t> orbit;
      for (std::uint32_t m = 0; m < scalars; ++m) {
        for (long i = 0; i < nd; ++i)
          p[i] = static_cast<int>((m / qm.powq[i]) % spec.q);
        orbit.insert(qm.smul(p, v));
      }
      std::vector<std::uint32_t> key(orbit.begin(), orbit.end());
      cyclic.emplace(std::move(key), v);
    }
  }

  struct Node {
    std::vector<std::uint32_t> elems;  // sorted
    std::vector<std::uint32_t> gens;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Node> found;
  found.push_back({{0}, {}});
  seen.insert(found[0].elems);
  std::vector<char> mark(qm.count);
  for (std::size_t head = 0; head < found.size(); ++head) {
    Node cur = found[head];  // copy: found reallocates
    std::vector<char> in(qm.count, 0);
    for (std::uint32_t e : cur.elems) in[e] = 1;
    for (const auto& [orbit, gen] : cyclic) {
      if (in[gen]) continue;
      std::fill(mark.begin(), mark.end(), 0);
      std::vector<std::uint32_t> joined;
      for (std::uint32_t s : cur.elems) {
        for (std::uint32_t w : orbit) {
          std::uint32_t z = qm.add(s, w);
          if (!mark[z]) {
            mark[z] = 1;
            joined.push_back(z);
          }
        }
      }
      std::sort(joined.begin(), joined.end());
      if (seen.insert(joined).second) {
        Node next{std::move(joined), cur.gens};
        next.gens.push_back(gen);
        found.push_back(std::move(next));
      }
    }
  }

  const Scalar pi = Scalar::uniformizer(cfg);
  std::vector<Lattice> out;
  out.reserve(found.size());
  for (const Node& node : found) {
    Matrix gen(cfg, r, r + node.gens.size());
    for (std::size_t i = 0; i < r; ++i) gen.at(i, i) = pi.pow(a);
    for (std::size_t g = 0; g < node.gens.size(); ++g) {
      for (std::size_t coord = 0; coord < r; ++coord) {
        Scalar entry = Scalar::zero(cfg);
        for (long pos = 0; pos < nd; ++pos) {
          int dv = qm.digit(node.gens[g], coord * nd + pos);
          if (dv != 0)
            entry = entry.add(Scalar::from_integer(cfg, dv).mul(pi.pow(pos - a)));
        }
        gen.at(coord, r + g) = entry;
      }
    }
    out.push_back(Lattice::from_basis(gen));
  }

  std::sort(out.begin(), out.end(), [](const Lattice& x, const Lattice& y) {
    const Matrix &bx = x.basis(), &by = y.basis();
    for (std::size_t i = 0; i < bx.rows(); ++i)
      for (std::size_t j = 0; j < bx.cols(); ++j) {
        std::string sx = bx.at(i, j).str(), sy = by.at(i, j).str();
        if (sx != sy) return sx < sy;
      }
    return false;
  });
  return out;
}

CountFit fit_counts(const std::vector<std::pair<long, mpz_class>>& points,
                    long degree_bound) {
  if (degree_bound < 0) degree_bound = 0;
  const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < need)
    throw precondition_error("count fit underdetermined: need " +
                             std::to_string(need) + " sample points, got " +
                             std::to_string(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw precondition_error("count fit needs distinct sample points");

  std::vector<mpq_class> coeffs(need, mpq_class(0));
  for (std::size_t i = 0; i < need; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom(1);
    for (std::size_t j = 0; j < need; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> nb(basis.size() + 1, mpq_class(0));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        nb[t + 1] += basis[t];
        nb[t] -= mpq_class(points[j].first) * basis[t];
      }
      basis = std::move(nb);
      denom *= mpq_class(points[i].first - points[j].first);
    }
    mpq_class w = mpq_class(points[i].second) / denom;
    w.canonicalize();
    for (std::size_t t = 0; t < basis.size(); ++t) coeffs[t] += basis[t] * w;
  }
  for (auto& cf : coeffs) cf.canonicalize();
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();

  CountFit fit{coeffs, true};
  for (const auto& [x, y] : points) {
    mpq_class v(0);
    for (std::size_t t = coeffs.size(); t-- > 0;) v = v * x + coeffs[t];
    if (v != mpq_class(y)) {
      fit.matched = false;
      break;
    }
  }
  return fit;
}

std::string format_polynomial(const std::vector<mpq_class>& coeffs) {
  std::string out;
  for (std::size_t t = coeffs.size(); t-- > 0;) {
    mpq_class c = coeffs[t];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string cs = c.get_str();
    if (t == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += (t == 1) ? "q" : "q^" + std::to_string(t);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

long stratum_degree_bound(const WindowSpec& spec, long stratum) {
  long best = 0;
  std::vector<long> c(spec.degrees.size(), -spec.a);
  do {
    if (tuple_index(c) != stratum || !tuple_selected(spec, c)) continue;
    long e = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      e += static_cast<long>(i) * (c[i] + spec.a);
    best = std::max(best, e);
  } while (next_tuple(c, spec.a));
  return best;
}

}  // namespace

PolyFitReport polynomiality_check(const WindowSpec& tmpl, const std::vector<long>& qs) {
  if (qs.empty()) throw precondition_error("polynomial check needs sample field sizes");
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (qs[i] == qs[j])
        throw precondition_error("polynomial check needs distinct field sizes");

  std::vector<std::map<long, long>> per_q;
  per_q.reserve(qs.size());
  std::set<long> strata_keys;
  for (long q : qs) {
    WindowSpec spec = tmpl;
    spec.q = q;
    per_q.push_back(count_stable_lattices(spec));
    for (const auto& [idx, cnt] : per_q.back()) strata_keys.insert(idx);
  }

  PolyFitReport report;
  report.qs = qs;
  for (long idx : strata_keys) {
    StratumFit sf;
    sf.index = idx;
    std::vector<std::pair<long, mpz_class>> points;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      auto it = per_q[i].find(idx);
      long cnt = it == per_q[i].end() ? 0 : it->second;
      sf.counts.push_back(mpz_class(cnt));
      points.push_back({qs[i], mpz_class(cnt)});
    }
    CountFit fit = fit_counts(points, stratum_degree_bound(tmpl, idx));
    sf.poly = fit.coeffs;
    sf.matched = fit.matched;
    sf.affine_cell_shape = fit.matched;
    for (const mpq_class& cf : fit.coeffs)
      if (cf.get_den() != 1 || cf < 0) sf.affine_cell_shape = false;
    report.polynomial = report.polynomial && sf.matched;
    report.strata.push_back(std::move(sf));
  }
  return report;
}

}  // namespace ogm
