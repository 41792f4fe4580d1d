#include "dgwork/cyclic.hpp"

#include <stdexcept>

namespace dgwork {

namespace {

template <class Map>
SparseMatrix induced(const QuotientHomology& src, const QuotientHomology& tgt, Map&& f) {
  SparseMatrix out(tgt.dimension(), src.dimension());
  for (std::size_t j = 0; j < src.dimension(); ++j) {
    out.set_column(j, tgt.coordinates(f(src.representatives()[j])));
  }
  return out;
}

// Multiplication by u^s from (src, ms) to (tgt, mt) with mt = ms - 2s.
SparseVector shift_tags(const TotalComplex& src, int ms, const TotalComplex& tgt, int mt, std::size_t s,
                        const SparseVector& v) {
  SparseVector out;
  for (std::size_t i = 0; i + s < tgt.u_bound() && i < src.u_bound(); ++i) {
    out.axpy(1, tgt.embed(mt, i + s, src.component(ms, i, v)));
  }
  return out;
}

SparseMatrix u_matrix(Workbench& w, std::size_t L, std::size_t n_src, std::size_t n_tgt, int m,
                      std::size_t s) {
  const int ms = m + 2 * static_cast<int>(s);
  const TotalComplex ts = w.total(L, TotalKind::NegativeCyclic, n_src);
  const TotalComplex tt = w.total(L, TotalKind::NegativeCyclic, n_tgt);
  return induced(w.homology(L, TotalKind::NegativeCyclic, n_src, ms),
                 w.homology(L, TotalKind::NegativeCyclic, n_tgt, m),
                 [&](const SparseVector& v) { return shift_tags(ts, ms, tt, m, s, v); });
}

HomologyPresentation total_homology(Workbench& w, TotalKind kind, const char* name, bool reps) {
  const auto& p = w.params();
  const std::size_t L = p.max_bar_length, N = p.max_u_power;
  HomologyPresentation out;
  out.kind = name;
  out.params = p;
  const auto base = w.dimensions(L, kind, N);
  const auto longer = w.dimensions(L + 1, kind, N);
  const auto deeper = w.dimensions(L, kind, N + 1);
  for (int m = p.window.lo; m <= p.window.hi; ++m) {
    DegreeHomology d;
    d.dimension = base.at(m);
    d.stable = longer.at(m) == d.dimension && deeper.at(m) == d.dimension;
    if (reps && d.dimension > 0) d.representatives = w.homology(L, kind, N, m).representatives();
    out.degrees.emplace(m, std::move(d));
  }
  return out;
}

bool composition_zero(const SparseMatrix& second, const SparseMatrix& first) {
  return (second * first).is_zero();
}

}  // namespace

HomologyPresentation hc_minus(Workbench& w, bool want_representatives) {
  return total_homology(w, TotalKind::NegativeCyclic, "HC-", want_representatives);
}

HomologyPresentation hc_minus(const CategoryPtr& c, const ComputationParams& p) {
  Workbench w(c, p);
  return hc_minus(w);
}

HomologyPresentation hc(Workbench& w, bool want_representatives) {
  return total_homology(w, TotalKind::Cyclic, "HC", want_representatives);
}

HomologyPresentation hc(const CategoryPtr& c, const ComputationParams& p) {
  Workbench w(c, p);
  return hc(w);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::Nonzero: return "nonzero";
    case Verdict::Unstable: return "unstable";
  }
  return "unstable";
}

SparseMatrix delta_matrix(Workbench& w, std::size_t L, std::size_t N, int n) {
  const auto mc = w.mixed(L);
  const TotalComplex t = w.total(L, TotalKind::NegativeCyclic, N);
  const auto& Bn = mc->B(n);
  return induced(w.homology(L, TotalKind::Hochschild, 1, n),
                 w.homology(L, TotalKind::NegativeCyclic, N, n + 1),
                 [&](const SparseVector& z) { return t.embed(n + 1, 0, Bn.apply(z)); });
}

std::vector<DeltaVerdict> delta(Workbench& w) {
  const auto& p = w.params();
  const std::size_t L = p.max_bar_length, N = p.max_u_power;
  const auto h = hh(w, false);
  std::vector<DeltaVerdict> out;
  for (int n = p.window.lo; n <= p.window.hi; ++n) {
    DeltaVerdict v;
    v.degree = n;
    v.bar_length = L;
    v.u_power = N;
    v.matrix = delta_matrix(w, L, N, n);
    v.rank = rank(v.matrix);
    v.rank_next = rank(delta_matrix(w, L + 1, N + 1, n));
    v.stable = h.stable(n) && v.rank == v.rank_next;
    v.verdict = !v.stable ? Verdict::Unstable : (v.rank == 0 ? Verdict::Zero : Verdict::Nonzero);
    out.push_back(std::move(v));
  }
  return out;
}

DegenerationReport degeneration_check(Workbench& w) {
  DegenerationReport r;
  r.verdicts = delta(w);
  r.degenerate = true;
  for (const auto& v : r.verdicts) {
    if (v.verdict == Verdict::Unstable) {
      ++r.unstable_degrees;
      continue;
    }
    ++r.stable_degrees;
    if (v.verdict == Verdict::Nonzero) r.degenerate = false;
  }
  return r;
}

// ---------------------------------------------------------------------------

std::size_t LongExactReport::stable_degrees() const {
  std::size_t n = 0;
  for (const auto& d : degrees) n += d.stable;
  return n;
}

bool LongExactReport::ok() const {
  if (stable_degrees() == 0) return false;
  for (const auto& d : degrees) {
    if (d.stable && !d.exact()) return false;
  }
  return true;
}

LongExactReport long_exact_check(Workbench& w) {
  const auto& p = w.params();
  const std::size_t L = p.max_bar_length, N = p.max_u_power;
  const auto deltas = delta(w);
  const auto mc = w.mixed(L);
  const TotalComplex big = w.total(L, TotalKind::NegativeCyclic, N + 1);
  LongExactReport r;
  for (const auto& dv : deltas) {
    const int n = dv.degree;
    const auto& qa = w.homology(L, TotalKind::NegativeCyclic, N, n + 2);
    const auto& qb = w.homology(L, TotalKind::NegativeCyclic, N + 1, n);
    const auto& qh = w.homology(L, TotalKind::Hochschild, 1, n);
    const auto& qc = w.homology(L, TotalKind::NegativeCyclic, N, n + 1);
    const SparseMatrix u = u_matrix(w, L, N, N + 1, n, 1);
    const SparseMatrix proj =
        induced(qb, qh, [&](const SparseVector& v) { return big.component(n, 0, v); });
    const SparseMatrix& d = dv.matrix;
    const SparseMatrix u_next = u_matrix(w, L, N, N + 1, n - 1, 1);

    LesDegree g;
    g.degree = n;
    g.dim_a = qa.dimension();
    g.dim_b = qb.dimension();
    g.dim_h = qh.dimension();
    g.dim_c = qc.dimension();
    g.rank_u = rank(u);
    g.rank_p = rank(proj);
    g.rank_delta = dv.rank;
    g.rank_u_next = rank(u_next);
    g.exact_at_b = g.rank_u == g.dim_b - g.rank_p;
    g.exact_at_h = g.rank_p == g.dim_h - g.rank_delta;
    g.exact_at_c = g.rank_delta == g.dim_c - g.rank_u_next;
    g.compositions_zero =
        composition_zero(proj, u) && composition_zero(d, proj) && composition_zero(u_next, d);
    g.stable = dv.verdict != Verdict::Unstable;
    r.degrees.push_back(g);
  }
  return r;
}

// ---------------------------------------------------------------------------

E1Page e1_page(Workbench& w) {
  const auto& p = w.params();
  const std::size_t L = p.max_bar_length;
  const auto h = hh(w, false);
  const auto deltas = delta(w);
  const auto mc = w.mixed(L);
  E1Page page;
  page.columns = p.max_u_power;
  for (int n = p.window.lo; n <= p.window.hi; ++n) page.hh_dims[n] = h.dim(n);
  for (const auto& dv : deltas) {
    const int n = dv.degree;
    E1Degree e;
    e.degree = n;
    e.hh_dim = h.dim(n);
    const auto& Bn = mc->B(n);
    e.d1 = induced(w.homology(L, TotalKind::Hochschild, 1, n),
                   w.homology(L, TotalKind::Hochschild, 1, n + 1),
                   [&](const SparseVector& z) { return Bn.apply(z); });
    e.d1_rank = rank(e.d1);
    e.delta = dv.verdict;
    if (dv.verdict != Verdict::Unstable && h.stable(n + 1)) {
      e.agrees = (dv.verdict == Verdict::Zero) == (e.d1_rank == 0);
      if (!e.agrees) page.discrepancies.push_back(n);
    }
    page.degrees.push_back(std::move(e));
  }
  return page;
}

bool UModuleReport::ok() const {
  if (degrees.empty()) return false;
  for (const auto& d : degrees) {
    if (!d.matches) return false;
  }
  return true;
}

UModuleReport u_module_check(Workbench& w) {
  const auto& p = w.params();
  const std::size_t L = p.max_bar_length, N = p.max_u_power;
  UModuleReport r;
  for (int n = p.window.lo; n + 4 <= p.window.hi; ++n) {
    const SparseMatrix first = u_matrix(w, L, N, N, n + 2, 1);
    const SparseMatrix second = u_matrix(w, L, N, N, n, 1);
    const SparseMatrix both = u_matrix(w, L, N, N, n, 2);
    UModuleDegree d;
    d.degree = n;
    d.rank_u2 = rank(both);
    d.matches = second * first == both;
    r.degrees.push_back(d);
  }
  return r;
}

// ---------------------------------------------------------------------------

FunctorialityReport delta_functoriality(const Functor& f, Workbench& source, Workbench& target) {
  if (!f.unital()) throw std::invalid_argument("delta_functoriality: functor must be unital");
  const auto& p = source.params();
  const std::size_t L = p.max_bar_length, N = p.max_u_power;
  const auto ds = delta(source), dt = delta(target);
  const auto ms = source.mixed(L), mt = target.mixed(L);
  const TotalComplex ts = source.total(L, TotalKind::NegativeCyclic, N);
  const TotalComplex tt = target.total(L, TotalKind::NegativeCyclic, N);
  FunctorialityReport r;
  for (std::size_t k = 0; k < ds.size(); ++k) {
    const int n = ds[k].degree;
    if (ds[k].verdict == Verdict::Unstable || dt[k].verdict == Verdict::Unstable) continue;
    const SparseMatrix fh = induced(
        source.homology(L, TotalKind::Hochschild, 1, n), target.homology(L, TotalKind::Hochschild, 1, n),
        [&](const SparseVector& z) { return apply_functor_on_chains(f, *ms, n, z, *mt); });
    const SparseMatrix fc = induced(
        source.homology(L, TotalKind::NegativeCyclic, N, n + 1),
        target.homology(L, TotalKind::NegativeCyclic, N, n + 1), [&](const SparseVector& v) {
          SparseVector out;
          for (std::size_t i = 0; i < N; ++i) {
            const int deg = ts.block_degree(n + 1, i);
            out.axpy(1, tt.embed(n + 1, i,
                                 apply_functor_on_chains(f, *ms, deg, ts.component(n + 1, i, v), *mt)));
          }
          return out;
        });
    r.checked.push_back(n);
    if (!(fc * ds[k].matrix == dt[k].matrix * fh)) r.failed.push_back(n);
  }
  return r;
}

bool MoritaReport::ok() const {
  if (hh.empty() || hc_minus.empty()) return false;
  for (const auto& d : hh) {
    if (!d.match()) return false;
  }
  for (const auto& d : hc_minus) {
    if (!d.match()) return false;
  }
  return true;
}

MoritaReport morita_check(Workbench& a, Workbench& b) {
  MoritaReport r;
  const auto ha = hh(a, false), hb = hh(b, false);
  const auto ca = hc_minus(a), cb = hc_minus(b);
  for (const auto& [n, d] : ha.degrees) {
    if (d.stable && hb.stable(n)) r.hh.push_back({n, d.dimension, hb.dim(n), true});
  }
  for (const auto& [n, d] : ca.degrees) {
    if (d.stable && cb.stable(n)) r.hc_minus.push_back({n, d.dimension, cb.dim(n), true});
  }
  return r;
}

}  // namespace dgwork
