#include "dgwork/chern.hpp"

#include <cstdlib>

namespace dgwork {

namespace {

bool hh0_exact(Workbench& w) {
  const auto f = analytic_hh_frontier(w.category(), w.params().max_bar_length);
  return f && *f >= 0;
}

SparseMatrix dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  SparseMatrix m(rows.size(), cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][j] != 0) e.emplace_back(i, rows[i][j]);
    }
    m.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return m;
}

SparseMatrix block_of(const SparseMatrix& m, std::size_t r0, std::size_t nr, std::size_t c0,
                      std::size_t nc) {
  SparseMatrix out(nr, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, a] : m.column(c0 + j).entries()) {
      if (i >= r0 && i < r0 + nr) e.emplace_back(i - r0, a);
    }
    out.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  return out;
}

SparseMatrix invert(const SparseMatrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw InconsistentInput(std::string(what) + ": matrix is singular");
  return *inv;
}

void require_directed(const Category& c, const char* what) {
  if (!c.is_directed()) throw UnsupportedInput(std::string(what) + ": category is not directed");
}

// ch of x split over HH_0(b) ⊗ HH_0(c), in the [id_x] bases of both factors.
SparseMatrix vertex_split(const K0Class& x, Workbench& t, Workbench& b, Workbench& c) {
  const auto ks = kunneth_split(ch(x, t), t, b, c);
  const SparseMatrix vb = invert(vertex_basis(b), "vertex basis");
  const SparseMatrix vc = invert(vertex_basis(c), "vertex basis");
  return vb * ks.block * vc.transpose();
}

K0Class diagonal_k0(const CategoryPtr& a, const CategoryPtr& t) {
  const DiagonalResolution res = diagonal_resolution(*a);
  if (res.exact) {
    K0Class k = diagonal_class(a).k0;
    k.category = t;
    return k;
  }
  // Cartan route: multiplicities (C^{-1})^T.
  const SparseMatrix n = invert(cartan_matrix(*a), "Cartan matrix").transpose();
  return k0_from_multiplicities(t, n.to_dense(), a->num_objects());
}

}  // namespace

ProjectiveSummand ProjectiveSummand::representable(const Category& c, std::size_t x, std::size_t copies,
                                                   int position) {
  ProjectiveSummand s;
  s.position = position;
  s.objects.assign(copies, x);
  s.e.assign(copies, std::vector<SparseVector>(copies));
  for (std::size_t i = 0; i < copies; ++i) s.e[i][i] = SparseVector::unit(c.identity(x));
  return s;
}

K0Class K0Class::operator+(const K0Class& other) const {
  if (!(*category == *other.category)) throw InconsistentInput("K0 classes over different categories");
  K0Class out = *this;
  out.summands.insert(out.summands.end(), other.summands.begin(), other.summands.end());
  return out;
}

K0Class K0Class::shifted(int by) const {
  K0Class out = *this;
  for (auto& s : out.summands) s.position += by;
  return out;
}

void check_k0_class(const K0Class& x) {
  const Category& c = *x.category;
  if (!c.concentrated_in_degree_zero()) {
    throw UnsupportedInput("K0 class: category is not concentrated in degree zero");
  }
  for (const auto& s : x.summands) {
    const std::size_t n = s.objects.size();
    if (s.e.size() != n) throw InconsistentInput("K0 class: idempotent has wrong shape");
    for (const auto& row : s.e) {
      if (row.size() != n) throw InconsistentInput("K0 class: idempotent has wrong shape");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        SparseVector sq;
        for (std::size_t j = 0; j < n; ++j) {
          sq.axpy(1, c.compose(s.objects[k], s.objects[j], s.objects[i], s.e[i][j], s.e[j][k]));
        }
        if (!(sq == s.e[i][k])) throw InconsistentInput("K0 class: e is not idempotent");
      }
    }
  }
}

K0Class k0_from_multiplicities(const CategoryPtr& t, const std::vector<std::vector<Scalar>>& n,
                               std::size_t c_objects) {
  K0Class out;
  out.category = t;
  for (std::size_t p = 0; p < n.size(); ++p) {
    for (std::size_t q = 0; q < n[p].size(); ++q) {
      const Scalar& v = n[p][q];
      if (v == 0) continue;
      if (v.get_den() != 1) throw InconsistentInput("K0 multiplicity is not an integer");
      const long copies = std::labs(v.get_num().get_si());
      out.summands.push_back(ProjectiveSummand::representable(*t, p * c_objects + q,
                                                              static_cast<std::size_t>(copies),
                                                              v > 0 ? 0 : 1));
    }
  }
  return out;
}

HH0Class ch(const K0Class& x, Workbench& w) {
  check_k0_class(x);
  if (!(*x.category == w.category())) throw InconsistentInput("ch: workbench is over another category");
  const std::size_t L = w.params().max_bar_length;
  const auto mc = w.mixed(L);
  std::vector<SparseVector::Entry> e;
  for (const auto& s : x.summands) {
    const int sign = s.position % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      for (const auto& [letter, a] : s.e[i][i].entries()) {
        const auto idx = mc->find(0, HochschildWord{{s.objects[i]}, {letter}});
        if (!idx) throw InconsistentInput("ch: trace word outside the computed range");
        e.emplace_back(*idx, sign * a);
      }
    }
  }
  HH0Class out;
  out.chain = SparseVector::from_entries(std::move(e));
  out.coordinates = w.homology(L, TotalKind::Hochschild, 1, 0).coordinates(out.chain);
  out.stable = hh0_exact(w);
  return out;
}

K0Class push_forward(const Functor& f, const K0Class& x, const CategoryPtr& target) {
  K0Class out;
  out.category = target;
  for (const auto& s : x.summands) {
    ProjectiveSummand t;
    t.position = s.position;
    for (std::size_t o : s.objects) t.objects.push_back(f.object_map.at(o));
    t.e.assign(s.objects.size(), std::vector<SparseVector>(s.objects.size()));
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      for (std::size_t j = 0; j < s.objects.size(); ++j) {
        t.e[i][j] = f.on_hom(s.objects[j], s.objects[i]).apply(s.e[i][j]);
      }
    }
    out.summands.push_back(std::move(t));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<QuiverArrow> quiver_arrows(const Category& a) {
  require_directed(a, "quiver_arrows");
  const std::size_t n = a.num_objects();
  std::vector<QuiverArrow> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || a.hom(x, y).empty()) continue;
      std::vector<SparseVector> r2, ambient;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        for (std::size_t f = 0; f < a.hom(x, z).size(); ++f) {
          for (std::size_t g = 0; g < a.hom(z, y).size(); ++g) r2.push_back(a.composite(x, z, y, g, f));
        }
      }
      for (std::size_t i = 0; i < a.hom(x, y).size(); ++i) ambient.push_back(SparseVector::unit(i));
      for (auto& v : quotient_basis(r2, ambient, a.hom(x, y).size())) out.push_back({x, y, std::move(v)});
    }
  }
  return out;
}

SparseMatrix cartan_matrix(const Category& a) {
  const std::size_t n = a.num_objects();
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) c[x][y] = static_cast<long>(a.hom(x, y).size());
  }
  return dense(c, n);
}

DiagonalResolution diagonal_resolution(const Category& a) {
  DiagonalResolution r;
  r.arrows = quiver_arrows(a);
  const std::size_t n = a.num_objects();
  auto dim = [&a](std::size_t x, std::size_t y) { return a.hom(x, y).size(); };
  r.exact = true;
  for (std::size_t u = 0; u < n && r.exact; ++u) {
    for (std::size_t v = 0; v < n && r.exact; ++v) {
      // R0 = ⊕_x A(x, v) ⊗ A(u, x), index off[x] + g * dim(u, x) + f.
      std::vector<std::size_t> off(n + 1, 0);
      for (std::size_t x = 0; x < n; ++x) off[x + 1] = off[x] + dim(x, v) * dim(u, x);
      SparseMatrix d0(dim(u, v), off[n]);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t g = 0; g < dim(x, v); ++g) {
          for (std::size_t f = 0; f < dim(u, x); ++f) {
            d0.set_column(off[x] + g * dim(u, x) + f, a.composite(u, x, v, g, f));
          }
        }
      }
      // R1 = ⊕_{α: x→y} A(y, v) ⊗ A(u, x); g⊗f ↦ (g∘α)⊗f - g⊗(α∘f).
      SparseMatrix d1(off[n], 0);
      for (const auto& arr : r.arrows) {
        const std::size_t x = arr.source, y = arr.target;
        for (std::size_t g = 0; g < dim(y, v); ++g) {
          for (std::size_t f = 0; f < dim(u, x); ++f) {
            std::vector<SparseVector::Entry> e;
            const SparseVector ga = a.compose(x, y, v, SparseVector::unit(g), arr.morphism);
            for (const auto& [k, c] : ga.entries()) e.emplace_back(off[x] + k * dim(u, x) + f, c);
            const SparseVector af = a.compose(u, x, y, arr.morphism, SparseVector::unit(f));
            for (const auto& [k, c] : af.entries()) e.emplace_back(off[y] + g * dim(u, y) + k, -c);
            d1.append_column(SparseVector::from_entries(std::move(e)));
          }
        }
      }
      const std::size_t r0 = rank(d0), r1 = rank(d1);
      r.exact = r1 == d1.cols() && r0 == dim(u, v) && r0 + r1 == off[n] && (d0 * d1).is_zero();
    }
  }
  return r;
}

DiagonalClass diagonal_class(const CategoryPtr& a) {
  DiagonalClass out;
  out.resolution = diagonal_resolution(*a);
  if (!out.resolution.exact) {
    throw UnsupportedInput("diagonal_class: the two-term resolution is not exact (not a path category)");
  }
  const std::size_t n = a->num_objects();
  out.op = share(opposite(*a));
  out.tensor = share(tensor(*out.op, *a));
  std::vector<std::vector<Scalar>> mult(n, std::vector<Scalar>(n, 0));
  for (std::size_t x = 0; x < n; ++x) mult[x][x] += 1;
  for (const auto& arr : out.resolution.arrows) mult[arr.target][arr.source] -= 1;
  out.k0 = k0_from_multiplicities(out.tensor, mult, n);
  out.cartan_consistent = cartan_matrix(*a).transpose() * dense(mult, n) == SparseMatrix::identity(n);
  return out;
}

std::vector<std::vector<Scalar>> bimodule_multiplicities(const Bimodule& m) {
  require_directed(*m.a, "bimodule_multiplicities");
  require_directed(*m.b, "bimodule_multiplicities");
  const std::size_t nb = m.a->num_objects(), nc = m.b->num_objects();
  std::vector<std::vector<Scalar>> x(nb, std::vector<Scalar>(nc, 0));
  for (std::size_t u = 0; u < nb; ++u) {
    for (std::size_t v = 0; v < nc; ++v) x[u][v] = static_cast<long>(m.space(u, v).size());
  }
  const SparseMatrix cb = invert(cartan_matrix(*m.a), "Cartan matrix");
  const SparseMatrix cc = invert(cartan_matrix(*m.b), "Cartan matrix");
  // X = C_b N^T C_c.
  return (cb * dense(x, nc) * cc).transpose().to_dense();
}

// ---------------------------------------------------------------------------

KunnethComponents kunneth_split(const HH0Class& x, Workbench& t, Workbench& b, Workbench& c) {
  if (!b.category().concentrated_in_degree_zero() || !c.category().concentrated_in_degree_zero()) {
    throw UnsupportedInput("kunneth_split: factors must be concentrated in degree zero");
  }
  const auto mb = b.mixed(b.params().max_bar_length);
  const auto mcx = c.mixed(c.params().max_bar_length);
  const auto mt = t.mixed(t.params().max_bar_length);
  const auto& qb = b.homology(b.params().max_bar_length, TotalKind::Hochschild, 1, 0);
  const auto& qc = c.homology(c.params().max_bar_length, TotalKind::Hochschild, 1, 0);
  const auto& qt = t.homology(t.params().max_bar_length, TotalKind::Hochschild, 1, 0);
  const Category& cc = c.category();
  const std::size_t nc = cc.num_objects();
  auto product = [&](const SparseVector& beta, const SparseVector& gamma) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, a] : beta.entries()) {
      const auto& wb = mb->words(0)[i];
      for (const auto& [j, g] : gamma.entries()) {
        const auto& wc = mcx->words(0)[j];
        const std::size_t oc = wc.objects[0];
        const HochschildWord w{{wb.objects[0] * nc + oc},
                               {wb.letters[0] * cc.hom(oc, oc).size() + wc.letters[0]}};
        const auto idx = mt->find(0, w);
        if (!idx) throw InconsistentInput("kunneth_split: product word outside the computed range");
        e.emplace_back(*idx, a * g);
      }
    }
    return SparseVector::from_entries(std::move(e));
  };
  const std::size_t db = qb.dimension(), dc = qc.dimension();
  SparseMatrix p(qt.dimension(), db * dc);
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j < dc; ++j) {
      p.set_column(i * dc + j, qt.coordinates(product(qb.representatives()[i], qc.representatives()[j])));
    }
  }
  const auto sol = solve(p, x.coordinates);
  if (!sol) throw InconsistentInput("kunneth_split: class is not in the span of product classes");
  KunnethComponents out;
  out.block = SparseMatrix(db, dc);
  for (std::size_t j = 0; j < dc; ++j) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < db; ++i) {
      const Scalar v = sol->at(i * dc + j);
      if (v != 0) e.emplace_back(i, v);
    }
    out.block.set_column(j, SparseVector::from_entries(std::move(e)));
  }
  out.reconstructs = p.apply(*sol) == x.coordinates;
  out.stable = x.stable && hh0_exact(b) && hh0_exact(c);
  return out;
}

SparseMatrix vertex_basis(Workbench& w) {
  const std::size_t L = w.params().max_bar_length;
  const auto mc = w.mixed(L);
  const auto& q = w.homology(L, TotalKind::Hochschild, 1, 0);
  const Category& c = w.category();
  SparseMatrix out(q.dimension(), c.num_objects());
  for (std::size_t x = 0; x < c.num_objects(); ++x) {
    const auto idx = mc->find(0, HochschildWord{{x}, {c.identity(x)}});
    if (!idx) throw InconsistentInput("vertex_basis: identity word outside the computed range");
    out.set_column(x, q.coordinates(SparseVector::unit(*idx)));
  }
  return out;
}

PairingReport pairing_check(const CategoryPtr& a, const ComputationParams& p) {
  PairingReport r;
  const DiagonalClass dc = diagonal_class(a);
  r.resolution_exact = dc.resolution.exact;
  r.cartan_consistent = dc.cartan_consistent;
  Workbench wt(dc.tensor, p), wop(dc.op, p), wa(a, p);
  const auto ks = kunneth_split(ch(dc.k0, wt), wt, wop, wa);
  // A functional β_i^* goes to Σ_j M_ij γ_j.
  r.matrix = ks.block.transpose();
  r.stable = ks.stable && ks.reconstructs;
  if (r.matrix.rows() == r.matrix.cols()) {
    r.determinant = determinant(r.matrix);
    r.invertible = r.determinant != 0;
  }
  return r;
}

Phi0Result phi0(const K0Class& x, Workbench& t, Workbench& b, Workbench& c) {
  const auto ks = kunneth_split(ch(x, t), t, b, c);
  const auto deltas = delta(c);
  const DeltaVerdict* d0 = nullptr;
  for (const auto& v : deltas) {
    if (v.degree == 0) d0 = &v;
  }
  if (!d0) throw UnsupportedInput("phi0: degree 0 lies outside the window");
  Phi0Result r;
  r.value = ks.block * d0->matrix.transpose();
  if (!ks.stable || d0->verdict == Verdict::Unstable) {
    r.verdict = Verdict::Unstable;
  } else {
    r.verdict = r.value.is_zero() ? Verdict::Zero : Verdict::Nonzero;
  }
  return r;
}

Phi0Result phi0_diagonal(const CategoryPtr& a, const ComputationParams& p) {
  const DiagonalClass dc = diagonal_class(a);
  Workbench wt(dc.tensor, p), wop(dc.op, p), wa(a, p);
  return phi0(dc.k0, wt, wop, wa);
}

GluingComponents gluing_component_check(const CategoryPtr& b, const CategoryPtr& c,
                                        const Bimodule& m, const ComputationParams& p) {
  const GluedCategory g = glue(b, c, m);
  const CategoryPtr d = g.category;
  require_directed(*d, "gluing_component_check");
  const std::size_t nb = b->num_objects(), nc = c->num_objects(), nd = d->num_objects();
  const CategoryPtr dop = share(opposite(*d));
  const CategoryPtr td = share(tensor(*dop, *d));
  Workbench wtd(td, p), wdop(dop, p), wd(d, p);

  // ch[I_D] through the Cartan route: multiplicities (C_D^{-1})^T.
  const SparseMatrix nd_mult = invert(cartan_matrix(*d), "Cartan matrix").transpose();
  const SparseMatrix kv = vertex_split(k0_from_multiplicities(td, nd_mult.to_dense(), nd), wtd, wdop, wd);

  GluingComponents r;
  r.bb = block_of(kv, 0, nb, 0, nb);
  r.cc = block_of(kv, nb, nc, nb, nc);
  r.cb = block_of(kv, nb, nc, 0, nb);
  r.bc = block_of(kv, 0, nb, nb, nc);

  auto diagonal_vertex = [&p](const CategoryPtr& x) {
    const CategoryPtr xop = share(opposite(*x));
    const CategoryPtr tx = share(tensor(*xop, *x));
    Workbench wt(tx, p), wop(xop, p), wx(x, p);
    return vertex_split(diagonal_k0(x, tx), wt, wop, wx);
  };
  r.expected_bb = diagonal_vertex(b);
  r.expected_cc = diagonal_vertex(c);
  {
    const CategoryPtr cop = share(opposite(*c));
    const CategoryPtr tm = share(tensor(*cop, *b));
    Workbench wt(tm, p), wop(cop, p), wb(b, p);
    const SparseMatrix km = vertex_split(k0_from_multiplicities(tm, bimodule_multiplicities(m), nb), wt, wop, wb);
    r.expected_cb = SparseMatrix(km.rows(), km.cols()) - km;
  }
  r.bb_ok = r.bb == r.expected_bb;
  r.cc_ok = r.cc == r.expected_cc;
  r.cb_ok = r.cb == r.expected_cb;
  r.bc_zero = r.bc.is_zero();

  if (diagonal_resolution(*d).exact) {
    K0Class res = diagonal_class(d).k0;
    res.category = td;
    r.resolution_route_agrees = vertex_split(res, wtd, wdop, wd) == kv;
  }
  return r;
}

}  // namespace dgwork
