#include "dgwork/constructions.hpp"

#include <algorithm>
#include <map>

#include "dgwork/linalg.hpp"

namespace dgwork {

Category opposite(const Category& c) {
  Category o(c.objects());
  const std::size_t n = c.num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& e : c.hom(y, x).elements()) o.add_morphism(x, y, e);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    o.set_identity(x, c.identity(x));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < c.hom(y, x).size(); ++i) {
        o.set_differential(x, y, i, c.differential(y, x, i));
      }
    }
  }
  // f ∈ op(Y,Z) = c(Z,Y), g ∈ op(X,Y) = c(Y,X): f ∘op g = (-1)^{|f||g|} g ∘ f.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [gf, v] : c.composites(z, y, x)) {
          const auto [g, f] = gf;  // g ∈ c(Y,X), f ∈ c(Z,Y)
          const int s = koszul_sign(c.hom(y, x)[g].degree, c.hom(z, y)[f].degree);
          o.set_composite(x, y, z, f, g, Scalar(s) * v);
        }
      }
    }
  }
  return o;
}

Category tensor(const Category& a, const Category& b) {
  const std::size_t na = a.num_objects(), nb = b.num_objects();
  auto obj = [nb](std::size_t x, std::size_t u) { return x * nb + u; };
  Category t;
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t u = 0; u < nb; ++u) {
      t.add_object("(" + a.object_name(x) + "," + b.object_name(u) + ")");
    }
  }
  // Basis index of f ⊗ g in hom((x,u),(y,v)) is f * dim b(u,v) + g.
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t u = 0; u < nb; ++u) {
      for (std::size_t y = 0; y < na; ++y) {
        for (std::size_t v = 0; v < nb; ++v) {
          for (const auto& f : a.hom(x, y).elements()) {
            for (const auto& g : b.hom(u, v).elements()) {
              t.add_morphism(obj(x, u), obj(y, v), {f.label + "*" + g.label, f.degree + g.degree});
            }
          }
        }
      }
    }
  }
  auto pair_vector = [](const SparseVector& p, const SparseVector& q, std::size_t qdim) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : p.entries()) {
      for (const auto& [j, d] : q.entries()) e.emplace_back(i * qdim + j, c * d);
    }
    return SparseVector::from_entries(std::move(e));
  };
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t u = 0; u < nb; ++u) {
      const auto& ida = a.identity(x);
      t.set_identity(obj(x, u), ida * b.hom(u, u).size() + b.identity(u));
      for (std::size_t y = 0; y < na; ++y) {
        for (std::size_t v = 0; v < nb; ++v) {
          const std::size_t bd = b.hom(u, v).size();
          for (std::size_t f = 0; f < a.hom(x, y).size(); ++f) {
            for (std::size_t g = 0; g < bd; ++g) {
              // d(f⊗g) = df⊗g + (-1)^{|f|} f⊗dg
              SparseVector dv =
                  pair_vector(a.differential(x, y, f), SparseVector::unit(g), bd);
              dv.axpy(parity_sign(a.hom(x, y)[f].degree),
                      pair_vector(SparseVector::unit(f), b.differential(u, v, g), bd));
              t.set_differential(obj(x, u), obj(y, v), f * bd + g, std::move(dv));
            }
          }
        }
      }
    }
  }
  // (g1⊗g2)∘(f1⊗f2) = (-1)^{|g2||f1|} (g1∘f1)⊗(g2∘f2)
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < na; ++y) {
      for (std::size_t z = 0; z < na; ++z) {
        const auto& ca = a.composites(x, y, z);
        if (ca.empty()) continue;
        for (std::size_t u = 0; u < nb; ++u) {
          for (std::size_t v = 0; v < nb; ++v) {
            for (std::size_t w = 0; w < nb; ++w) {
              const auto& cb = b.composites(u, v, w);
              if (cb.empty()) continue;
              const std::size_t d_uv = b.hom(u, v).size(), d_vw = b.hom(v, w).size(),
                                d_uw = b.hom(u, w).size();
              for (const auto& [gf1, r1] : ca) {
                const int deg_f1 = a.hom(x, y)[gf1.second].degree;
                for (const auto& [gf2, r2] : cb) {
                  const int deg_g2 = b.hom(v, w)[gf2.first].degree;
                  t.set_composite(obj(x, u), obj(y, v), obj(z, w), gf1.first * d_vw + gf2.first,
                                  gf1.second * d_uv + gf2.second,
                                  Scalar(koszul_sign(deg_g2, deg_f1)) * pair_vector(r1, r2, d_uw));
                }
              }
            }
          }
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

/// Basis layout of an amplified hom space.
class MatrixHom {
 public:
  MatrixHom(const Category& c, std::size_t x, std::size_t y, std::size_t n)
      : n_(n), dim_(c.hom(x, y).size()), id_(x == y ? c.identity(x) : Category::npos) {}

  std::size_t size() const { return n_ * n_ * dim_; }
  // Raw slot (i,j,f); slot (0,0,id) holds I.
  std::size_t slot(std::size_t i, std::size_t j, std::size_t f) const {
    return (i * n_ + j) * dim_ + f;
  }

  /// E_ij ⊗ v expressed in the basis.
  void embed(SparseVector& out, const Scalar& c, std::size_t i, std::size_t j,
             const SparseVector& v) const {
    std::vector<SparseVector::Entry> e;
    for (const auto& [f, a] : v.entries()) {
      if (i == 0 && j == 0 && f == id_) {
        // E_11 ⊗ id = I - Σ_{k≥2} E_kk ⊗ id
        e.emplace_back(slot(0, 0, f), c * a);
        for (std::size_t k = 1; k < n_; ++k) e.emplace_back(slot(k, k, f), -c * a);
      } else {
        e.emplace_back(slot(i, j, f), c * a);
      }
    }
    out.axpy(1, SparseVector::from_entries(std::move(e)));
  }

  bool is_identity(std::size_t s) const { return id_ != Category::npos && s == id_; }
  std::size_t row(std::size_t s) const { return s / dim_ / n_; }
  std::size_t col(std::size_t s) const { return (s / dim_) % n_; }
  std::size_t morphism(std::size_t s) const { return s % dim_; }

 private:
  std::size_t n_, dim_, id_;
};

}  // namespace

Amplification matrix_amplification(const CategoryPtr& cp, std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix_amplification: n must be >= 1");
  const Category& c = *cp;
  const std::size_t m = c.num_objects();
  Category a(c.objects());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const MatrixHom h(c, x, y, n);
      for (std::size_t s = 0; s < h.size(); ++s) {
        const auto& e = c.hom(x, y)[h.morphism(s)];
        std::string label = e.label;
        if (n > 1 && !h.is_identity(s)) {
          label = "e" + std::to_string(h.row(s) + 1) + std::to_string(h.col(s) + 1) + "." + e.label;
        }
        a.add_morphism(x, y, {label, e.degree});
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    a.set_identity(x, c.identity(x));
    for (std::size_t y = 0; y < m; ++y) {
      const MatrixHom h(c, x, y, n);
      for (std::size_t s = 0; s < h.size(); ++s) {
        if (h.is_identity(s)) continue;  // d(I) = 0
        SparseVector dv;
        h.embed(dv, 1, h.row(s), h.col(s), c.differential(x, y, h.morphism(s)));
        a.set_differential(x, y, s, std::move(dv));
      }
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        const MatrixHom hxy(c, x, y, n), hyz(c, y, z, n), hxz(c, x, z, n);
        for (std::size_t sg = 0; sg < hyz.size(); ++sg) {
          for (std::size_t sf = 0; sf < hxy.size(); ++sf) {
            SparseVector r;
            if (hyz.is_identity(sg)) {
              r = SparseVector::unit(sf);
            } else if (hxy.is_identity(sf)) {
              r = SparseVector::unit(sg);
            } else if (hyz.col(sg) == hxy.row(sf)) {
              hxz.embed(r, 1, hyz.row(sg), hxy.col(sf),
                        c.composite(x, y, z, hyz.morphism(sg), hxy.morphism(sf)));
            }
            if (!r.empty()) a.set_composite(x, y, z, sg, sf, std::move(r));
          }
        }
      }
    }
  }
  Amplification out;
  out.category = share(std::move(a));
  out.inclusion.source = cp;
  out.inclusion.target = out.category;
  for (std::size_t x = 0; x < m; ++x) out.inclusion.object_map.push_back(x);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const MatrixHom h(c, x, y, n);
      SparseMatrix mat(h.size(), c.hom(x, y).size());
      for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
        SparseVector v;
        h.embed(v, 1, 0, 0, SparseVector::unit(f));
        mat.set_column(f, std::move(v));
      }
      out.inclusion.hom_map.push_back(std::move(mat));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct QuotientBuilder {
  const Category& c;
  std::size_t e;
  DegreeWindow window;
  std::size_t max_eps;
  Category q;
  // Word f_0 .. f_k (written right to left: f_k ε ⋯ ε f_0) per hom slot.
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
  std::vector<std::vector<std::vector<std::size_t>>> words;

  std::size_t n() const { return c.num_objects(); }
  std::size_t src(std::size_t x, std::size_t j) const { return j == 0 ? x : e; }
  std::size_t tgt(std::size_t y, std::size_t j, std::size_t k) const { return j == k ? y : e; }

  int degree(std::size_t x, std::size_t y, const std::vector<std::size_t>& w) const {
    const std::size_t k = w.size() - 1;
    int d = -static_cast<int>(k);
    for (std::size_t j = 0; j <= k; ++j) d += c.hom(src(x, j), tgt(y, j, k))[w[j]].degree;
    return d;
  }

  std::string label(std::size_t x, std::size_t y, const std::vector<std::size_t>& w) const {
    const std::size_t k = w.size() - 1;
    std::string s;
    for (std::size_t j = k + 1; j-- > 0;) {
      s += c.hom(src(x, j), tgt(y, j, k))[w[j]].label;
      if (j > 0) s += ".eps.";
    }
    return s;
  }

  // Degree range of a single letter in hom(s, t).
  std::pair<int, int> range(std::size_t s, std::size_t t) const {
    const auto& h = c.hom(s, t);
    if (h.empty()) return {1, 0};
    int lo = h[0].degree, hi = h[0].degree;
    for (const auto& b : h.elements()) {
      lo = std::min(lo, b.degree);
      hi = std::max(hi, b.degree);
    }
    return {lo, hi};
  }

  /// Can letters j+1..k still bring the degree into the window?
  bool feasible(std::size_t x, std::size_t y, std::size_t j, std::size_t k, int partial) const {
    int lo = partial, hi = partial;
    for (std::size_t i = j + 1; i <= k; ++i) {
      const auto [a, b] = range(src(x, i), tgt(y, i, k));
      if (a > b) return false;
      lo += a;
      hi += b;
    }
    return hi >= window.lo && lo <= window.hi;
  }

  void enumerate(std::size_t x, std::size_t y, std::vector<std::size_t>& w, std::size_t k,
                 int partial) {
    const std::size_t j = w.size();
    const auto& h = c.hom(src(x, j), tgt(y, j, k));
    for (std::size_t f = 0; f < h.size(); ++f) {
      if (!feasible(x, y, j, k, partial + h[f].degree)) continue;
      w.push_back(f);
      if (j == k) {
        const int d = degree(x, y, w);
        if (window.contains(d)) {
          auto& idx = index[x * n() + y];
          idx[w] = q.add_morphism(x, y, {label(x, y, w), d});
          words[x * n() + y].push_back(w);
        }
      } else {
        enumerate(x, y, w, k, partial + h[f].degree);
      }
      w.pop_back();
    }
  }

  void add_word(SparseVector& out, const Scalar& coeff, std::size_t x, std::size_t y,
                const std::vector<std::size_t>& w) const {
    const auto& idx = index[x * n() + y];
    auto it = idx.find(w);
    if (it != idx.end()) out.axpy(coeff, SparseVector::unit(it->second));
  }

  /// Replaces positions [from, to] of w by each basis term of v.
  void splice(SparseVector& out, const Scalar& coeff, std::size_t x, std::size_t y,
              const std::vector<std::size_t>& w, std::size_t from, std::size_t to,
              const SparseVector& v) const {
    for (const auto& [i, a] : v.entries()) {
      std::vector<std::size_t> nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
      nw.push_back(i);
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(to) + 1, w.end());
      add_word(out, coeff * a, x, y, nw);
    }
  }

  SparseVector differential(std::size_t x, std::size_t y, const std::vector<std::size_t>& w) const {
    const std::size_t k = w.size() - 1;
    SparseVector out;
    int prefix = 0;  // degree of everything written left of the current symbol
    for (std::size_t j = k + 1; j-- > 0;) {
      const std::size_t s = src(x, j), t = tgt(y, j, k);
      splice(out, parity_sign(prefix), x, y, w, j, j, c.differential(s, t, w[j]));
      prefix += c.hom(s, t)[w[j]].degree;
      if (j == 0) break;
      // dε = id_e merges f_j and f_{j-1}.
      const std::size_t s2 = src(x, j - 1);
      splice(out, parity_sign(prefix), x, y, w, j - 1, j,
             c.composite(s2, e, t, w[j], w[j - 1]));
      prefix -= 1;
    }
    return out;
  }

  SparseVector compose(std::size_t x, std::size_t y, std::size_t z,
                       const std::vector<std::size_t>& g, const std::vector<std::size_t>& f) const {
    // g ∘ f: merge the last letter of f with the first of g.
    const std::size_t kf = f.size() - 1, kg = g.size() - 1;
    if (kf + kg > max_eps) return {};
    const std::size_t s = src(x, kf), t = tgt(z, 0, kg);
    std::vector<std::size_t> w = f;
    w.insert(w.end(), g.begin(), g.end());
    SparseVector out;
    splice(out, 1, x, z, w, kf, kf + 1, c.composite(s, y, t, g[0], f[kf]));
    return out;
  }
};

}  // namespace

Category drinfeld_quotient(const Category& c, std::size_t e, DegreeWindow window,
                           std::size_t max_epsilons) {
  if (e >= c.num_objects()) throw std::out_of_range("drinfeld_quotient: unknown object");
  if (window.lo > -1 || window.hi < 0) {
    throw DegenerateWindow("degree window [" + std::to_string(window.lo) + "," +
                           std::to_string(window.hi) + "] must contain degrees -1 and 0");
  }
  const std::size_t n = c.num_objects();
  QuotientBuilder qb{c, e, window, max_epsilons, Category(c.objects()), {}, {}};
  qb.index.resize(n * n);
  qb.words.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k <= max_epsilons; ++k) {
        std::vector<std::size_t> w;
        if (qb.feasible(x, y, static_cast<std::size_t>(-1), k, -static_cast<int>(k))) {
          qb.enumerate(x, y, w, k, -static_cast<int>(k));
        }
      }
    }
  }
  Category& q = qb.q;
  for (std::size_t x = 0; x < n; ++x) {
    q.set_identity(x, qb.index[x * n + x].at({c.identity(x)}));
    for (std::size_t y = 0; y < n; ++y) {
      const auto& ws = qb.words[x * n + y];
      for (std::size_t i = 0; i < ws.size(); ++i) q.set_differential(x, y, i, qb.differential(x, y, ws[i]));
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& wf = qb.words[x * n + y];
        const auto& wg = qb.words[y * n + z];
        for (std::size_t g = 0; g < wg.size(); ++g) {
          for (std::size_t f = 0; f < wf.size(); ++f) {
            auto r = qb.compose(x, y, z, wg[g], wf[f]);
            if (!r.empty()) q.set_composite(x, y, z, g, f, std::move(r));
          }
        }
      }
    }
  }
  return q;
}

// ---------------------------------------------------------------------------

GluedCategory glue(const Bimodule& m) {
  const Category& a = *m.a;
  const Category& b = *m.b;
  const std::size_t na = a.num_objects(), nb = b.num_objects();
  bool clash = false;
  for (const auto& name : a.objects()) clash = clash || b.find_object(name).has_value();
  GluedCategory out;
  Category g;
  for (const auto& name : a.objects()) g.add_object(clash ? name + "_a" : name);
  for (const auto& name : b.objects()) g.add_object(clash ? name + "_b" : name);
  for (std::size_t x = 0; x < na; ++x) {
    out.side.push_back(Side::A);
    out.origin.push_back(x);
  }
  for (std::size_t y = 0; y < nb; ++y) {
    out.side.push_back(Side::B);
    out.origin.push_back(y);
  }
  auto copy_block = [&g](const Category& c, std::size_t off) {
    const std::size_t n = c.num_objects();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (const auto& e : c.hom(x, y).elements()) g.add_morphism(off + x, off + y, e);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (c.has_identity(x)) g.set_identity(off + x, c.identity(x));
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t i = 0; i < c.hom(x, y).size(); ++i) {
          g.set_differential(off + x, off + y, i, c.differential(x, y, i));
        }
        for (std::size_t z = 0; z < n; ++z) {
          for (const auto& [gf, v] : c.composites(x, y, z)) {
            g.set_composite(off + x, off + y, off + z, gf.first, gf.second, v);
          }
        }
      }
    }
  };
  copy_block(a, 0);
  copy_block(b, na);
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      for (const auto& e : m.space(x, y).elements()) g.add_morphism(x, na + y, e);
      const auto& dv = m.d[m.slot(x, y)];
      for (std::size_t i = 0; i < dv.size(); ++i) g.set_differential(x, na + y, i, dv[i]);
    }
  }
  for (const auto& [key, table] : m.act_a) {
    const auto [x2, x, y] = key;
    for (const auto& [mf, v] : table) g.set_composite(x2, x, na + y, mf.first, mf.second, v);
  }
  for (const auto& [key, table] : m.act_b) {
    const auto [x, y, y2] = key;
    for (const auto& [gm, v] : table) g.set_composite(x, na + y, na + y2, gm.first, gm.second, v);
  }
  g.fill_identity_composites();
  out.category = share(std::move(g));
  return out;
}

GluedCategory glue(const CategoryPtr& a, const CategoryPtr& b, const Bimodule& m) {
  if (!(*m.a == *a) || !(*m.b == *b)) {
    throw OrientationError("bimodule is not oriented over (A, B): acting categories do not match");
  }
  return glue(m);
}

ValidationReport validate(const Bimodule& m) {
  ValidationReport r;
  using K = ValidationIssue::Kind;
  const std::size_t cells = m.a->num_objects() * m.b->num_objects();
  if (m.spaces.size() != cells || m.d.size() != cells) {
    r.issues.push_back({K::Malformed, "shape", "bimodule tables do not match object counts"});
    return r;
  }
  for (std::size_t s = 0; s < cells; ++s) {
    if (m.d[s].size() != m.spaces[s].size()) {
      r.issues.push_back({K::Malformed, "shape", "bimodule differential has wrong size"});
      return r;
    }
  }
  try {
    return validate(*glue(m).category);
  } catch (const std::exception& ex) {
    r.issues.push_back({K::Malformed, "shape", ex.what()});
    return r;
  }
}

Bimodule diagonal_bimodule(const CategoryPtr& ap) {
  const Category& a = *ap;
  const std::size_t n = a.num_objects();
  Bimodule m = Bimodule::zero(ap, ap);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m.spaces[m.slot(x, y)] = a.hom(x, y);
      for (std::size_t i = 0; i < a.hom(x, y).size(); ++i) {
        m.d[m.slot(x, y)].push_back(a.differential(x, y, i));
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [gf, v] : a.composites(x, y, z)) {
          const auto [g, f] = gf;
          // m ∘ f with f ∈ A(x, y), m ∈ M(y, z); identity actions stay implicit.
          if (!(x == y && f == a.identity(x))) m.act_a[{x, y, z}][{g, f}] = v;
          // g ∘ m with m ∈ M(x, y), g ∈ A(y, z).
          if (!(y == z && g == a.identity(y))) m.act_b[{x, y, z}][{g, f}] = v;
        }
      }
    }
  }
  return m;
}

namespace {

SparseVector act_a_apply(const Bimodule& m, std::size_t x2, std::size_t x, std::size_t y,
                         const SparseVector& mv, const SparseVector& fv) {
  SparseVector out;
  auto t = m.act_a.find({x2, x, y});
  for (const auto& [f, cf] : fv.entries()) {
    if (x2 == x && f == m.a->identity(x)) {
      out.axpy(cf, mv);
      continue;
    }
    if (t == m.act_a.end()) continue;
    for (const auto& [mi, cm] : mv.entries()) {
      auto e = t->second.find({mi, f});
      if (e != t->second.end()) out.axpy(cf * cm, e->second);
    }
  }
  return out;
}

SparseVector act_b_apply(const Bimodule& m, std::size_t x, std::size_t y, std::size_t y2,
                         const SparseVector& gv, const SparseVector& mv) {
  SparseVector out;
  auto t = m.act_b.find({x, y, y2});
  for (const auto& [g, cg] : gv.entries()) {
    if (y == y2 && g == m.b->identity(y)) {
      out.axpy(cg, mv);
      continue;
    }
    if (t == m.act_b.end()) continue;
    for (const auto& [mi, cm] : mv.entries()) {
      auto e = t->second.find({g, mi});
      if (e != t->second.end()) out.axpy(cg * cm, e->second);
    }
  }
  return out;
}

}  // namespace

Bimodule restrict_bimodule(const Functor& f, const Functor& g, const Bimodule& m) {
  if (!(*f.target == *m.a) || !(*g.target == *m.b)) {
    throw OrientationError("restrict_bimodule: functor targets do not match the bimodule");
  }
  const Category& a2 = *f.source;
  const Category& b2 = *g.source;
  Bimodule r = Bimodule::zero(f.source, g.source);
  const std::size_t na = a2.num_objects(), nb = b2.num_objects();
  // Per cell: chosen image vectors in M(FX, GY) and a solver for coordinates.
  std::vector<ColumnEchelon> solvers;
  std::vector<std::vector<SparseVector>> images(na * nb);
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t fx = f.object_map[x], gy = g.object_map[y];
      const auto& space = m.space(fx, gy);
      const SparseVector fid = f.on_hom(x, x).column(a2.identity(x));
      const SparseVector gid = g.on_hom(y, y).column(b2.identity(y));
      ColumnEchelon ech(space.size(), true);
      for (std::size_t i = 0; i < space.size(); ++i) {
        const SparseVector p =
            act_b_apply(m, fx, gy, gy, gid, act_a_apply(m, fx, fx, gy, SparseVector::unit(i), fid));
        if (ech.insert(p, images[r.slot(x, y)].size()).residual.empty()) continue;
        images[r.slot(x, y)].push_back(p);
        r.spaces[r.slot(x, y)].add(space[i]);
      }
      solvers.push_back(ColumnEchelon(space.size(), true));
      for (std::size_t j = 0; j < images[r.slot(x, y)].size(); ++j) {
        solvers.back().insert(images[r.slot(x, y)][j], j);
      }
    }
  }
  auto coords = [&](std::size_t x, std::size_t y, const SparseVector& v) {
    auto red = solvers[r.slot(x, y)].reduce(v);
    if (!red.residual.empty()) throw InconsistentInput("restrict_bimodule: image not closed");
    return -red.combination;
  };
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      const std::size_t fx = f.object_map[x], gy = g.object_map[y];
      for (const auto& v : images[r.slot(x, y)]) {
        SparseVector dv;
        for (const auto& [i, c] : v.entries()) dv.axpy(c, m.d[m.slot(fx, gy)][i]);
        r.d[r.slot(x, y)].push_back(coords(x, y, dv));
      }
    }
  }
  for (std::size_t x2 = 0; x2 < na; ++x2) {
    for (std::size_t x = 0; x < na; ++x) {
      for (std::size_t y = 0; y < nb; ++y) {
        const auto& imgs = images[r.slot(x, y)];
        for (std::size_t fi = 0; fi < a2.hom(x2, x).size(); ++fi) {
          if (x2 == x && fi == a2.identity(x)) continue;
          const SparseVector fv = f.on_hom(x2, x).column(fi);
          for (std::size_t mi = 0; mi < imgs.size(); ++mi) {
            auto v = act_a_apply(m, f.object_map[x2], f.object_map[x], g.object_map[y], imgs[mi], fv);
            if (v.empty()) continue;
            r.act_a[{x2, x, y}][{mi, fi}] = coords(x2, y, v);
          }
        }
      }
    }
  }
  for (std::size_t x = 0; x < na; ++x) {
    for (std::size_t y = 0; y < nb; ++y) {
      const auto& imgs = images[r.slot(x, y)];
      for (std::size_t y2 = 0; y2 < nb; ++y2) {
        for (std::size_t gi = 0; gi < b2.hom(y, y2).size(); ++gi) {
          if (y == y2 && gi == b2.identity(y)) continue;
          const SparseVector gv = g.on_hom(y, y2).column(gi);
          for (std::size_t mi = 0; mi < imgs.size(); ++mi) {
            auto v = act_b_apply(m, f.object_map[x], g.object_map[y], g.object_map[y2], gv, imgs[mi]);
            if (v.empty()) continue;
            r.act_b[{x, y, y2}][{gi, mi}] = coords(x, y2, v);
          }
        }
      }
    }
  }
  return r;
}

Bimodule point_bimodule(const CategoryPtr& a, const CategoryPtr& b, std::size_t x, std::size_t y) {
  Bimodule m = Bimodule::zero(a, b);
  m.spaces[m.slot(x, y)].add({"m", 0});
  m.d[m.slot(x, y)].emplace_back();
  return m;
}

Functor constant_functor(const CategoryPtr& c, const CategoryPtr& target, std::size_t t) {
  Functor f;
  f.source = c;
  f.target = target;
  const std::size_t n = c->num_objects();
  f.object_map.assign(n, t);
  const std::size_t dim = target->hom(t, t).size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      SparseMatrix mat(dim, c->hom(x, y).size());
      if (x == y) mat.set_column(c->identity(x), SparseVector::unit(target->identity(t)));
      f.hom_map.push_back(std::move(mat));
    }
  }
  return f;
}

}  // namespace dgwork
