#include "dgwork/category.hpp"

#include <sstream>
#include <stdexcept>

namespace dgwork {

std::optional<std::size_t> GradedBasis::find(const std::string& label) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t GradedBasis::add(BasisElement e) {
  basis_.push_back(std::move(e));
  return basis_.size() - 1;
}

Category::Category(std::vector<std::string> objects) {
  for (auto& o : objects) add_object(o);
}

void Category::grow(std::size_t old_n) {
  const std::size_t n = objects_.size();
  std::vector<GradedBasis> homs(n * n);
  std::vector<std::vector<SparseVector>> d(n * n);
  for (std::size_t x = 0; x < old_n; ++x) {
    for (std::size_t y = 0; y < old_n; ++y) {
      homs[x * n + y] = std::move(homs_[x * old_n + y]);
      d[x * n + y] = std::move(d_[x * old_n + y]);
    }
  }
  homs_ = std::move(homs);
  d_ = std::move(d);
}

std::size_t Category::add_object(const std::string& name) {
  if (find_object(name)) throw std::invalid_argument("duplicate object: " + name);
  const std::size_t old_n = objects_.size();
  objects_.push_back(name);
  identity_.push_back(npos);
  grow(old_n);
  return old_n;
}

std::size_t Category::add_morphism(std::size_t x, std::size_t y, BasisElement e) {
  auto& h = homs_.at(slot(x, y));
  if (h.find(e.label)) {
    throw std::invalid_argument("duplicate basis label '" + e.label + "' in hom(" +
                                objects_[x] + "," + objects_[y] + ")");
  }
  d_[slot(x, y)].emplace_back();
  return h.add(std::move(e));
}

void Category::set_identity(std::size_t x, std::size_t basis_index) {
  if (basis_index >= hom(x, x).size()) throw std::out_of_range("set_identity: bad index");
  identity_.at(x) = basis_index;
}

void Category::set_differential(std::size_t x, std::size_t y, std::size_t i, SparseVector value) {
  if (!value.empty() && value.back_index() >= hom(x, y).size()) {
    throw std::out_of_range("set_differential: index out of range");
  }
  d_.at(slot(x, y)).at(i) = std::move(value);
}

void Category::set_composite(std::size_t x, std::size_t y, std::size_t z, std::size_t g,
                             std::size_t f, SparseVector value) {
  if (g >= hom(y, z).size() || f >= hom(x, y).size() ||
      (!value.empty() && value.back_index() >= hom(x, z).size())) {
    throw std::out_of_range("set_composite: index out of range");
  }
  auto& table = composites_[{x, y, z}];
  if (value.empty()) {
    table.erase({g, f});
  } else {
    table[{g, f}] = std::move(value);
  }
  if (table.empty()) composites_.erase({x, y, z});
}

void Category::fill_identity_composites() {
  const std::size_t n = num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = hom(x, y);
      for (std::size_t f = 0; f < h.size(); ++f) {
        // id_y ∘ f
        if (has_identity(y)) {
          auto& t = composites_[{x, y, y}];
          t.try_emplace({identity(y), f}, SparseVector::unit(f));
        }
        // f ∘ id_x
        if (has_identity(x)) {
          auto& t = composites_[{x, x, y}];
          t.try_emplace({f, identity(x)}, SparseVector::unit(f));
        }
      }
    }
  }
  for (auto it = composites_.begin(); it != composites_.end();) {
    it = it->second.empty() ? composites_.erase(it) : std::next(it);
  }
}

std::optional<std::size_t> Category::find_object(const std::string& name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == name) return i;
  }
  return std::nullopt;
}

const SparseVector& Category::differential(std::size_t x, std::size_t y, std::size_t i) const {
  return d_[slot(x, y)][i];
}

SparseMatrix Category::differential_matrix(std::size_t x, std::size_t y) const {
  return SparseMatrix(hom(x, y).size(), d_[slot(x, y)]);
}

SparseVector Category::apply_differential(std::size_t x, std::size_t y,
                                          const SparseVector& v) const {
  SparseVector out;
  for (const auto& [i, c] : v.entries()) out.axpy(c, differential(x, y, i));
  return out;
}

const SparseVector& Category::composite(std::size_t x, std::size_t y, std::size_t z,
                                        std::size_t g, std::size_t f) const {
  static const SparseVector zero;
  auto t = composites_.find({x, y, z});
  if (t == composites_.end()) return zero;
  auto e = t->second.find({g, f});
  return e == t->second.end() ? zero : e->second;
}

SparseVector Category::compose(std::size_t x, std::size_t y, std::size_t z,
                               const SparseVector& g, const SparseVector& f) const {
  SparseVector out;
  for (const auto& [gi, gc] : g.entries()) {
    for (const auto& [fi, fc] : f.entries()) out.axpy(gc * fc, composite(x, y, z, gi, fi));
  }
  return out;
}

const std::map<std::pair<std::size_t, std::size_t>, SparseVector>& Category::composites(
    std::size_t x, std::size_t y, std::size_t z) const {
  static const std::map<std::pair<std::size_t, std::size_t>, SparseVector> empty;
  auto t = composites_.find({x, y, z});
  return t == composites_.end() ? empty : t->second;
}

std::size_t Category::total_dimension() const {
  std::size_t n = 0;
  for (const auto& h : homs_) n += h.size();
  return n;
}

bool Category::concentrated_in_degree_zero() const {
  for (const auto& h : homs_) {
    for (const auto& e : h.elements()) {
      if (e.degree != 0) return false;
    }
  }
  return true;
}

bool Category::is_directed() const {
  if (!concentrated_in_degree_zero()) return false;
  const std::size_t n = num_objects();
  for (std::size_t x = 0; x < n; ++x) {
    if (hom(x, x).size() != 1 || !has_identity(x)) return false;
  }
  // Reachability via nonzero homs must be acyclic.
  std::vector<int> state(n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{s, 0}};
    state[s] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next == n) {
        state[v] = 2;
        frames.pop_back();
        continue;
      }
      const std::size_t w = next++;
      if (w == v || hom(v, w).empty()) continue;
      if (state[w] == 1) return false;
      if (state[w] == 0) {
        state[w] = 1;
        frames.emplace_back(w, 0);
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

bool Functor::unital() const {
  for (std::size_t x = 0; x < source->num_objects(); ++x) {
    const std::size_t fx = object_map[x];
    const auto& img = on_hom(x, x).column(source->identity(x));
    if (!(img == SparseVector::unit(target->identity(fx)))) return false;
  }
  return true;
}

Functor Functor::identity(std::shared_ptr<const Category> c) {
  Functor f;
  f.source = c;
  f.target = c;
  const std::size_t n = c->num_objects();
  for (std::size_t x = 0; x < n; ++x) f.object_map.push_back(x);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      f.hom_map.push_back(SparseMatrix::identity(c->hom(x, y).size()));
    }
  }
  return f;
}

Functor Functor::compose(const Functor& g, const Functor& f) {
  if (!(*f.target == *g.source)) throw std::invalid_argument("Functor::compose: mismatch");
  Functor h;
  h.source = f.source;
  h.target = g.target;
  const std::size_t n = f.source->num_objects();
  for (std::size_t x = 0; x < n; ++x) h.object_map.push_back(g.object_map[f.object_map[x]]);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      h.hom_map.push_back(g.on_hom(f.object_map[x], f.object_map[y]) * f.on_hom(x, y));
    }
  }
  return h;
}

std::size_t Bimodule::total_dimension() const {
  std::size_t n = 0;
  for (const auto& s : spaces) n += s.size();
  return n;
}

Bimodule Bimodule::zero(std::shared_ptr<const Category> a, std::shared_ptr<const Category> b) {
  Bimodule m;
  m.spaces.resize(a->num_objects() * b->num_objects());
  m.d.resize(m.spaces.size());
  m.a = std::move(a);
  m.b = std::move(b);
  return m;
}

// ---------------------------------------------------------------------------

bool ValidationReport::has_malformed() const {
  for (const auto& i : issues) {
    if (i.kind == ValidationIssue::Kind::Malformed) return true;
  }
  return false;
}

bool ValidationReport::has_axiom_failure(const std::string& rule) const {
  for (const auto& i : issues) {
    if (i.kind == ValidationIssue::Kind::Axiom && i.rule == rule) return true;
  }
  return false;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& i : issues) {
    os << (i.kind == ValidationIssue::Kind::Malformed ? "malformed" : "axiom " + i.rule) << ": "
       << i.detail << "\n";
  }
  return os.str();
}

namespace {

constexpr std::size_t kMaxIssues = 50;

std::string name_of(const Category& c, std::size_t x, std::size_t y, std::size_t i) {
  return c.hom(x, y)[i].label + ":" + c.object_name(x) + "->" + c.object_name(y);
}

int vector_degree_check(const Category& c, std::size_t x, std::size_t y, const SparseVector& v,
                        int expected) {
  for (const auto& [i, a] : v.entries()) {
    (void)a;
    if (c.hom(x, y)[i].degree != expected) return -1;
  }
  return 0;
}

}  // namespace

ValidationReport validate(const Category& c) {
  ValidationReport r;
  auto issue = [&r](ValidationIssue::Kind k, std::string rule, std::string detail) {
    if (r.issues.size() < kMaxIssues) r.issues.push_back({k, std::move(rule), std::move(detail)});
  };
  using K = ValidationIssue::Kind;
  const std::size_t n = c.num_objects();

  // Structural checks.
  for (std::size_t x = 0; x < n; ++x) {
    if (!c.has_identity(x)) {
      issue(K::Malformed, "identity", "object " + c.object_name(x) + " has no identity");
    } else if (c.hom(x, x)[c.identity(x)].degree != 0) {
      issue(K::Malformed, "identity", "identity of " + c.object_name(x) + " is not in degree 0");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = c.hom(x, y);
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (vector_degree_check(c, x, y, c.differential(x, y, i), h[i].degree + 1) != 0) {
          issue(K::Malformed, "degree", "d(" + name_of(c, x, y, i) + ") has wrong degree");
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        for (const auto& [gf, v] : c.composites(x, y, z)) {
          const int deg = c.hom(y, z)[gf.first].degree + c.hom(x, y)[gf.second].degree;
          if (vector_degree_check(c, x, z, v, deg) != 0) {
            issue(K::Malformed, "degree",
                  "composite " + name_of(c, y, z, gf.first) + " o " + name_of(c, x, y, gf.second) +
                      " has wrong degree");
          }
        }
      }
    }
  }
  if (r.has_malformed()) return r;

  // d∘d = 0 and d(id) = 0.
  for (std::size_t x = 0; x < n; ++x) {
    if (!c.differential(x, x, c.identity(x)).empty()) {
      issue(K::Axiom, "unit", "d(id) != 0 at " + c.object_name(x));
    }
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < c.hom(x, y).size(); ++i) {
        if (!c.apply_differential(x, y, c.differential(x, y, i)).empty()) {
          issue(K::Axiom, "d_squared",
                "d(d(" + name_of(c, x, y, i) + ")) != 0 in hom(" + c.object_name(x) + "," +
                    c.object_name(y) + ")");
        }
      }
    }
  }
  // Units.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
        const auto unit = SparseVector::unit(f);
        if (!(c.composite(x, y, y, c.identity(y), f) == unit) ||
            !(c.composite(x, x, y, f, c.identity(x)) == unit)) {
          issue(K::Axiom, "unit", "identity does not act as unit on " + name_of(c, x, y, f));
        }
      }
    }
  }
  // Leibniz: d(g f) = d(g) f + (-1)^{|g|} g d(f).
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& hf = c.hom(x, y);
        const auto& hg = c.hom(y, z);
        for (std::size_t g = 0; g < hg.size(); ++g) {
          for (std::size_t f = 0; f < hf.size(); ++f) {
            const SparseVector lhs = c.apply_differential(x, z, c.composite(x, y, z, g, f));
            SparseVector rhs = c.compose(x, y, z, c.differential(y, z, g), SparseVector::unit(f));
            rhs.axpy(parity_sign(hg[g].degree),
                     c.compose(x, y, z, SparseVector::unit(g), c.differential(x, y, f)));
            if (!(lhs == rhs)) {
              issue(K::Axiom, "leibniz",
                    "d(g o f) mismatch for g=" + name_of(c, y, z, g) + ", f=" + name_of(c, x, y, f));
            }
          }
        }
      }
    }
  }
  // Associativity: (h g) f = h (g f).
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t x = 0; x < n; ++x) {
      if (c.hom(w, x).empty()) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (c.hom(x, y).empty()) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (c.hom(y, z).empty()) continue;
          for (std::size_t h = 0; h < c.hom(y, z).size(); ++h) {
            for (std::size_t g = 0; g < c.hom(x, y).size(); ++g) {
              const SparseVector hg = c.composite(x, y, z, h, g);
              for (std::size_t f = 0; f < c.hom(w, x).size(); ++f) {
                const SparseVector left = c.compose(w, x, z, hg, SparseVector::unit(f));
                const SparseVector right =
                    c.compose(w, y, z, SparseVector::unit(h), c.composite(w, x, y, g, f));
                if (!(left == right)) {
                  issue(K::Axiom, "associativity",
                        "(h g) f != h (g f) for h=" + name_of(c, y, z, h) +
                            ", g=" + name_of(c, x, y, g) + ", f=" + name_of(c, w, x, f));
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

ValidationReport validate(const Functor& fun) {
  ValidationReport r;
  using K = ValidationIssue::Kind;
  const Category& s = *fun.source;
  const Category& t = *fun.target;
  const std::size_t n = s.num_objects();
  if (fun.object_map.size() != n || fun.hom_map.size() != n * n) {
    r.issues.push_back({K::Malformed, "shape", "functor tables do not match source"});
    return r;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& m = fun.on_hom(x, y);
      const std::size_t fx = fun.object_map[x], fy = fun.object_map[y];
      if (m.rows() != t.hom(fx, fy).size() || m.cols() != s.hom(x, y).size()) {
        r.issues.push_back({K::Malformed, "shape", "hom map shape mismatch"});
        return r;
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t fx = fun.object_map[x];
    if (!(fun.on_hom(x, x).column(s.identity(x)) == SparseVector::unit(t.identity(fx)))) {
      r.issues.push_back({K::Axiom, "unit", "F(id) != id at " + s.object_name(x)});
    }
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t fy = fun.object_map[y];
      const auto& m = fun.on_hom(x, y);
      for (std::size_t i = 0; i < s.hom(x, y).size(); ++i) {
        if (!(m.apply(s.differential(x, y, i)) == t.apply_differential(fx, fy, m.column(i)))) {
          r.issues.push_back({K::Axiom, "differential", "F does not commute with d"});
        }
      }
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t fz = fun.object_map[z];
        for (std::size_t g = 0; g < s.hom(y, z).size(); ++g) {
          for (std::size_t f = 0; f < s.hom(x, y).size(); ++f) {
            const auto lhs = fun.on_hom(x, z).apply(s.composite(x, y, z, g, f));
            const auto rhs = t.compose(fx, fy, fz, fun.on_hom(y, z).column(g),
                                       fun.on_hom(x, y).column(f));
            if (!(lhs == rhs)) {
              r.issues.push_back({K::Axiom, "composition", "F(g f) != F(g) F(f)"});
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace dgwork
