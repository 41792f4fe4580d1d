#include "dgwork/catalog.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "dgwork/linalg.hpp"

namespace dgwork {

namespace {

struct PathTable {
  // Per (x, y): list of paths, each a sequence of arrow indices in travel order.
  std::vector<std::vector<std::vector<std::size_t>>> paths;
  std::size_t n = 0;
};

PathTable enumerate_paths(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& ends) {
  PathTable t;
  t.n = n;
  t.paths.resize(n * n);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> walk =
      [&](std::size_t start, std::size_t at, std::vector<std::size_t>& p) {
        t.paths[start * n + at].push_back(p);
        for (std::size_t a = 0; a < ends.size(); ++a) {
          if (ends[a].first != at) continue;
          p.push_back(a);
          walk(start, ends[a].second, p);
          p.pop_back();
        }
      };
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> p;
    walk(x, x, p);
  }
  return t;
}

std::vector<std::pair<std::size_t, std::size_t>> resolve_arrows(const std::vector<std::string>& vertices,
                                                                const std::vector<Arrow>& arrows) {
  auto index = [&](const std::string& v) {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    if (it == vertices.end()) throw std::invalid_argument("quiver: unknown vertex " + v);
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (const auto& a : arrows) ends.emplace_back(index(a.source), index(a.target));
  // Kahn's algorithm.
  const std::size_t n = vertices.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& [s, t] : ends) ++indeg[t];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& [s, t] : ends) {
      if (s == v && --indeg[t] == 0) ready.push_back(t);
    }
  }
  if (seen != n) throw CycleDetected("quiver has an oriented cycle");
  return ends;
}

}  // namespace

DimTable quiver_hh_oracle(const std::vector<std::string>& vertices, const std::vector<Arrow>& arrows) {
  const auto ends = resolve_arrows(vertices, arrows);
  const std::size_t n = vertices.size();
  const PathTable pt = enumerate_paths(n, ends);
  // Offsets of the summands e_v A e_v and e_{s(α)} A e_{t(α)} (paths t → s).
  std::vector<std::size_t> off0(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) off0[v + 1] = off0[v] + pt.paths[v * n + v].size();
  std::vector<std::size_t> off1(ends.size() + 1, 0);
  for (std::size_t a = 0; a < ends.size(); ++a) {
    off1[a + 1] = off1[a] + pt.paths[ends[a].second * n + ends[a].first].size();
  }
  auto find_path = [&](std::size_t x, const std::vector<std::size_t>& p) {
    const auto& list = pt.paths[x * n + x];
    return static_cast<std::size_t>(std::find(list.begin(), list.end(), p) - list.begin());
  };
  SparseMatrix d(off0[n], off1[ends.size()]);
  for (std::size_t a = 0; a < ends.size(); ++a) {
    const auto [s, t] = ends[a];
    const auto& list = pt.paths[t * n + s];
    for (std::size_t i = 0; i < list.size(); ++i) {
      // p: t → s. α∘p is a loop at t, p∘α a loop at s.
      std::vector<std::size_t> ap = list[i];
      ap.push_back(a);
      std::vector<std::size_t> pa{a};
      pa.insert(pa.end(), list[i].begin(), list[i].end());
      d.set_column(off1[a] + i, SparseVector::from_entries({{off0[t] + find_path(t, ap), 1},
                                                            {off0[s] + find_path(s, pa), -1}}));
    }
  }
  const std::size_t r = rank(d);
  return {{0, off0[n] - r}, {1, off1[ends.size()] - r}};
}

DimTable dual_numbers_hh_oracle(int max_degree) {
  // A = span(1, x). After A ⊗_{A^e} -, the resolution maps are 0 (odd) and 2x (even).
  const SparseMatrix zero(2, 2);
  const SparseMatrix two_x = SparseMatrix::from_dense({{0, 0}, {2, 0}});
  auto map_at = [&](int n) -> const SparseMatrix& { return (n % 2 == 0) ? two_x : zero; };
  DimTable out;
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t ker = n == 0 ? 2 : 2 - rank(map_at(n));
    out[n] = ker - rank(map_at(n + 1));
  }
  return out;
}

namespace {

/// Unnormalized cyclic words (O_0..O_n, a_0..a_n), a_j : O_{j+1} → O_j.
struct CyclicWords {
  const Category& c;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
  std::vector<std::vector<std::vector<std::size_t>>> words;

  explicit CyclicWords(const Category& cat, int max_n) : c(cat) {
    index.resize(max_n + 1);
    words.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
      const std::size_t len = static_cast<std::size_t>(n) + 1;
      std::vector<std::size_t> objs(len, 0);
      const std::size_t m = c.num_objects();
      std::function<void(std::size_t)> pick_objects = [&](std::size_t j) {
        if (j == len) {
          std::vector<std::size_t> w = objs;
          w.resize(2 * len);
          std::function<void(std::size_t)> pick = [&](std::size_t i) {
            if (i == len) {
              index[n][w] = words[n].size();
              words[n].push_back(w);
              return;
            }
            const auto& h = c.hom(objs[(i + 1) % len], objs[i]);
            for (std::size_t b = 0; b < h.size(); ++b) {
              w[len + i] = b;
              pick(i + 1);
            }
          };
          pick(0);
          return;
        }
        for (std::size_t o = 0; o < m; ++o) {
          objs[j] = o;
          pick_objects(j + 1);
        }
      };
      pick_objects(0);
    }
  }

  void add(SparseVector& out, const Scalar& coeff, const std::vector<std::size_t>& objs,
           const std::vector<std::size_t>& letters, const SparseVector& merged, std::size_t at) const {
    // letters has one placeholder at position `at` filled from `merged`.
    const std::size_t n = objs.size() - 1;
    for (const auto& [i, a] : merged.entries()) {
      std::vector<std::size_t> w = objs;
      std::vector<std::size_t> l = letters;
      l[at] = i;
      w.insert(w.end(), l.begin(), l.end());
      out.axpy(coeff * a, SparseVector::unit(index[n].at(w)));
    }
  }

  SparseVector b(int n, std::size_t wi) const {
    const auto& w = words[n][wi];
    const std::size_t len = n + 1;
    SparseVector out;
    if (n == 0) return out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      // a_i ∘ a_{i+1} : O_{i+2} → O_i
      std::vector<std::size_t> objs(w.begin(), w.begin() + len);
      std::vector<std::size_t> letters(w.begin() + len, w.end());
      const SparseVector prod = c.composite(objs[(i + 2) % len], objs[i + 1], objs[i], letters[i],
                                            letters[i + 1]);
      objs.erase(objs.begin() + i + 1);
      letters.erase(letters.begin() + i + 1);
      add(out, parity_sign(static_cast<int>(i)), objs, letters, prod, i);
    }
    {
      // a_n ∘ a_0 : O_1 → O_n becomes the new head.
      std::vector<std::size_t> objs(w.begin(), w.begin() + len);
      std::vector<std::size_t> letters(w.begin() + len, w.end());
      const SparseVector prod = c.composite(objs[1], objs[0], objs[n], letters[n], letters[0]);
      std::vector<std::size_t> nobjs{objs[n]};
      nobjs.insert(nobjs.end(), objs.begin() + 1, objs.begin() + n);
      std::vector<std::size_t> nl{0};
      nl.insert(nl.end(), letters.begin() + 1, letters.begin() + n);
      add(out, parity_sign(n), nobjs, nl, prod, 0);
    }
    return out;
  }

  SparseVector one_minus_t(int n, std::size_t wi) const {
    const auto& w = words[n][wi];
    const std::size_t len = n + 1;
    std::vector<std::size_t> r(2 * len);
    for (std::size_t j = 0; j < len; ++j) {
      r[(j + 1) % len] = w[j];
      r[len + (j + 1) % len] = w[len + j];
    }
    SparseVector out = SparseVector::unit(wi);
    out.axpy(-parity_sign(n), SparseVector::unit(index[n].at(r)));
    return out;
  }
};

}  // namespace

DimTable connes_hc_oracle(const Category& c, int max_degree) {
  if (!c.concentrated_in_degree_zero()) {
    throw std::invalid_argument("connes_hc_oracle: category must be concentrated in degree 0");
  }
  const CyclicWords cw(c, max_degree + 1);
  auto bmat = [&](int n) {
    SparseMatrix m(n == 0 ? 0 : cw.words[n - 1].size(), cw.words[n].size());
    for (std::size_t i = 0; i < cw.words[n].size(); ++i) m.set_column(i, cw.b(n, i));
    return m;
  };
  auto tmat = [&](int n) {
    SparseMatrix m(cw.words[n].size(), cw.words[n].size());
    for (std::size_t i = 0; i < cw.words[n].size(); ++i) m.set_column(i, cw.one_minus_t(n, i));
    return m;
  };
  DimTable out;
  for (int n = 0; n <= max_degree; ++n) {
    const std::size_t dim = cw.words[n].size();
    std::size_t cycles_loss = 0;  // rank of b_n modulo I_{n-1}
    if (n > 0) {
      const SparseMatrix i_prev = tmat(n - 1);
      cycles_loss = rank(hconcat(i_prev, bmat(n))) - rank(i_prev);
    }
    const std::size_t bounds = rank(hconcat(tmat(n), bmat(n + 1)));
    out[n] = dim - cycles_loss - bounds;
  }
  return out;
}

// ---------------------------------------------------------------------------

CatalogEntry ground_field() {
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  CatalogEntry e{"k", "", share(std::move(c)), {}};
  e.expected.oracle = "connes_cyclic_complex";
  e.expected.hh = {{0, 1}};
  for (int n = 1; n <= kOracleMaxDegree; ++n) e.expected.hh[n] = 0;
  e.expected.hc = connes_hc_oracle(*e.category, kOracleMaxDegree);
  return e;
}

CatalogEntry acyclic_quiver(const std::string& name, const std::vector<std::string>& vertices,
                            const std::vector<Arrow>& arrows) {
  const auto ends = resolve_arrows(vertices, arrows);
  const std::size_t n = vertices.size();
  const PathTable pt = enumerate_paths(n, ends);
  Category c(vertices);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (const auto& p : pt.paths[x * n + y]) {
        std::string label;
        for (std::size_t i = p.size(); i-- > 0;) {
          label += arrows[p[i]].label;
          if (i > 0) label += ".";
        }
        if (p.empty()) label = "id";
        index[x * n + y][p] = c.add_morphism(x, y, {label, 0});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) c.set_identity(x, index[x * n + x].at({}));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const auto& pf = pt.paths[x * n + y];
        const auto& pg = pt.paths[y * n + z];
        for (std::size_t g = 0; g < pg.size(); ++g) {
          for (std::size_t f = 0; f < pf.size(); ++f) {
            std::vector<std::size_t> p = pf[f];
            p.insert(p.end(), pg[g].begin(), pg[g].end());
            c.set_composite(x, y, z, g, f, SparseVector::unit(index[x * n + z].at(p)));
          }
        }
      }
    }
  }
  CatalogEntry e{name, "", share(std::move(c)), {}};
  e.parameters = std::to_string(n) + " vertices, " + std::to_string(arrows.size()) + " arrows";
  e.expected.oracle = "diagonal_two_term_resolution";
  e.expected.hh = quiver_hh_oracle(vertices, arrows);
  for (int k = 2; k <= kOracleMaxDegree; ++k) e.expected.hh[k] = 0;
  e.expected.hc = connes_hc_oracle(*e.category, kOracleMaxDegree);
  return e;
}

CatalogEntry a2() { return acyclic_quiver("a2", {"x", "y"}, {{"a", "x", "y"}}); }

CatalogEntry a3() {
  return acyclic_quiver("a3", {"x", "y", "z"}, {{"a", "x", "y"}, {"b", "y", "z"}});
}

CatalogEntry dual_numbers() {
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.add_morphism(0, 0, {"x", 0});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  CatalogEntry e{"dual_numbers", "", share(std::move(c)), {}};
  e.expected.oracle = "two_periodic_resolution";
  e.expected.hh = dual_numbers_hh_oracle(kOracleMaxDegree);
  e.expected.hc = connes_hc_oracle(*e.category, kOracleMaxDegree);
  return e;
}

CatalogEntry exterior_generator(int degree) {
  if (degree % 2 == 0) throw std::invalid_argument("exterior_generator: degree must be odd");
  Category c({"pt"});
  c.add_morphism(0, 0, {"id", 0});
  c.add_morphism(0, 0, {"xi", degree});
  c.set_identity(0, 0);
  c.fill_identity_composites();
  return {"exterior:" + std::to_string(degree), "degree " + std::to_string(degree),
          share(std::move(c)), {}};
}

// ---------------------------------------------------------------------------

namespace {

struct Generator {
  std::size_t src, tgt;
  int degree;
};

std::optional<Category> try_random(std::mt19937_64& rng, const RandomBounds& bounds) {
  std::uniform_int_distribution<std::size_t> nobj(1, bounds.max_objects);
  std::uniform_int_distribution<std::size_t> ngen(1, bounds.max_generators);
  std::uniform_int_distribution<int> deg(bounds.min_degree, bounds.max_degree);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::uniform_int_distribution<int> percent(0, 99);
  const std::size_t n = nobj(rng);
  std::uniform_int_distribution<std::size_t> obj(0, n - 1);
  std::vector<Generator> gens(ngen(rng));
  for (auto& g : gens) g = {obj(rng), obj(rng), deg(rng)};

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("o" + std::to_string(i));
  Category c(names);
  // Paths of length ≤ 2 that survive the monomial relations.
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(n * n);
  auto add_path = [&](const std::vector<std::size_t>& p, std::size_t x, std::size_t y) {
    int d = 0;
    std::string label;
    for (std::size_t i = p.size(); i-- > 0;) {
      d += gens[p[i]].degree;
      label += "g" + std::to_string(p[i]);
      if (i > 0) label += ".";
    }
    if (p.empty()) label = "id";
    index[x * n + y][p] = c.add_morphism(x, y, {label, d});
  };
  for (std::size_t x = 0; x < n; ++x) add_path({}, x, x);
  for (std::size_t a = 0; a < gens.size(); ++a) add_path({a}, gens[a].src, gens[a].tgt);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = 0; b < gens.size(); ++b) {
      if (gens[a].tgt != gens[b].src) continue;
      if (percent(rng) < 35) continue;  // relation b∘a = 0
      add_path({a, b}, gens[a].src, gens[b].tgt);
    }
  }
  for (std::size_t x = 0; x < n; ++x) c.set_identity(x, index[x * n + x].at({}));
  auto path_of = [&](std::size_t x, std::size_t y, std::size_t i) {
    for (const auto& [p, j] : index[x * n + y]) {
      if (j == i) return p;
    }
    return std::vector<std::size_t>{};
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t g = 0; g < c.hom(y, z).size(); ++g) {
          for (std::size_t f = 0; f < c.hom(x, y).size(); ++f) {
            auto p = path_of(x, y, f);
            const auto q = path_of(y, z, g);
            p.insert(p.end(), q.begin(), q.end());
            if (p.size() > 2) continue;
            auto it = index[x * n + z].find(p);
            if (it != index[x * n + z].end()) c.set_composite(x, y, z, g, f, SparseVector::unit(it->second));
          }
        }
      }
    }
  }
  // Random d on generators: non-identity targets of degree |g| + 1.
  std::vector<SparseVector> dgen(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    const auto& [s, t, d] = gens[a];
    if (percent(rng) < 20) continue;
    std::vector<SparseVector::Entry> e;
    for (std::size_t i = 0; i < c.hom(s, t).size(); ++i) {
      if (s == t && i == c.identity(s)) continue;
      if (c.hom(s, t)[i].degree != d + 1) continue;
      if (percent(rng) < 60) e.emplace_back(i, coeff(rng));
    }
    dgen[a] = SparseVector::from_entries(std::move(e));
    c.set_differential(s, t, index[s * n + t].at({a}), dgen[a]);
  }
  // Leibniz extension to length-2 paths.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (const auto& [p, i] : index[x * n + z]) {
        if (p.size() != 2) continue;
        const std::size_t a = p[0], b = p[1], y = gens[a].tgt;
        const auto fa = SparseVector::unit(index[x * n + y].at({a}));
        const auto gb = SparseVector::unit(index[y * n + z].at({b}));
        SparseVector dv = c.compose(x, y, z, dgen[b], fa);
        dv.axpy(parity_sign(gens[b].degree), c.compose(x, y, z, gb, dgen[a]));
        c.set_differential(x, z, i, std::move(dv));
      }
    }
  }
  if (!validate(c).ok()) return std::nullopt;
  return c;
}

}  // namespace

CatalogEntry random_category(std::uint64_t seed, RandomBounds bounds) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 500; ++attempt) {
    if (auto c = try_random(rng, bounds)) {
      return {"random:" + std::to_string(seed), "seed " + std::to_string(seed) + ", attempt " +
                                                    std::to_string(attempt),
              share(std::move(*c)), {}};
    }
  }
  throw std::runtime_error("random_category: no valid category after 500 attempts");
}

CatalogEntry catalog_entry(const std::string& name) {
  if (name == "k" || name == "ground_field") return ground_field();
  if (name == "a2") return a2();
  if (name == "a3") return a3();
  if (name == "dual_numbers") return dual_numbers();
  auto suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return name.substr(prefix.size());
  };
  try {
    if (auto s = suffix("exterior:")) return exterior_generator(std::stoi(*s));
    if (auto s = suffix("random:")) return random_category(std::stoull(*s));
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad catalog parameter in '" + name + "': " + e.what());
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
  return {"k", "a2", "a3", "dual_numbers", "exterior:<odd degree>", "random:<seed>"};
}

}  // namespace dgwork
