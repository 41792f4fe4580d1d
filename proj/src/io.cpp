#include "dgwork/io.hpp"

#include <fstream>
#include <sstream>

namespace dgwork {

DocumentError::DocumentError(Code code, std::string location, const std::string& message)
    : std::runtime_error((location.empty() ? std::string("<document>") : location) + ": " + message),
      code_(code),
      location_(std::move(location)) {}

namespace {

[[noreturn]] void schema(const std::string& where, const std::string& msg) {
  throw DocumentError(DocumentError::Code::Schema, where, msg);
}

std::string at_key(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string at_index(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(at_key(where, key), "missing key");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) schema(where, "expected an array");
  return j;
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "expected a string");
  return j.get<std::string>();
}

int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where, "expected an integer");
  return j.get<int>();
}

Scalar rational(const Json& j, const std::string& where) {
  if (!j.is_string()) schema(where, "rationals are written as strings \"p/q\"");
  const auto s = j.get<std::string>();
  auto v = parse_canonical(s);
  if (!v) schema(where, "non-canonical rational \"" + s + "\"");
  return *v;
}

std::size_t object_index(const Category& c, const Json& j, const std::string& where) {
  const auto name = text(j, where);
  auto x = c.find_object(name);
  if (!x) schema(where, "unknown object \"" + name + "\"");
  return *x;
}

std::size_t basis_index(const GradedBasis& b, const Json& j, const std::string& where) {
  const auto label = text(j, where);
  auto i = b.find(label);
  if (!i) schema(where, "unknown basis label \"" + label + "\"");
  return *i;
}

Json basis_to_json(const GradedBasis& b) {
  Json out = Json::array();
  for (const auto& e : b.elements()) out.push_back({{"label", e.label}, {"degree", e.degree}});
  return out;
}

GradedBasis basis_from_json(const Json& j, const std::string& where) {
  GradedBasis b;
  array_at(j, where);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto w = at_index(where, i);
    const auto label = text(field(j[i], "label", w), at_key(w, "label"));
    if (b.find(label)) schema(at_key(w, "label"), "duplicate label \"" + label + "\"");
    b.add({label, integer(field(j[i], "degree", w), at_key(w, "degree"))});
  }
  return b;
}

Json vector_to_json(const SparseVector& v, const GradedBasis& b) {
  Json out = Json::array();
  for (const auto& [i, a] : v.entries()) out.push_back({{"label", b[i].label}, {"coeff", to_string(a)}});
  return out;
}

SparseVector vector_from_json(const Json& j, const GradedBasis& b, const std::string& where) {
  array_at(j, where);
  std::vector<SparseVector::Entry> e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto w = at_index(where, i);
    e.emplace_back(basis_index(b, field(j[i], "label", w), at_key(w, "label")),
                   rational(field(j[i], "coeff", w), at_key(w, "coeff")));
  }
  return SparseVector::from_entries(std::move(e));
}

Json matrix_to_json(const SparseMatrix& m) {
  Json out = Json::array();
  const auto d = m.to_dense();
  for (const auto& row : d) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(to_string(a));
    out.push_back(std::move(r));
  }
  return out;
}

SparseMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  array_at(j, where);
  if (j.size() != rows) schema(where, "expected " + std::to_string(rows) + " rows");
  std::vector<std::vector<SparseVector::Entry>> colv(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto w = at_index(where, i);
    array_at(j[i], w);
    if (j[i].size() != cols) schema(w, "expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      const Scalar a = rational(j[i][c], at_index(w, c));
      if (a != 0) colv[c].emplace_back(i, a);
    }
  }
  SparseMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) m.set_column(c, SparseVector::from_entries(std::move(colv[c])));
  return m;
}

void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) schema(where, "expected an object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    bool ok = false;
    for (const auto& a : allowed) ok = ok || a == k;
    if (!ok) schema(at_key(where, k), "unknown key");
  }
}

std::string name_of(const Json& j, const std::string& where) {
  return text(field(j, "name", where), at_key(where, "name"));
}

void raise_validation(const ValidationReport& r, const std::string& where) {
  if (r.ok()) return;
  const auto code = r.has_malformed() ? DocumentError::Code::Schema : DocumentError::Code::Axiom;
  const auto& first = r.issues.front();
  throw DocumentError(code, where, first.rule + ": " + first.detail);
}

}  // namespace

Json category_to_json(const Category& c) {
  const std::size_t n = c.num_objects();
  Json j;
  j["objects"] = c.objects();
  Json hom = Json::array(), d = Json::array(), compose = Json::array(), id = Json::object();
  for (std::size_t x = 0; x < n; ++x) {
    if (c.has_identity(x)) id[c.object_name(x)] = c.hom(x, x)[c.identity(x)].label;
    for (std::size_t y = 0; y < n; ++y) {
      const auto& h = c.hom(x, y);
      if (h.empty()) continue;
      hom.push_back({{"src", c.object_name(x)}, {"tgt", c.object_name(y)}, {"basis", basis_to_json(h)}});
      const SparseMatrix dm = c.differential_matrix(x, y);
      if (!dm.is_zero()) {
        d.push_back({{"src", c.object_name(x)}, {"tgt", c.object_name(y)}, {"matrix", matrix_to_json(dm)}});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Json table = Json::array();
        for (const auto& [gf, v] : c.composites(x, y, z)) {
          const auto [g, f] = gf;
          if ((y == z && g == c.identity(y)) || (x == y && f == c.identity(x))) continue;
          table.push_back({{"g", c.hom(y, z)[g].label},
                           {"f", c.hom(x, y)[f].label},
                           {"result", vector_to_json(v, c.hom(x, z))}});
        }
        if (table.empty()) continue;
        compose.push_back({{"x", c.object_name(x)},
                           {"y", c.object_name(y)},
                           {"z", c.object_name(z)},
                           {"table", std::move(table)}});
      }
    }
  }
  j["hom"] = std::move(hom);
  j["d"] = std::move(d);
  j["compose"] = std::move(compose);
  j["id"] = std::move(id);
  return j;
}

Category category_from_json(const Json& j, const std::string& where) {
  Category c;
  const auto ow = at_key(where, "objects");
  const Json& objects = array_at(field(j, "objects", where), ow);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto name = text(objects[i], at_index(ow, i));
    if (c.find_object(name)) schema(at_index(ow, i), "duplicate object \"" + name + "\"");
    c.add_object(name);
  }
  const auto hw = at_key(where, "hom");
  const Json& hom = array_at(field(j, "hom", where), hw);
  std::vector<bool> seen(c.num_objects() * c.num_objects(), false);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const auto w = at_index(hw, i);
    const std::size_t x = object_index(c, field(hom[i], "src", w), at_key(w, "src"));
    const std::size_t y = object_index(c, field(hom[i], "tgt", w), at_key(w, "tgt"));
    if (seen[x * c.num_objects() + y]) schema(w, "hom pair listed twice");
    seen[x * c.num_objects() + y] = true;
    const GradedBasis b = basis_from_json(field(hom[i], "basis", w), at_key(w, "basis"));
    for (const auto& e : b.elements()) c.add_morphism(x, y, e);
  }
  const auto iw = at_key(where, "id");
  const Json& id = field(j, "id", where);
  if (!id.is_object()) schema(iw, "expected an object");
  for (const auto& [name, label] : id.items()) {
    const auto x = c.find_object(name);
    if (!x) schema(at_key(iw, name), "unknown object");
    c.set_identity(*x, basis_index(c.hom(*x, *x), label, at_key(iw, name)));
  }
  const auto dw = at_key(where, "d");
  if (j.contains("d")) {
    const Json& d = array_at(j["d"], dw);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const auto w = at_index(dw, i);
      const std::size_t x = object_index(c, field(d[i], "src", w), at_key(w, "src"));
      const std::size_t y = object_index(c, field(d[i], "tgt", w), at_key(w, "tgt"));
      const std::size_t n = c.hom(x, y).size();
      const SparseMatrix m = matrix_from_json(field(d[i], "matrix", w), n, n, at_key(w, "matrix"));
      for (std::size_t k = 0; k < n; ++k) c.set_differential(x, y, k, m.column(k));
    }
  }
  const auto cw = at_key(where, "compose");
  if (j.contains("compose")) {
    const Json& comp = array_at(j["compose"], cw);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const auto w = at_index(cw, i);
      const std::size_t x = object_index(c, field(comp[i], "x", w), at_key(w, "x"));
      const std::size_t y = object_index(c, field(comp[i], "y", w), at_key(w, "y"));
      const std::size_t z = object_index(c, field(comp[i], "z", w), at_key(w, "z"));
      const auto tw = at_key(w, "table");
      const Json& table = array_at(field(comp[i], "table", w), tw);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto ew = at_index(tw, k);
        const std::size_t g = basis_index(c.hom(y, z), field(table[k], "g", ew), at_key(ew, "g"));
        const std::size_t f = basis_index(c.hom(x, y), field(table[k], "f", ew), at_key(ew, "f"));
        c.set_composite(x, y, z, g, f,
                        vector_from_json(field(table[k], "result", ew), c.hom(x, z), at_key(ew, "result")));
      }
    }
  }
  c.fill_identity_composites();
  return c;
}

// ---------------------------------------------------------------------------

Json bimodule_to_json(const Bimodule& m) {
  const Category& a = *m.a;
  const Category& b = *m.b;
  Json spaces = Json::array(), d = Json::array(), act_a = Json::array(), act_b = Json::array();
  for (std::size_t x = 0; x < a.num_objects(); ++x) {
    for (std::size_t y = 0; y < b.num_objects(); ++y) {
      const auto& s = m.space(x, y);
      if (s.empty()) continue;
      spaces.push_back({{"x", a.object_name(x)}, {"y", b.object_name(y)}, {"basis", basis_to_json(s)}});
      const SparseMatrix dm(s.size(), m.d[m.slot(x, y)]);
      if (!dm.is_zero()) {
        d.push_back({{"x", a.object_name(x)}, {"y", b.object_name(y)}, {"matrix", matrix_to_json(dm)}});
      }
    }
  }
  for (const auto& [key, table] : m.act_a) {
    const auto [x2, x, y] = key;
    Json t = Json::array();
    for (const auto& [mf, v] : table) {
      t.push_back({{"m", m.space(x, y)[mf.first].label},
                   {"f", a.hom(x2, x)[mf.second].label},
                   {"result", vector_to_json(v, m.space(x2, y))}});
    }
    if (!t.empty()) {
      act_a.push_back({{"x2", a.object_name(x2)}, {"x", a.object_name(x)}, {"y", b.object_name(y)}, {"table", t}});
    }
  }
  for (const auto& [key, table] : m.act_b) {
    const auto [x, y, y2] = key;
    Json t = Json::array();
    for (const auto& [gm, v] : table) {
      t.push_back({{"g", b.hom(y, y2)[gm.first].label},
                   {"m", m.space(x, y)[gm.second].label},
                   {"result", vector_to_json(v, m.space(x, y2))}});
    }
    if (!t.empty()) {
      act_b.push_back({{"x", a.object_name(x)}, {"y", b.object_name(y)}, {"y2", b.object_name(y2)}, {"table", t}});
    }
  }
  return {{"spaces", spaces}, {"d", d}, {"act_a", act_a}, {"act_b", act_b}};
}

Bimodule bimodule_from_json(const Json& j, const CategoryPtr& ap, const CategoryPtr& bp,
                            const std::string& where) {
  const Category& a = *ap;
  const Category& b = *bp;
  Bimodule m = Bimodule::zero(ap, bp);
  const auto sw = at_key(where, "spaces");
  const Json& spaces = array_at(field(j, "spaces", where), sw);
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const auto w = at_index(sw, i);
    const std::size_t x = object_index(a, field(spaces[i], "x", w), at_key(w, "x"));
    const std::size_t y = object_index(b, field(spaces[i], "y", w), at_key(w, "y"));
    m.spaces[m.slot(x, y)] = basis_from_json(field(spaces[i], "basis", w), at_key(w, "basis"));
    m.d[m.slot(x, y)].assign(m.spaces[m.slot(x, y)].size(), SparseVector{});
  }
  if (j.contains("d")) {
    const auto dw = at_key(where, "d");
    const Json& d = array_at(j["d"], dw);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const auto w = at_index(dw, i);
      const std::size_t x = object_index(a, field(d[i], "x", w), at_key(w, "x"));
      const std::size_t y = object_index(b, field(d[i], "y", w), at_key(w, "y"));
      const std::size_t n = m.space(x, y).size();
      const SparseMatrix dm = matrix_from_json(field(d[i], "matrix", w), n, n, at_key(w, "matrix"));
      for (std::size_t k = 0; k < n; ++k) m.d[m.slot(x, y)][k] = dm.column(k);
    }
  }
  if (j.contains("act_a")) {
    const auto aw = at_key(where, "act_a");
    const Json& acts = array_at(j["act_a"], aw);
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const auto w = at_index(aw, i);
      const std::size_t x2 = object_index(a, field(acts[i], "x2", w), at_key(w, "x2"));
      const std::size_t x = object_index(a, field(acts[i], "x", w), at_key(w, "x"));
      const std::size_t y = object_index(b, field(acts[i], "y", w), at_key(w, "y"));
      const auto tw = at_key(w, "table");
      const Json& table = array_at(field(acts[i], "table", w), tw);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto ew = at_index(tw, k);
        const std::size_t mi = basis_index(m.space(x, y), field(table[k], "m", ew), at_key(ew, "m"));
        const std::size_t f = basis_index(a.hom(x2, x), field(table[k], "f", ew), at_key(ew, "f"));
        m.act_a[{x2, x, y}][{mi, f}] =
            vector_from_json(field(table[k], "result", ew), m.space(x2, y), at_key(ew, "result"));
      }
    }
  }
  if (j.contains("act_b")) {
    const auto bw = at_key(where, "act_b");
    const Json& acts = array_at(j["act_b"], bw);
    for (std::size_t i = 0; i < acts.size(); ++i) {
      const auto w = at_index(bw, i);
      const std::size_t x = object_index(a, field(acts[i], "x", w), at_key(w, "x"));
      const std::size_t y = object_index(b, field(acts[i], "y", w), at_key(w, "y"));
      const std::size_t y2 = object_index(b, field(acts[i], "y2", w), at_key(w, "y2"));
      const auto tw = at_key(w, "table");
      const Json& table = array_at(field(acts[i], "table", w), tw);
      for (std::size_t k = 0; k < table.size(); ++k) {
        const auto ew = at_index(tw, k);
        const std::size_t g = basis_index(b.hom(y, y2), field(table[k], "g", ew), at_key(ew, "g"));
        const std::size_t mi = basis_index(m.space(x, y), field(table[k], "m", ew), at_key(ew, "m"));
        m.act_b[{x, y, y2}][{g, mi}] =
            vector_from_json(field(table[k], "result", ew), m.space(x, y2), at_key(ew, "result"));
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

Json functor_to_json(const Functor& f) {
  const Category& s = *f.source;
  const Category& t = *f.target;
  Json objects = Json::array(), hom = Json::array();
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    objects.push_back({{"src", s.object_name(x)}, {"tgt", t.object_name(f.object_map[x])}});
  }
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    for (std::size_t y = 0; y < s.num_objects(); ++y) {
      if (s.hom(x, y).empty()) continue;
      hom.push_back({{"src", s.object_name(x)}, {"tgt", s.object_name(y)}, {"matrix", matrix_to_json(f.on_hom(x, y))}});
    }
  }
  return {{"target", category_to_json(t)}, {"objects", objects}, {"hom", hom}};
}

Functor functor_from_json(const Json& j, const CategoryPtr& source, const std::string& where) {
  const Category& s = *source;
  Functor f;
  f.source = source;
  const auto tw = at_key(where, "target");
  Category target = category_from_json(field(j, "target", where), tw);
  raise_validation(validate(target), tw);
  f.target = share(std::move(target));
  const Category& t = *f.target;
  f.object_map.assign(s.num_objects(), Category::npos);
  const auto ow = at_key(where, "objects");
  const Json& objects = array_at(field(j, "objects", where), ow);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto w = at_index(ow, i);
    const std::size_t x = object_index(s, field(objects[i], "src", w), at_key(w, "src"));
    f.object_map[x] = object_index(t, field(objects[i], "tgt", w), at_key(w, "tgt"));
  }
  for (std::size_t x = 0; x < s.num_objects(); ++x) {
    if (f.object_map[x] == Category::npos) schema(ow, "object \"" + s.object_name(x) + "\" is not mapped");
  }
  const std::size_t n = s.num_objects();
  f.hom_map.resize(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      f.hom_map[x * n + y] = SparseMatrix(t.hom(f.object_map[x], f.object_map[y]).size(), s.hom(x, y).size());
    }
  }
  const auto hw = at_key(where, "hom");
  const Json& hom = array_at(field(j, "hom", where), hw);
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const auto w = at_index(hw, i);
    const std::size_t x = object_index(s, field(hom[i], "src", w), at_key(w, "src"));
    const std::size_t y = object_index(s, field(hom[i], "tgt", w), at_key(w, "tgt"));
    const auto& cur = f.hom_map[x * n + y];
    f.hom_map[x * n + y] = matrix_from_json(field(hom[i], "matrix", w), cur.rows(), cur.cols(), at_key(w, "matrix"));
  }
  return f;
}

// ---------------------------------------------------------------------------

Json k0_to_json(const K0Class& x) {
  const Category& c = *x.category;
  Json summands = Json::array();
  for (const auto& s : x.summands) {
    Json objects = Json::array(), e = Json::array();
    for (std::size_t o : s.objects) objects.push_back(c.object_name(o));
    for (std::size_t i = 0; i < s.objects.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < s.objects.size(); ++j) {
        row.push_back(vector_to_json(s.e[i][j], c.hom(s.objects[j], s.objects[i])));
      }
      e.push_back(std::move(row));
    }
    summands.push_back({{"objects", objects}, {"position", s.position}, {"e", e}});
  }
  return {{"summands", summands}};
}

K0Class k0_from_json(const Json& j, const CategoryPtr& cp, const std::string& where) {
  const Category& c = *cp;
  K0Class x;
  x.category = cp;
  const auto sw = at_key(where, "summands");
  const Json& summands = array_at(field(j, "summands", where), sw);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto w = at_index(sw, i);
    ProjectiveSummand s;
    s.position = integer(field(summands[i], "position", w), at_key(w, "position"));
    const auto ow = at_key(w, "objects");
    const Json& objects = array_at(field(summands[i], "objects", w), ow);
    for (std::size_t k = 0; k < objects.size(); ++k) s.objects.push_back(object_index(c, objects[k], at_index(ow, k)));
    const std::size_t n = s.objects.size();
    const auto ew = at_key(w, "e");
    const Json& e = array_at(field(summands[i], "e", w), ew);
    if (e.size() != n) schema(ew, "idempotent must be " + std::to_string(n) + " x " + std::to_string(n));
    s.e.assign(n, std::vector<SparseVector>(n));
    for (std::size_t r = 0; r < n; ++r) {
      const auto rw = at_index(ew, r);
      array_at(e[r], rw);
      if (e[r].size() != n) schema(rw, "idempotent row has wrong length");
      for (std::size_t col = 0; col < n; ++col) {
        s.e[r][col] = vector_from_json(e[r][col], c.hom(s.objects[col], s.objects[r]), at_index(rw, col));
      }
    }
    x.summands.push_back(std::move(s));
  }
  return x;
}

// ---------------------------------------------------------------------------

Json bundle_to_json(const CategoryBundle& b) {
  Json j = category_to_json(*b.category);
  auto named = [](const std::string& name, Json body) {
    body["name"] = name;
    return body;
  };
  if (!b.bimodules.empty()) {
    Json arr = Json::array();
    for (const auto& m : b.bimodules) arr.push_back(named(m.name, bimodule_to_json(m.bimodule)));
    j["bimodules"] = arr;
  }
  if (!b.functors.empty()) {
    Json arr = Json::array();
    for (const auto& f : b.functors) arr.push_back(named(f.name, functor_to_json(f.functor)));
    j["functors"] = arr;
  }
  if (!b.k0_classes.empty()) {
    Json arr = Json::array();
    for (const auto& k : b.k0_classes) arr.push_back(named(k.name, k0_to_json(k.k0)));
    j["k0_classes"] = arr;
  }
  if (!b.expected.is_null()) j["expected"] = b.expected;
  return j;
}

CategoryBundle bundle_from_json(const Json& j) {
  check_keys(j, {"objects", "hom", "d", "compose", "id", "bimodules", "functors", "k0_classes", "expected"}, "");
  CategoryBundle b;
  Category c = category_from_json(j);
  raise_validation(validate(c), "");
  b.category = share(std::move(c));
  if (j.contains("bimodules")) {
    const Json& arr = array_at(j["bimodules"], "bimodules");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto w = at_index("bimodules", i);
      NamedBimodule m{name_of(arr[i], w), bimodule_from_json(arr[i], b.category, b.category, w)};
      raise_validation(validate(m.bimodule), w);
      b.bimodules.push_back(std::move(m));
    }
  }
  if (j.contains("functors")) {
    const Json& arr = array_at(j["functors"], "functors");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto w = at_index("functors", i);
      NamedFunctor f{name_of(arr[i], w), functor_from_json(arr[i], b.category, w)};
      raise_validation(validate(f.functor), w);
      b.functors.push_back(std::move(f));
    }
  }
  if (j.contains("k0_classes")) {
    const Json& arr = array_at(j["k0_classes"], "k0_classes");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto w = at_index("k0_classes", i);
      NamedK0Class k{name_of(arr[i], w), k0_from_json(arr[i], b.category, w)};
      try {
        check_k0_class(k.k0);
      } catch (const UnsupportedInput& e) {
        schema(w, e.what());
      } catch (const InconsistentInput& e) {
        throw DocumentError(DocumentError::Code::Axiom, w, e.what());
      }
      b.k0_classes.push_back(std::move(k));
    }
  }
  if (j.contains("expected")) b.expected = j["expected"];
  return b;
}

namespace {

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema("", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

CategoryBundle bundle_from_text(const std::string& text) { return bundle_from_json(parse_text(text)); }

Bimodule bimodule_from_text(const std::string& text, const CategoryPtr& a, const CategoryPtr& b) {
  const Json j = parse_text(text);
  check_keys(j, {"spaces", "d", "act_a", "act_b", "name"}, "");
  Bimodule m = bimodule_from_json(j, a, b);
  raise_validation(validate(m), "");
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(DocumentError::Code::Schema, "", "cannot open file \"" + path + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dgwork
