#include "dgwork/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dgwork/catalog.hpp"
#include "dgwork/report.hpp"

namespace dgwork {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t L = 6;
  std::size_t N = 4;
  std::string window = "-4:6";
  std::string field = "q";
  std::string out;
  std::optional<std::uint64_t> seed;
  bool require_stable = false;
  std::vector<std::string> files;
  std::string object;
  std::string cls;
};

DegreeWindow parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  if (colon == std::string::npos) throw InputError("--window expects lo:hi, got \"" + s + "\"");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const int lo = std::stoi(s.substr(0, colon), &used_lo);
    const int hi = std::stoi(s.substr(colon + 1), &used_hi);
    if (used_lo != colon || used_hi != s.size() - colon - 1 || lo > hi) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("--window expects lo:hi with lo <= hi, got \"" + s + "\"");
  }
}

std::string parse_field(const std::string& s) {
  if (s == "q") return s;
  if (s.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(s.substr(3), &used);
      if (used != s.size() - 3) p = 0;
    } catch (const std::logic_error&) {
      p = 0;
    }
    if (p > 1 && p < (1ULL << 31) && is_probable_prime(p)) return "fp:" + std::to_string(p);
  }
  throw InputError("--field expects q or fp:<prime below 2^31>, got \"" + s + "\"");
}

Json dim_table_json(const DimTable& t) {
  Json out = Json::array();
  for (const auto& [n, d] : t) out.push_back({{"degree", n}, {"dim", d}});
  return out;
}

CategoryBundle catalog_bundle(std::string name, const std::optional<std::uint64_t>& seed) {
  if (name == "random") {
    if (!seed) throw InputError("catalog random needs --seed or the form random:<seed>");
    name += ":" + std::to_string(*seed);
  }
  CatalogEntry e;
  try {
    e = catalog_entry(name);
  } catch (const std::invalid_argument& ex) {
    throw InputError(ex.what());
  }
  CategoryBundle b;
  b.category = e.category;
  b.expected = {{"name", e.name},
                {"parameters", e.parameters},
                {"oracle", e.expected.oracle},
                {"hh", dim_table_json(e.expected.hh)},
                {"hc", dim_table_json(e.expected.hc)},
                {"note", e.expected.note}};
  return b;
}

class Loader {
 public:
  Loader(std::istream& in, const Options& o) : in_(in), o_(o) {}

  std::string text(const std::string& arg) {
    if (arg == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    return read_file(arg);
  }

  CategoryBundle bundle(const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) return catalog_bundle(arg.substr(8), o_.seed);
    return bundle_from_text(text(arg));
  }

 private:
  std::istream& in_;
  const Options& o_;
  bool stdin_used_ = false;
};

RunSettings settings(const Options& o) {
  RunSettings s;
  s.params.max_bar_length = o.L;
  s.params.max_u_power = o.N;
  s.params.window = parse_window(o.window);
  s.field = parse_field(o.field);
  s.seed = o.seed;
  return s;
}

std::string command_line(const std::vector<std::string>& args) {
  std::string s = kToolName;
  for (const auto& a : args) s += " " + a;
  return s;
}

void write_out(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write \"" + path + "\"");
  f << bytes;
}

int emit(const Report& r, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << r.to_text();
  } else {
    write_out(o.out, dump(r.to_json()), out);
  }
  return o.require_stable && !r.all_stable() ? kUnstable : kComputed;
}

int emit_document(const Json& j, const Options& o, std::ostream& out) {
  write_out(o.out, dump(j), out);
  return kComputed;
}

std::size_t object_of(const Category& c, const std::string& name) {
  const auto x = c.find_object(name);
  if (!x) throw InputError("unknown object \"" + name + "\"");
  return *x;
}

K0Class class_of(const CategoryBundle& b, const std::string& id) {
  if (id.rfind("id:", 0) == 0) {
    return {b.category, {ProjectiveSummand::representable(*b.category, object_of(*b.category, id.substr(3)))}};
  }
  for (const auto& k : b.k0_classes) {
    if (k.name == id) return k.k0;
  }
  throw InputError("unknown class \"" + id + "\" (use a k0_classes name or id:<object>)");
}

void fp_precheck(Report& r, Workbench& w, const RunSettings& s) {
  if (s.field == "q") return;
  const std::uint64_t p = std::stoull(s.field.substr(3));
  const auto mc = w.mixed(s.params.max_bar_length);
  std::vector<std::vector<Json>> rows;
  for (int n = s.params.window.lo; n <= s.params.window.hi + 1; ++n) {
    const SparseMatrix& b = mc->b(n);
    const std::size_t rq = rank(b), rp = rank_mod_p(b, p);
    rows.push_back({n, rq, rp, rq == rp});
  }
  r.add_table("fp_rank_check", {"degree", "rank_q", "rank_p", "agrees"}, std::move(rows));
}

void homology_table(Report& r, const HomologyPresentation& h) {
  std::vector<std::vector<Json>> rows;
  for (const auto& [n, d] : h.degrees) rows.push_back({n, d.dimension, d.stable});
  r.add_table(h.kind, {"degree", "dim", "stable"}, std::move(rows));
}

std::vector<std::vector<Json>> delta_rows(const std::vector<DeltaVerdict>& vs) {
  std::vector<std::vector<Json>> rows;
  for (const auto& v : vs) rows.push_back({v.degree, v.rank, to_string(v.verdict), v.stable});
  return rows;
}

// ---------------------------------------------------------------------------

int dispatch(const std::string& cmd, const Options& o, const std::vector<std::string>& args, std::istream& in,
             std::ostream& out) {
  Loader load(in, o);
  const RunSettings s = settings(o);
  const auto& p = s.params;
  Report r(command_line(args), s);

  if (cmd == "catalog") {
    if (o.files.size() != 1) throw InputError("catalog expects one name");
    return emit_document(bundle_to_json(catalog_bundle(o.files[0], o.seed)), o, out);
  }
  if (cmd == "tensor" || cmd == "glue") {
    const auto a = load.bundle(o.files.at(0));
    const auto b = load.bundle(o.files.at(1));
    if (cmd == "tensor") return emit_document(category_to_json(tensor(*a.category, *b.category)), o, out);
    const Bimodule m = bimodule_from_text(load.text(o.files.at(2)), a.category, b.category);
    return emit_document(category_to_json(*glue(a.category, b.category, m).category), o, out);
  }
  if (cmd == "op") {
    return emit_document(category_to_json(opposite(*load.bundle(o.files.at(0)).category)), o, out);
  }
  if (cmd == "quotient") {
    const auto a = load.bundle(o.files.at(0));
    const std::size_t e = object_of(*a.category, o.object);
    return emit_document(category_to_json(drinfeld_quotient(*a.category, e, p.window)), o, out);
  }

  if (cmd == "kunneth") {
    const auto a = load.bundle(o.files.at(0));
    const auto b = load.bundle(o.files.at(1));
    r.add_input("A", category_to_json(*a.category));
    r.add_input("B", category_to_json(*b.category));
    const auto k = kunneth_check(a.category, b.category, p);
    std::vector<std::vector<Json>> rows;
    for (const auto& d : k.degrees) rows.push_back({d.degree, d.expected, d.actual, d.match()});
    r.add_table("HH", {"degree", "convolution", "tensor", "match"}, std::move(rows));
    r.add_verdict("kunneth", k.ok() ? "match" : "mismatch", !k.degrees.empty());
    return emit(r, o, out);
  }
  if (cmd == "phi0") {
    const auto b = load.bundle(o.files.at(0));
    const auto c = load.bundle(o.files.at(1));
    r.add_input("B", category_to_json(*b.category));
    r.add_input("C", category_to_json(*c.category));
    Phi0Result res;
    if (o.cls == "diagonal") {
      if (!(*b.category == opposite(*c.category))) throw InputError("the diagonal class needs B = op(C)");
      res = phi0_diagonal(c.category, p);
    } else if (o.cls.rfind("id:", 0) == 0 && o.cls.find(',') != std::string::npos) {
      const auto comma = o.cls.find(',');
      const std::size_t x = object_of(*b.category, o.cls.substr(3, comma - 3));
      const std::size_t y = object_of(*c.category, o.cls.substr(comma + 1));
      const auto t = share(tensor(*b.category, *c.category));
      Workbench wt(t, p), wb(b.category, p), wc(c.category, p);
      res = phi0(K0Class{t, {ProjectiveSummand::representable(*t, x * c.category->num_objects() + y)}}, wt, wb, wc);
    } else {
      throw InputError("phi0 --class expects diagonal or id:<b>,<c>");
    }
    r.set("value", matrix_json(res.value));
    r.add_verdict("phi0", to_string(res.verdict), res.verdict != Verdict::Unstable);
    return emit(r, o, out);
  }

  const auto bundle = load.bundle(o.files.at(0));
  const auto& c = bundle.category;
  r.add_input("category", bundle_to_json(bundle));

  if (cmd == "check") {
    r.set("objects", c->num_objects());
    std::size_t total = 0;
    for (std::size_t x = 0; x < c->num_objects(); ++x)
      for (std::size_t y = 0; y < c->num_objects(); ++y) total += c->hom(x, y).size();
    r.set("total_dimension", total);
    r.set("degree_zero", c->concentrated_in_degree_zero());
    r.set("directed", c->is_directed());
    r.set("bimodules", bundle.bimodules.size());
    r.set("functors", bundle.functors.size());
    r.set("k0_classes", bundle.k0_classes.size());
    r.add_verdict("valid", "yes", true);
    return emit(r, o, out);
  }
  if (cmd == "pairing") {
    const auto pr = pairing_check(c, p);
    r.set("matrix", matrix_json(pr.matrix));
    r.set("determinant", to_string(pr.determinant));
    r.set("resolution_exact", pr.resolution_exact);
    r.set("cartan_consistent", pr.cartan_consistent);
    r.add_verdict("pairing", pr.invertible ? "invertible" : "singular", pr.stable);
    return emit(r, o, out);
  }

  Workbench w(c, p);
  if (cmd == "hh") {
    homology_table(r, hh(w, false));
    fp_precheck(r, w, s);
  } else if (cmd == "hc") {
    homology_table(r, hc(w));
  } else if (cmd == "hc-minus") {
    homology_table(r, hc_minus(w));
  } else if (cmd == "delta") {
    const auto vs = delta(w);
    r.add_table("delta", {"degree", "rank", "verdict", "stable"}, delta_rows(vs));
    for (const auto& v : vs) r.add_verdict("delta_" + std::to_string(v.degree), to_string(v.verdict), v.stable);
  } else if (cmd == "degeneration") {
    const auto d = degeneration_check(w);
    r.add_table("delta", {"degree", "rank", "verdict", "stable"}, delta_rows(d.verdicts));
    r.set("stable_degrees", d.stable_degrees);
    r.set("unstable_degrees", d.unstable_degrees);
    const bool decided = d.stable_degrees > 0;
    r.add_verdict("degeneration",
                  !decided ? "unstable" : d.degenerate ? "degenerate-in-window" : "not-degenerate", decided);
  } else if (cmd == "e1") {
    const auto e = e1_page(w);
    std::vector<std::vector<Json>> rows;
    for (const auto& d : e.degrees) rows.push_back({d.degree, d.hh_dim, d.d1_rank, to_string(d.delta), d.agrees});
    r.add_table("E1", {"degree", "hh_dim", "d1_rank", "delta", "agrees"}, std::move(rows));
    r.set("columns", e.columns);
    r.set("discrepancies", e.discrepancies);
    r.add_verdict("d1_matches_delta", e.discrepancies.empty() ? "yes" : "no", true);
  } else if (cmd == "chern") {
    const K0Class x = class_of(bundle, o.cls);
    check_k0_class(x);
    const auto v = ch(x, w);
    const std::size_t dim = w.homology(p.max_bar_length, TotalKind::Hochschild, 1, 0).dimension();
    r.set("coordinates", vector_json(v.coordinates, dim));
    r.add_verdict("ch", v.coordinates.empty() ? "zero" : "nonzero", v.stable);
  } else {
    throw InputError("unknown subcommand \"" + cmd + "\"");
  }
  return emit(r, o, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild, cyclic and negative cyclic invariants of small DG categories", kToolName};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_option("--max-bar-length", o.L, "bar length cutoff L")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--max-u-power", o.N, "u-power cutoff N")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--window", o.window, "degree window lo:hi")->capture_default_str();
  app.add_option("--field", o.field, "q, or fp:<p> for a mod-p rank pre-check")->capture_default_str();
  app.add_option("--out", o.out, "write the JSON report here (- for standard output)");
  app.add_option("--seed", o.seed, "seed for random catalog entries");
  app.add_flag("--require-stable", o.require_stable, "exit 2 if any verdict is unstable");

  auto sub = [&](const std::string& name, const std::string& desc, int files, const std::string& what) {
    auto* s = app.add_subcommand(name, desc);
    s->add_option("inputs", o.files, what)->required()->expected(files);
    return s;
  };
  const std::string doc = "category document, - for standard input, or catalog:<name>";
  sub("check", "validate a category document", 1, doc);
  sub("hh", "Hochschild homology", 1, doc);
  sub("hc", "cyclic homology", 1, doc);
  sub("hc-minus", "negative cyclic homology", 1, doc);
  sub("delta", "boundary map HH -> HC-", 1, doc);
  sub("degeneration", "degeneration verdict in the window", 1, doc);
  sub("e1", "first page of the Hochschild-to-cyclic spectral sequence", 1, doc);
  sub("kunneth", "Kunneth comparison for A and B", 2, doc);
  sub("glue", "glue A and B along a bimodule document", 3, doc);
  sub("tensor", "tensor product of A and B", 2, doc);
  sub("op", "opposite category", 1, doc);
  sub("quotient", "Drinfeld quotient by one object", 1, doc)->add_option("--object", o.object)->required();
  sub("chern", "Chern character in HH_0", 1, doc)->add_option("--class", o.cls, "class name or id:<object>")->required();
  sub("pairing", "pairing matrix induced by the diagonal class", 1, doc);
  sub("phi0", "phi_0 of a class over B (x) C", 2, doc)
      ->add_option("--class", o.cls, "diagonal or id:<b>,<c>")
      ->required();
  sub("catalog", "print a catalog entry (k, a2, a3, dual_numbers, exterior:<d>, random:<seed>)", 1, "name");

  std::vector<std::string> argv_s{kToolName};
  argv_s.insert(argv_s.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_s) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kComputed;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o, args, in, out);
  } catch (const DocumentError& e) {
    err << "error: " << (e.code() == DocumentError::Code::Schema ? "schema" : "axiom") << " at " << e.what() << "\n";
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const UnsupportedInput& e) {
    err << "error: unsupported input: " << e.what() << "\n";
  } catch (const InconsistentInput& e) {
    err << "error: inconsistent input: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace dgwork
