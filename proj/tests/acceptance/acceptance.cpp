// Acceptance suite: one PASS/FAIL line per criterion, plus the evidence
// ledger (JSON) and its markdown table.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dgwork/catalog.hpp"
#include "dgwork/report.hpp"

using namespace dgwork;

namespace {

// Tolerances: every comparison below is exact over Q (dimensions, ranks,
// matrix equality, determinant != 0). No floating point is involved.
constexpr std::size_t kRandomSeeds = 100;
constexpr std::size_t kRandomBarLength = 3;
constexpr DegreeWindow kQuotientWindow{-3, 3};

struct Settings {
  ComputationParams params;  // L, N, window of the suite
};

struct Outcome {
  bool pass = false;
  bool stable = true;
  std::string detail;
  ComputationParams params;
  std::vector<Json> inputs;  // canonical documents of the inputs
};

struct Criterion {
  int number;
  std::string id;
  std::string statement;
  std::function<Outcome(const Settings&)> run;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

Json doc(const CategoryPtr& c) { return category_to_json(*c); }

ComputationParams with(ComputationParams p, std::size_t L, std::size_t N) {
  p.max_bar_length = L;
  p.max_u_power = N;
  return p;
}

// ---------------------------------------------------------------------------

Outcome mixed_identities(const Settings& s) {
  Outcome o;
  o.params = s.params;
  std::vector<std::string> failures;
  std::size_t words = 0;
  auto check = [&](const std::string& name, const CategoryPtr& c, std::size_t L) {
    Workbench w(c, with(s.params, L, 1));
    const auto r = check_mixed_identities(*w.mixed(L));
    words += r.words_checked;
    if (!r.ok()) failures.push_back(name);
    o.inputs.push_back(doc(c));
  };
  for (const auto& name : {"k", "a2", "a3", "dual_numbers", "exterior:1", "exterior:-1"}) {
    check(name, catalog_entry(name).category, s.params.max_bar_length);
  }
  for (std::uint64_t seed = 0; seed < kRandomSeeds; ++seed) {
    check("random:" + std::to_string(seed), random_category(seed).category,
          std::min(s.params.max_bar_length, kRandomBarLength));
  }
  o.pass = failures.empty();
  o.detail = std::to_string(words) + " words checked over 6 catalog entries and " + std::to_string(kRandomSeeds) +
             " random categories (random at L=" + std::to_string(std::min(s.params.max_bar_length, kRandomBarLength)) +
             ")" + (failures.empty() ? "" : "; failures: " + join(failures));
  return o;
}

Outcome ground_field_invariants(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto k = dgwork::ground_field().category;
  o.inputs.push_back(doc(k));
  Workbench w(k, s.params);
  const auto h = hh(w, false), c = hc(w), cm = hc_minus(w);
  const auto ds = delta(w);
  const auto& win = s.params.window;
  std::vector<std::string> bad;
  auto expect = [&](const HomologyPresentation& p, int n, std::size_t dim, bool must_be_stable) {
    if (!p.stable(n)) {
      if (must_be_stable) bad.push_back(p.kind + "_" + std::to_string(n) + " unstable");
      return;
    }
    if (p.dim(n) != dim) bad.push_back(p.kind + "_" + std::to_string(n) + "=" + std::to_string(p.dim(n)));
  };
  const int frontier = static_cast<int>(s.params.max_bar_length) - 1;
  for (int n = win.lo; n <= win.hi; ++n) {
    expect(h, n, n == 0 ? 1 : 0, n <= frontier);
    const bool hc_listed = n == 0 || n == 2 || n == 4;
    const bool hcm_listed = n == 0 || n == -2 || n == -4;
    expect(c, n, n >= 0 && n % 2 == 0 ? 1 : 0, hc_listed);
    expect(cm, n, n <= 0 && n % 2 == 0 ? 1 : 0, hcm_listed);
  }
  std::size_t zero = 0;
  for (const auto& d : ds) {
    if (d.verdict == Verdict::Nonzero) bad.push_back("delta_" + std::to_string(d.degree) + " nonzero");
    zero += d.verdict == Verdict::Zero;
  }
  o.pass = bad.empty() && zero > 0;
  o.detail = "HH, HC, HC- match on stable degrees; delta zero on " + std::to_string(zero) + " stable degrees" +
             (bad.empty() ? "" : "; problems: " + join(bad));
  return o;
}

Outcome dual_numbers_oracle(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto e = dual_numbers();
  o.inputs.push_back(doc(e.category));
  Workbench w(e.category, s.params);
  Workbench w1(e.category, with(s.params, s.params.max_bar_length + 1, s.params.max_u_power));
  const auto h = hh(w, false), h1 = hh(w1, false);
  std::vector<std::string> bad, dims;
  for (int n = 0; n <= 4; ++n) {
    const std::size_t want = e.expected.hh.at(n);
    if (!h.stable(n)) bad.push_back("HH_" + std::to_string(n) + " unstable");
    if (h.dim(n) != want) bad.push_back("HH_" + std::to_string(n) + "=" + std::to_string(h.dim(n)));
    if (h1.dim(n) != h.dim(n) || !h1.stable(n)) bad.push_back("HH_" + std::to_string(n) + " moves at L+1");
    dims.push_back(std::to_string(h.dim(n)));
  }
  o.pass = bad.empty();
  o.detail = "HH_0..4 = (" + join(dims) + ") equals the 2-periodic resolution oracle, unchanged at L+1" +
             (bad.empty() ? "" : "; problems: " + join(bad));
  return o;
}

Outcome kunneth(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto k = dgwork::ground_field().category;
  const auto dn = dual_numbers().category;
  o.inputs = std::vector<Json>{doc(k), doc(dn)};
  std::vector<std::string> parts;
  bool ok = true;
  const std::vector<std::tuple<std::string, CategoryPtr, CategoryPtr>> pairs{{"k x dual", k, dn},
                                                                            {"dual x dual", dn, dn}};
  for (const auto& [name, a, b] : pairs) {
    const auto r = kunneth_check(a, b, s.params);
    ok = ok && r.ok() && !r.degrees.empty();
    std::vector<std::string> ds;
    for (const auto& d : r.degrees) ds.push_back(std::to_string(d.degree));
    parts.push_back(std::string(name) + ": " + (r.ok() ? "match" : "MISMATCH") + " on degrees {" + join(ds, ",") + "}");
  }
  o.pass = ok;
  o.detail = join(parts, "; ");
  return o;
}

Outcome gluing_additivity(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto k = dgwork::ground_field().category;
  const auto a = a2().category;
  std::vector<std::string> parts;
  bool ok = true;
  auto run = [&](const std::string& name, const CategoryPtr& x, const CategoryPtr& y, const Bimodule& m) {
    const auto r = gluing_additivity_check(x, y, m, s.params);
    ok = ok && r.ok();
    parts.push_back(name + ": " + std::to_string(r.glued_words) + " words = " + std::to_string(r.a_words) + " + " +
                    std::to_string(r.b_words) + (r.ok() ? ", b and B block-diagonal" : ", FAILED"));
    o.inputs.push_back(bimodule_to_json(m));
  };
  run("glue(A2, k, point at x)", a, k, point_bimodule(a, k, 0, 0));
  run("glue(A2, k, point at y)", a, k, point_bimodule(a, k, 1, 0));
  run("glue(k, k, k)", k, k, point_bimodule(k, k, 0, 0));
  o.pass = ok;
  o.detail = join(parts, "; ");
  return o;
}

Outcome morita(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto a = a2().category;
  const auto amp = matrix_amplification(a, 2);
  o.inputs = std::vector<Json>{doc(a), doc(amp.category)};
  Workbench wa(a, s.params), wm(amp.category, s.params);
  const auto r = morita_check(wa, wm);
  const auto f = hh_induced_map(amp.inclusion, wa, wm);
  bool iso = false;
  if (f.matrices.count(0)) {
    const auto& m = f.matrices.at(0);
    iso = m.rows() == m.cols() && rank(m) == m.rows();
  }
  std::vector<std::string> hd, cd;
  for (const auto& d : r.hh) hd.push_back(std::to_string(d.degree));
  for (const auto& d : r.hc_minus) cd.push_back(std::to_string(d.degree));
  o.pass = r.ok() && iso;
  o.detail = std::string("HH agrees on {") + join(hd, ",") + "}, HC- on {" + join(cd, ",") +
             "}; corner inclusion on HH_0 " + (iso ? "is an isomorphism" : "is NOT an isomorphism") +
             (r.ok() ? "" : "; dimension mismatch");
  return o;
}

Outcome long_exact(const Settings& s) {
  Outcome o;
  o.params = s.params;
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& e : {dgwork::ground_field(), a2(), dual_numbers()}) {
    o.inputs.push_back(doc(e.category));
    Workbench w(e.category, s.params);
    const auto r = long_exact_check(w);
    ok = ok && r.ok() && r.stable_degrees() > 0;
    parts.push_back(e.name + ": " + std::to_string(r.stable_degrees()) + " stable nodes" + (r.ok() ? "" : " NOT EXACT"));
  }
  o.pass = ok;
  o.detail = join(parts, "; ");
  return o;
}

Outcome degeneration(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto up = with(s.params, s.params.max_bar_length + 1, s.params.max_u_power + 1);
  std::vector<std::pair<std::string, CategoryPtr>> cats;
  for (const auto& e : {dgwork::ground_field(), a2(), a3()}) {
    cats.emplace_back(e.name, e.category);
    cats.emplace_back("M2(" + e.name + ")", matrix_amplification(e.category, 2).category);
  }
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& [name, c] : cats) {
    o.inputs.push_back(doc(c));
    Workbench w(c, s.params);
    const auto r = degeneration_check(w);
    // Recompute each stable verdict at (L+1, N+1) from the same workbench.
    std::size_t moved = 0;
    for (const auto& v : r.verdicts) {
      if (!v.stable) continue;
      const auto m = delta_matrix(w, up.max_bar_length, up.max_u_power, v.degree);
      if ((rank(m) == 0) != (v.verdict == Verdict::Zero)) ++moved;
    }
    const bool good = r.degenerate && r.stable_degrees > 0 && moved == 0;
    ok = ok && good;
    parts.push_back(name + ": zero on " + std::to_string(r.stable_degrees) + " stable degrees" +
                    (moved ? ", " + std::to_string(moved) + " verdicts move at (L+1,N+1)" : "") +
                    (r.degenerate ? "" : ", NONZERO"));
  }
  o.pass = ok;
  o.detail = join(parts, "; ") + "; verdicts unchanged at (L+1,N+1)";
  return o;
}

Outcome pairing(const Settings& s) {
  Outcome o;
  o.params = s.params;
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& e : {dgwork::ground_field(), a2(), a3()}) {
    o.inputs.push_back(doc(e.category));
    const auto r = pairing_check(e.category, s.params);
    ok = ok && r.invertible && r.stable;
    o.stable = o.stable && r.stable;
    parts.push_back(e.name + ": det " + to_string(r.determinant));
  }
  o.pass = ok;
  o.detail = join(parts, "; ");
  return o;
}

Outcome phi0_instances(const Settings& s) {
  Outcome o;
  o.params = s.params;
  std::vector<std::string> parts;
  bool ok = true;
  for (const auto& e : {a2(), a3()}) {
    o.inputs.push_back(doc(e.category));
    const auto r = phi0_diagonal(e.category, s.params);
    ok = ok && r.verdict == Verdict::Zero;
    o.stable = o.stable && r.verdict != Verdict::Unstable;
    parts.push_back(e.name + ": " + to_string(r.verdict) + " (" + std::to_string(r.value.rows()) + "x" +
                    std::to_string(r.value.cols()) + ")");
  }
  o.pass = ok;
  o.detail = "phi_0 of the diagonal class through ch, Kunneth split and delta: " + join(parts, "; ");
  return o;
}

Outcome gluing_components(const Settings& s) {
  Outcome o;
  o.params = s.params;
  const auto k = dgwork::ground_field().category;
  const auto m = point_bimodule(k, k, 0, 0);
  o.inputs = std::vector<Json>{doc(k), bimodule_to_json(m)};
  const auto r = gluing_component_check(k, k, m, s.params);
  o.pass = r.ok() && r.resolution_route_agrees.value_or(false);
  o.detail = std::string("blocks (B,B) ") + (r.bb_ok ? "= ch[I_k]" : "WRONG") + ", (C,C) " +
             (r.cc_ok ? "= ch[I_k]" : "WRONG") + ", (C,B) " + (r.cb_ok ? "= -ch[m]" : "WRONG") + ", (B,C) " +
             (r.bc_zero ? "= 0" : "NONZERO") + "; resolution route " +
             (r.resolution_route_agrees.value_or(false) ? "agrees" : "disagrees");
  return o;
}

Outcome drinfeld(const Settings& s) {
  Outcome o;
  o.params = s.params;
  o.params.window = kQuotientWindow;
  const auto a = a2().category;
  const auto k = dgwork::ground_field().category;
  const auto q = share(drinfeld_quotient(*a, 0, kQuotientWindow));
  o.inputs = std::vector<Json>{doc(q)};
  Workbench wq(q, o.params), wk(k, o.params);
  const auto hq = hh(wq, false), hk = hh(wk, false);
  std::vector<std::string> bad, dims;
  std::size_t compared = 0;
  for (int n = kQuotientWindow.lo; n <= kQuotientWindow.hi; ++n) {
    if (!hq.stable(n) || !hk.stable(n)) continue;
    ++compared;
    dims.push_back(std::to_string(n) + ":" + std::to_string(hq.dim(n)));
    if (hq.dim(n) != hk.dim(n)) bad.push_back("HH_" + std::to_string(n));
  }
  o.pass = bad.empty() && hq.stable(0);
  o.detail = "HH of the quotient by x on stable degrees {" + join(dims, ",") + "} equals HH(k)" +
             (bad.empty() ? "" : "; mismatch at " + join(bad));
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "mixed-complex-identities", "b^2 = 0, B^2 = 0 and bB + Bb = 0 on the reduced Hochschild complex",
       mixed_identities},
      {2, "ground-field-invariants", "HH, HC and HC- of the ground field; delta = 0", ground_field_invariants},
      {3, "dual-numbers-hochschild", "HH of the dual numbers agrees with the periodic-resolution oracle",
       dual_numbers_oracle},
      {4, "kunneth-multiplicativity", "Hochschild homology is multiplicative under tensor products", kunneth},
      {5, "gluing-additivity", "The mixed complex of a gluing is the direct sum of the factors' mixed complexes",
       gluing_additivity},
      {6, "morita-invariance", "HH and HC- are invariant under matrix amplification; the corner inclusion is an "
                               "isomorphism on HH_0",
       morita},
      {7, "hochschild-cyclic-long-exact-sequence", "The long exact sequence relating HH and truncated HC- is exact",
       long_exact},
      {8, "degeneration-verdicts", "The boundary map HH -> HC- vanishes for A_n quivers and their amplifications",
       degeneration},
      {9, "diagonal-pairing-isomorphism", "The pairing induced by ch of the diagonal bimodule is an isomorphism",
       pairing},
      {10, "phi0-vanishing-on-quivers", "phi_0 of the diagonal class vanishes for A2 and A3", phi0_instances},
      {11, "gluing-chern-components", "ch of the diagonal of glue(k, k, k) has components (ch I_k, ch I_k, -ch m, 0)",
       gluing_components},
      {12, "drinfeld-quotient-sanity", "The Drinfeld quotient of A2 by x has the Hochschild homology of k",
       drinfeld},
  };
}

// ---------------------------------------------------------------------------

struct Entry {
  Criterion criterion;
  Outcome outcome;
};

std::string input_hash(const std::vector<Json>& inputs) {
  std::string bytes;
  for (const auto& j : inputs) bytes += dump(j);
  return fnv1a(bytes);
}

Json window_json(const ComputationParams& p) {
  return {{"L", p.max_bar_length}, {"N", p.max_u_power}, {"window", {p.window.lo, p.window.hi}}};
}

Json ledger_json(const std::vector<Entry>& entries, const Settings& s) {
  Json rows = Json::array(), verdicts = Json::array(), seeds = Json::array();
  for (std::uint64_t seed = 0; seed < kRandomSeeds; ++seed) seeds.push_back(seed);
  for (const auto& e : entries) {
    const auto& p = e.outcome.params;
    const std::string verdict = e.outcome.pass ? "PASS" : "FAIL";
    rows.push_back({{"criterion", e.criterion.number},
                    {"id", e.criterion.id},
                    {"statement", e.criterion.statement},
                    {"command", "dgwork_acceptance --only " + std::to_string(e.criterion.number)},
                    {"verdict", verdict},
                    {"detail", e.outcome.detail},
                    {"window", window_json(p)},
                    {"input_hash", input_hash(e.outcome.inputs)}});
    Json v = window_json(p);
    v["id"] = e.criterion.id;
    v["verdict"] = verdict;
    v["stable"] = e.outcome.stable;
    verdicts.push_back(std::move(v));
  }
  const auto& p = s.params;
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = "dgwork_acceptance";
  j["parameters"] = {{"L", p.max_bar_length},
                     {"N", p.max_u_power},
                     {"window", {p.window.lo, p.window.hi}},
                     {"field", "q"}};
  j["inputs"] = Json::array();
  j["results"] = {{"ledger", rows}};
  j["verdicts"] = verdicts;
  j["seeds"] = seeds;
  return j;
}

std::string markdown(const Json& ledger) {
  std::ostringstream s;
  s << "| # | criterion | verdict | L | N | window | evidence |\n";
  s << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : ledger["results"]["ledger"]) {
    const auto& w = r["window"];
    s << "| " << r["criterion"].get<int>() << " | " << r["id"].get<std::string>() << " | "
      << r["verdict"].get<std::string>() << " | " << w["L"].get<std::size_t>() << " | " << w["N"].get<std::size_t>()
      << " | " << w["window"][0].get<int>() << ".." << w["window"][1].get<int>() << " | "
      << r["detail"].get<std::string>() << " |\n";
  }
  return s.str();
}

bool splice_readme(const std::string& path, const std::string& table) {
  const std::string begin = "<!-- results:begin -->", end = "<!-- results:end -->";
  std::string text;
  try {
    text = read_file(path);
  } catch (const DocumentError&) {
    return false;
  }
  const auto b = text.find(begin), e = text.find(end);
  if (b == std::string::npos || e == std::string::npos || e < b) return false;
  text = text.substr(0, b + begin.size()) + "\n" + table + text.substr(e);
  std::ofstream(path, std::ios::binary) << text;
  return true;
}

void write(const std::string& path, const std::string& bytes) {
  if (!path.empty()) std::ofstream(path, std::ios::binary) << bytes;
}

std::vector<Entry> run_all(const Settings& s, const std::vector<int>& only, bool verbose) {
  std::vector<Entry> out;
  for (const auto& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(s);
    } catch (const std::exception& e) {
      o.params = s.params;
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (verbose) {
      std::cout << (o.pass ? "PASS" : "FAIL") << " " << (c.number < 10 ? " " : "") << c.number << " " << c.id
                << ": " << o.detail << " [" << std::fixed << std::setprecision(1) << secs << "s]" << std::endl;
    }
    out.push_back({c, std::move(o)});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite", "dgwork_acceptance"};
  Settings s;
  std::vector<int> only;
  std::string ledger_path, markdown_path, readme_path;
  bool repeat = true;
  app.add_option("--max-bar-length", s.params.max_bar_length)->capture_default_str();
  app.add_option("--max-u-power", s.params.max_u_power)->capture_default_str();
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--ledger", ledger_path, "write the ledger JSON here");
  app.add_option("--markdown", markdown_path, "write the results table here");
  app.add_option("--readme", readme_path, "splice the results table into this README");
  app.add_flag("!--no-repeat", repeat, "skip the second run used by the determinism criterion");
  CLI11_PARSE(app, argc, argv);

  const auto first = run_all(s, only, true);
  const Json ledger = ledger_json(first, s);
  const std::string bytes = dump(ledger);

  bool all = std::all_of(first.begin(), first.end(), [](const Entry& e) { return e.outcome.pass; });
  Json full = ledger;
  if (only.empty() || std::find(only.begin(), only.end(), 13) != only.end()) {
    Outcome det;
    det.params = s.params;
    if (repeat) {
      const std::string again = dump(ledger_json(run_all(s, only, false), s));
      det.pass = again == bytes;
      det.detail = "second run of criteria 1-12 gives " + std::string(det.pass ? "byte-identical" : "DIFFERENT") +
                   " ledger (" + std::to_string(bytes.size()) + " bytes, hash " + fnv1a(bytes) + ")";
    } else {
      det.detail = "skipped (--no-repeat)";
    }
    std::cout << (det.pass ? "PASS" : "FAIL") << " 13 determinism: " << det.detail << std::endl;
    all = all && det.pass;
    auto entries = first;
    entries.push_back({{13, "report-determinism", "Two runs of the suite produce byte-identical reports", nullptr}, det});
    full = ledger_json(entries, s);
  }

  write(ledger_path, dump(full));
  const std::string table = markdown(full);
  write(markdown_path, table);
  if (!readme_path.empty() && !splice_readme(readme_path, table)) {
    std::cerr << "could not splice results into " << readme_path << "\n";
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
