#include "dgwork/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace dgwork {

std::string fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json matrix_json(const SparseMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.to_dense()) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(to_string(a));
    out.push_back(std::move(r));
  }
  return out;
}

Json vector_json(const SparseVector& v, std::size_t dim) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dim; ++i) out.push_back(to_string(v.at(i)));
  return out;
}

Json presentation_json(const HomologyPresentation& h) {
  Json out = Json::array();
  for (const auto& [n, d] : h.degrees) out.push_back({{"degree", n}, {"dim", d.dimension}, {"stable", d.stable}});
  return out;
}

Report::Report(std::string command, RunSettings settings)
    : command_(std::move(command)), settings_(std::move(settings)) {}

void Report::add_input(const std::string& role, const Json& canonical) {
  inputs_.push_back({{"role", role}, {"hash", fnv1a(dump(canonical))}});
}

void Report::set(const std::string& key, Json value) { results_[key] = std::move(value); }

void Report::add_table(const std::string& name, std::vector<std::string> columns,
                       std::vector<std::vector<Json>> rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json o = Json::object();
    for (std::size_t i = 0; i < columns.size() && i < r.size(); ++i) o[columns[i]] = r[i];
    arr.push_back(std::move(o));
  }
  results_[name] = std::move(arr);
  tables_.push_back({name, std::move(columns), std::move(rows)});
}

void Report::add_verdict(const std::string& id, const std::string& verdict, bool stable) {
  const auto& p = settings_.params;
  verdicts_.push_back({{"id", id},
                       {"verdict", verdict},
                       {"stable", stable},
                       {"L", p.max_bar_length},
                       {"N", p.max_u_power},
                       {"window", {p.window.lo, p.window.hi}}});
}

bool Report::all_stable() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Json& v) { return v["stable"].get<bool>(); });
}

Json Report::to_json() const {
  const auto& p = settings_.params;
  Json j;
  j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = command_;
  j["parameters"] = {{"L", p.max_bar_length},
                     {"N", p.max_u_power},
                     {"window", {p.window.lo, p.window.hi}},
                     {"field", settings_.field}};
  j["inputs"] = inputs_;
  j["results"] = results_;
  j["verdicts"] = verdicts_;
  j["seeds"] = settings_.seed ? Json::array({*settings_.seed}) : Json::array();
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

}  // namespace

std::string Report::to_text() const {
  const auto& p = settings_.params;
  std::ostringstream s;
  s << command_ << "  (L=" << p.max_bar_length << ", N=" << p.max_u_power << ", window " << p.window.lo << ":"
    << p.window.hi << ", field " << settings_.field << ")\n";
  for (const auto& t : tables_) {
    s << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) w[i] = t.columns[i].size();
    for (const auto& r : t.rows)
      for (std::size_t i = 0; i < w.size() && i < r.size(); ++i) w[i] = std::max(w[i], cell(r[i]).size());
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        s << "  " << cells[i] << std::string(w[i] - cells[i].size(), ' ');
      }
      s << "\n";
    };
    line(t.columns);
    for (const auto& r : t.rows) {
      std::vector<std::string> cells;
      for (std::size_t i = 0; i < w.size(); ++i) cells.push_back(i < r.size() ? cell(r[i]) : "");
      line(cells);
    }
  }
  std::vector<std::string> scalars;
  for (const auto& [k, v] : results_.items()) {
    bool tabled = false;
    for (const auto& t : tables_) tabled = tabled || t.name == k;
    if (!tabled) scalars.push_back(k + ": " + (v.is_structured() ? v.dump() : cell(v)));
  }
  if (!scalars.empty()) s << "\n";
  for (const auto& l : scalars) s << l << "\n";
  if (!verdicts_.empty()) s << "\n";
  for (const auto& v : verdicts_) {
    s << "verdict " << v["id"].get<std::string>() << ": " << v["verdict"].get<std::string>()
      << (v["stable"].get<bool>() ? "" : " (unstable)") << "\n";
  }
  return s.str();
}

}  // namespace dgwork
