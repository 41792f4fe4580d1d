#ifndef DGWORK_REPORT_HPP
#define DGWORK_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgwork/io.hpp"

namespace dgwork {

inline constexpr const char* kToolName = "dgwork";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunSettings {
  ComputationParams params;
  std::string field = "q";  // "q" or "fp:<p>"
  std::optional<std::uint64_t> seed;
};

/// 64-bit FNV-1a, as 16 hex digits.
std::string fnv1a(std::string_view bytes);

/// Rationals as canonical strings, rows outermost.
Json matrix_json(const SparseMatrix& m);
/// Dense vector of canonical strings.
Json vector_json(const SparseVector& v, std::size_t dim);

/// Per-degree dims of a presentation: [{degree, dim, stable}].
Json presentation_json(const HomologyPresentation& h);

/// Report document. Keys are sorted on output and nothing depends on the
/// clock, so identical runs give identical bytes.
class Report {
 public:
  Report(std::string command, RunSettings settings);

  /// Records the input by the hash of its canonical dump.
  void add_input(const std::string& role, const Json& canonical);
  void set(const std::string& key, Json value);
  void add_table(const std::string& name, std::vector<std::string> columns, std::vector<std::vector<Json>> rows);
  /// Stamped with the (L, N) and window of the run.
  void add_verdict(const std::string& id, const std::string& verdict, bool stable);

  bool all_stable() const;
  Json to_json() const;
  std::string to_text() const;

 private:
  struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
  };
  std::string command_;
  RunSettings settings_;
  Json inputs_ = Json::array();
  Json results_ = Json::object();
  Json verdicts_ = Json::array();
  std::vector<Table> tables_;
};

}  // namespace dgwork

#endif  // DGWORK_REPORT_HPP
