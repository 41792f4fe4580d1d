#ifndef DGWORK_IO_HPP
#define DGWORK_IO_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dgwork/chern.hpp"

namespace dgwork {

using Json = nlohmann::json;

/// Structured load failure. `location` is a JSON path such as
/// "hom[2].basis[0].degree"; axiom failures carry the validator's message.
class DocumentError : public std::runtime_error {
 public:
  enum class Code { Schema, Axiom };
  DocumentError(Code code, std::string location, const std::string& message);
  Code code() const { return code_; }
  const std::string& location() const { return location_; }

 private:
  Code code_;
  std::string location_;
};

struct NamedBimodule {
  std::string name;
  Bimodule bimodule;  // over (category, category)
};

struct NamedFunctor {
  std::string name;
  Functor functor;  // from the category to an embedded target
};

struct NamedK0Class {
  std::string name;
  K0Class k0;
};

/// A category document with its optional companion sections.
struct CategoryBundle {
  CategoryPtr category;
  std::vector<NamedBimodule> bimodules;
  std::vector<NamedFunctor> functors;
  std::vector<NamedK0Class> k0_classes;
  Json expected;  // free-form metadata, e.g. catalog oracle tables
};

Json category_to_json(const Category& c);
/// Schema checks only; the category is not validated.
Category category_from_json(const Json& j, const std::string& where = "");

Json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Json& j, const CategoryPtr& a, const CategoryPtr& b,
                            const std::string& where = "");

Json functor_to_json(const Functor& f);
Functor functor_from_json(const Json& j, const CategoryPtr& source, const std::string& where = "");

Json k0_to_json(const K0Class& x);
K0Class k0_from_json(const Json& j, const CategoryPtr& c, const std::string& where = "");

Json bundle_to_json(const CategoryBundle& b);
/// Parses and validates every part; axiom failures raise Code::Axiom.
CategoryBundle bundle_from_json(const Json& j);

CategoryBundle bundle_from_text(const std::string& text);
Bimodule bimodule_from_text(const std::string& text, const CategoryPtr& a, const CategoryPtr& b);
std::string read_file(const std::string& path);

/// Two-space indented dump with sorted keys and a trailing newline.
std::string dump(const Json& j);

}  // namespace dgwork

#endif  // DGWORK_IO_HPP
