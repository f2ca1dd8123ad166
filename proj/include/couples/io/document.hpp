#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "couples/engine/exact_couple.hpp"
#include "couples/filt/filt_category.hpp"
#include "couples/gen/filtered_complex.hpp"
#include "couples/vect/vect_category.hpp"
#include "json.hpp"

namespace couples {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Malformed or inconsistent document. Syntax errors carry a line and column;
/// semantic errors name the offending location as a JSON pointer.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& what, std::optional<std::size_t> line = std::nullopt,
                std::optional<std::size_t> column = std::nullopt)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

enum class DocumentKind { couple, complex, tree };

/// A parsed couple or complex. Couples are shape-checked and every matrix is
/// checked to be a morphism, but exactness is left to the caller.
struct Document {
  DocumentKind kind = DocumentKind::couple;
  std::optional<ExactCouple<VectObject>> vect;
  std::optional<ExactCouple<FiltObject>> filt;
  std::optional<FilteredComplex> complex;
};

Document parse_document(std::string_view text);
Document read_document(const std::filesystem::path& path);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where);
Json filtration_to_json(const FiltObject& x);

Json to_json(const ExactCouple<VectObject>& c);
Json to_json(const ExactCouple<FiltObject>& c);
Json to_json(const FilteredComplex& fc);
Json to_json(const Document& doc);

/// Canonical text: two-space indentation, fixed key order, trailing newline.
std::string dump_canonical(const Json& j);
std::string serialize(const Document& doc);

}  // namespace couples
