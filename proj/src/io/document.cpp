#include "couples/io/document.hpp"

#include <fstream>
#include <sstream>

#include "couples/category/morphisms.hpp"

namespace couples {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw DocumentError((where.empty() ? "/" : where) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t count_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw DocumentError(where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw DocumentError(where + ": expected a rational as \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw DocumentError(where + ": " + e.what());
  }
}

// Rows listed in the document are the basis vectors.
Subspace subspace_from_json(const Json& j, std::size_t ambient, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected a list of basis vectors");
  return Subspace::span(matrix_from_json(j, j.size(), ambient, where).transpose());
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis().transpose()); }

VectObject vect_object(const Json& j, const std::string& where) {
  return VectObject{count_from_json(member(j, "dim", where), where + "/dim")};
}

FiltObject filt_object(const Json& j, const std::string& where) {
  const std::size_t dim = count_from_json(member(j, "dim", where), where + "/dim");
  const Json& steps = member(j, "filtration", where);
  if (!steps.is_array()) throw DocumentError(where + "/filtration: expected a list of steps");
  std::vector<Subspace> subspaces;
  for (std::size_t p = 0; p < steps.size(); ++p) {
    subspaces.push_back(subspace_from_json(steps[p], dim, where + "/filtration/" + std::to_string(p)));
  }
  try {
    return FiltObject(dim, std::move(subspaces));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(where + "/filtration: " + e.what());
  }
}

template <LinearCategory C>
ExactCouple<ObjectOf<C>> couple_from_json(const C& cat, const Json& j, ObjectOf<C> (*object)(const Json&, const std::string&)) {
  const Json& objects = member(j, "objects", "");
  const auto d = object(member(objects, "D", "/objects"), "/objects/D");
  const auto e = object(member(objects, "E", "/objects"), "/objects/E");
  const Json& morphisms = member(j, "morphisms", "");
  auto arrow = [&](const char* name, const ObjectOf<C>& s, const ObjectOf<C>& t) {
    const std::string where = std::string("/morphisms/") + name;
    Matrix m = matrix_from_json(member(morphisms, name, "/morphisms"), cat.dim(t), cat.dim(s), where);
    try {
      return make_morphism(cat, s, t, std::move(m));
    } catch (const NotAMorphism& err) {
      throw DocumentError(where + ": " + err.what());
    }
  };
  auto alpha = arrow("alpha", d, d);
  auto beta = arrow("beta", d, e);
  auto gamma = arrow("gamma", e, d);
  return {d, e, std::move(alpha), std::move(beta), std::move(gamma)};
}

FilteredComplex complex_from_json(const Json& j) {
  FilteredComplex fc;
  const Json& dims = member(j, "dims", "");
  if (!dims.is_array() || dims.empty()) throw DocumentError("/dims: expected a non-empty list");
  for (std::size_t n = 0; n < dims.size(); ++n) fc.dims.push_back(count_from_json(dims[n], "/dims/" + std::to_string(n)));
  const Json& ds = member(j, "differentials", "");
  if (!ds.is_array() || ds.size() + 1 != fc.dims.size()) {
    throw DocumentError("/differentials: expected one matrix per degree above 0");
  }
  fc.d.push_back(Matrix(0, fc.dims[0]));
  for (std::size_t n = 1; n < fc.dims.size(); ++n) {
    fc.d.push_back(matrix_from_json(ds[n - 1], fc.dims[n - 1], fc.dims[n], "/differentials/" + std::to_string(n - 1)));
  }
  const Json& filt = member(j, "filtration", "");
  if (!filt.is_array()) throw DocumentError("/filtration: expected a list of steps");
  for (std::size_t p = 0; p < filt.size(); ++p) {
    const std::string where = "/filtration/" + std::to_string(p);
    if (!filt[p].is_array() || filt[p].size() != fc.dims.size()) {
      throw DocumentError(where + ": expected one subspace per degree");
    }
    std::vector<Subspace> level;
    for (std::size_t n = 0; n < fc.dims.size(); ++n) {
      level.push_back(subspace_from_json(filt[p][n], fc.dims[n], where + "/" + std::to_string(n)));
    }
    fc.filtration.push_back(std::move(level));
  }
  try {
    fc.validate();
  } catch (const ComplexError& e) {
    throw DocumentError(std::string("complex: ") + e.what());
  }
  return fc;
}

Json header(const char* kind) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw DocumentError(where + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_where = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols) {
      throw DocumentError(row_where + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c], row_where + "/" + std::to_string(c));
  }
  return m;
}

Json filtration_to_json(const FiltObject& x) {
  Json steps = Json::array();
  for (const auto& s : x.steps()) steps.push_back(subspace_to_json(s));
  return steps;
}

Json to_json(const ExactCouple<VectObject>& c) {
  Json j = header("couple");
  j["backend"] = "vect";
  j["objects"]["D"]["dim"] = c.D.dim;
  j["objects"]["E"]["dim"] = c.E.dim;
  j["morphisms"]["alpha"] = matrix_to_json(c.alpha.matrix);
  j["morphisms"]["beta"] = matrix_to_json(c.beta.matrix);
  j["morphisms"]["gamma"] = matrix_to_json(c.gamma.matrix);
  return j;
}

Json to_json(const ExactCouple<FiltObject>& c) {
  Json j = header("couple");
  j["backend"] = "filt";
  j["objects"]["D"]["dim"] = c.D.dim();
  j["objects"]["D"]["filtration"] = filtration_to_json(c.D);
  j["objects"]["E"]["dim"] = c.E.dim();
  j["objects"]["E"]["filtration"] = filtration_to_json(c.E);
  j["morphisms"]["alpha"] = matrix_to_json(c.alpha.matrix);
  j["morphisms"]["beta"] = matrix_to_json(c.beta.matrix);
  j["morphisms"]["gamma"] = matrix_to_json(c.gamma.matrix);
  return j;
}

Json to_json(const FilteredComplex& fc) {
  Json j = header("complex");
  j["dims"] = fc.dims;
  Json ds = Json::array();
  for (std::size_t n = 1; n < fc.d.size(); ++n) ds.push_back(matrix_to_json(fc.d[n]));
  j["differentials"] = std::move(ds);
  Json filt = Json::array();
  for (const auto& level : fc.filtration) {
    Json l = Json::array();
    for (const auto& s : level) l.push_back(subspace_to_json(s));
    filt.push_back(std::move(l));
  }
  j["filtration"] = std::move(filt);
  return j;
}

Json to_json(const Document& doc) {
  if (doc.vect) return to_json(*doc.vect);
  if (doc.filt) return to_json(*doc.filt);
  if (doc.complex) return to_json(*doc.complex);
  throw DocumentError("empty document");
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string serialize(const Document& doc) { return dump_canonical(to_json(doc)); }

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    throw DocumentError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                            e.what(),
                        line, column);
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  const Json& version = member(j, "format_version", "");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    throw DocumentError("/format_version: unsupported version");
  }
  const Json& kind = member(j, "kind", "");
  if (!kind.is_string()) throw DocumentError("/kind: expected a string");
  Document doc;
  const auto k = kind.get<std::string>();
  if (k == "couple") {
    doc.kind = DocumentKind::couple;
    const Json& backend = member(j, "backend", "");
    if (backend == "vect") {
      doc.vect = couple_from_json(VectCategory{}, j, &vect_object);
    } else if (backend == "filt") {
      doc.filt = couple_from_json(FiltCategory{}, j, &filt_object);
    } else {
      throw DocumentError("/backend: expected \"vect\" or \"filt\"");
    }
  } else if (k == "complex") {
    doc.kind = DocumentKind::complex;
    doc.complex = complex_from_json(j);
  } else if (k == "tree") {
    throw DocumentError("/kind: tree documents are output only");
  } else {
    throw DocumentError("/kind: unknown kind \"" + k + "\"");
  }
  return doc;
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace couples
