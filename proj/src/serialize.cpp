#include "netkit/serialize.hpp"

#include "netkit/errors.hpp"

#include <sstream>

namespace netkit {

namespace {

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string at(const std::string& path, const char* key) { return path + "." + key; }

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& requireArray(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t sizeField(const Json& j, const char* key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    bad(at(path, key), "expected a non-negative integer");
  return v.get<std::size_t>();
}

Json nestedCoeffs(const MultiMap& f, std::size_t depth, std::size_t prefix) {
  if (depth == f.arity()) {
    const auto v = f.value(prefix);
    return toJson(Vector(v.begin(), v.end()));
  }
  Json out = Json::array();
  for (std::size_t i = 0; i < f.domainDim(); ++i) out.push_back(nestedCoeffs(f, depth + 1, prefix * f.domainDim() + i));
  return out;
}

void readCoeffs(const Json& j, MultiMap& f, std::size_t depth, std::size_t prefix, const std::string& path) {
  if (depth == f.arity()) {
    const Vector v = vectorFromJson(j, f.codomainDim(), path);
    std::copy(v.begin(), v.end(), f.value(prefix).begin());
    return;
  }
  requireArray(j, path);
  if (j.size() != f.domainDim())
    bad(path, "expected " + std::to_string(f.domainDim()) + " entries, got " + std::to_string(j.size()));
  for (std::size_t i = 0; i < f.domainDim(); ++i)
    readCoeffs(j[i], f, depth + 1, prefix * f.domainDim() + i, at(path, i));
}

} // namespace

Json toJson(const Rational& r) {
  if (auto v = r.toInt64()) return *v;
  return r.str();
}

Json toJson(const Vector& v) {
  Json out = Json::array();
  for (const Rational& r : v) out.push_back(toJson(r));
  return out;
}

Json toJson(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    out.push_back(toJson(Vector(row.begin(), row.end())));
  }
  return out;
}

Json toJson(const StructureTable& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      const auto v = t.at(i, j);
      row.push_back(toJson(Vector(v.begin(), v.end())));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Json toJson(const AlgebraSC& a) {
  Json out;
  out["name"] = a.name();
  out["dim"] = a.dim();
  out["flavor"] = flavorName(a.flavor());
  out["sc"] = toJson(a.table());
  return out;
}

Json toJson(const ActionMap& a) {
  Json out;
  out["source"] = toJson(a.source());
  out["target"] = toJson(a.target());
  Json rho = Json::array();
  for (const Matrix& m : a.rho()) rho.push_back(toJson(m));
  out["rho"] = std::move(rho);
  return out;
}

Json toJson(const TensorMap& t) {
  Json out;
  out["action"] = toJson(t.action());
  out["matrix"] = toJson(t.matrix());
  return out;
}

Json toJson(const LeibnizLie& l) {
  Json out;
  out["lie"] = toJson(l.lie);
  out["triangle"] = toJson(l.triangle);
  return out;
}

Json toJson(const MultiMap& f) {
  Json out;
  out["arity"] = f.arity();
  out["domainDim"] = f.domainDim();
  out["codomainDim"] = f.codomainDim();
  out["coeffs"] = nestedCoeffs(f, 0, 0);
  return out;
}

Json toJson(const Report& r) {
  Json out;
  out["check"] = r.check;
  out["passed"] = r.passed();
  Json vs = Json::array();
  for (const Violation& v : r.violations) {
    Json e;
    e["rule"] = v.rule;
    e["indices"] = v.indices;
    e["residual"] = toJson(v.residual);
    vs.push_back(std::move(e));
  }
  out["violations"] = std::move(vs);
  out["notes"] = r.notes;
  return out;
}

Json toJson(const CohomologyReport& c) {
  Json out;
  out["degree"] = c.degree;
  out["dimZ"] = c.dimZ;
  out["dimB"] = c.dimB;
  out["dimH"] = c.dimH;
  Json z = Json::array(), b = Json::array();
  for (const Vector& v : c.cocycleBasis.basis()) z.push_back(toJson(v));
  for (const Vector& v : c.coboundaryBasis.basis()) b.push_back(toJson(v));
  out["cocycleBasis"] = std::move(z);
  out["coboundaryBasis"] = std::move(b);
  return out;
}

Json toJson(const DeformationDirection& d) {
  Json out;
  out["base"] = toJson(d.base);
  out["direction"] = toJson(d.direction);
  return out;
}

Json toJson(const NijenhuisCandidate& c) {
  Json out;
  out["base"] = toJson(c.base);
  out["element"] = toJson(c.element);
  return out;
}

Rational rationalFromJson(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpq_class(mpz_class(std::to_string(j.get<std::uint64_t>()))));
    return Rational(mpq_class(mpz_class(std::to_string(j.get<std::int64_t>()))));
  }
  if (j.is_number_float()) bad(path, "floating-point numbers are not accepted; write \"p/q\"");
  if (!j.is_string()) bad(path, "expected an integer or a \"p/q\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(path, e.what());
  }
}

Vector vectorFromJson(const Json& j, std::size_t expected, const std::string& path) {
  requireArray(j, path);
  if (j.size() != expected)
    bad(path, "expected " + std::to_string(expected) + " entries, got " + std::to_string(j.size()));
  Vector v;
  v.reserve(expected);
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rationalFromJson(j[i], at(path, i)));
  return v;
}

Matrix matrixFromJson(const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  requireArray(j, path);
  if (j.size() != rows) bad(path, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  std::vector<Vector> rs;
  for (std::size_t r = 0; r < rows; ++r) rs.push_back(vectorFromJson(j[r], cols, at(path, r)));
  return Matrix::fromRows(rs, cols);
}

StructureTable tableFromJson(const Json& j, std::size_t dim, const std::string& path) {
  StructureTable t(dim);
  if (j.is_null()) return t;
  requireArray(j, path);
  if (j.size() > dim) bad(path, "more than " + std::to_string(dim) + " rows");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rowPath = at(path, i);
    if (j[i].is_null()) continue;
    requireArray(j[i], rowPath);
    if (j[i].size() > dim) bad(rowPath, "more than " + std::to_string(dim) + " entries");
    for (std::size_t k = 0; k < j[i].size(); ++k) {
      if (j[i][k].is_null()) continue;
      t.set(i, k, vectorFromJson(j[i][k], dim, at(rowPath, k)));
    }
  }
  return t;
}

AlgebraSC algebraFromJson(const Json& j, const std::string& fallbackName, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an algebra object");
  const std::size_t dim = sizeField(j, "dim", path);
  std::string name = fallbackName;
  if (auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) bad(at(path, "name"), "expected a string");
    name = it->get<std::string>();
  }
  Flavor flavor = Flavor::lie;
  if (auto it = j.find("flavor"); it != j.end()) {
    if (!it->is_string()) bad(at(path, "flavor"), "expected a string");
    try {
      flavor = flavorFromString(it->get<std::string>());
    } catch (const ParseError& e) {
      bad(at(path, "flavor"), e.what());
    }
  }
  auto sc = j.find("sc");
  StructureTable table = tableFromJson(sc == j.end() ? Json() : *sc, dim, at(path, "sc"));
  return AlgebraSC(std::move(name), std::move(table), flavor);
}

MultiMap multiMapFromJson(const Json& j, const std::string& path) {
  MultiMap f(sizeField(j, "arity", path), sizeField(j, "domainDim", path), sizeField(j, "codomainDim", path));
  readCoeffs(field(j, "coeffs", path), f, 0, 0, at(path, "coeffs"));
  return f;
}

Vector parseVectorList(const std::string& text) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(Rational::parse(item));
    } catch (const std::exception& e) {
      throw ParseError("bad vector entry '" + item + "': " + e.what());
    }
  }
  if (v.empty()) throw ParseError("empty vector '" + text + "'");
  return v;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace netkit
