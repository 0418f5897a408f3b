#include "netkit/workspace.hpp"

#include "netkit/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace netkit {

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* category) {
  auto it = m.find(name);
  if (it == m.end()) throw UnresolvedReference(std::string("no ") + category + " named '" + name + "'");
  return it->second;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw ParseError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t setting(const Json& s, const char* key, std::size_t fallback) {
  auto it = s.find(key);
  if (it == s.end()) return fallback;
  if (!it->is_number_integer() || it->get<std::int64_t>() < 1)
    bad(std::string("$.settings.") + key, "expected a positive integer");
  return it->get<std::size_t>();
}

AlgebraSC resolveAlgebra(const Workspace& ws, const Json& ref, const std::string& path) {
  if (ref.is_string()) return lookup(ws.algebras, ref.get<std::string>(), "algebra");
  return algebraFromJson(ref, "", path);
}

ActionMap resolveAction(const Workspace& ws, const Json& ref, const std::string& path) {
  if (ref.is_string()) return lookup(ws.actions, ref.get<std::string>(), "action");
  AlgebraSC g = resolveAlgebra(ws, field(ref, "source", path), path + ".source");
  AlgebraSC h = resolveAlgebra(ws, field(ref, "target", path), path + ".target");
  const Json& rho = field(ref, "rho", path);
  if (!rho.is_array()) bad(path + ".rho", "expected an array");
  if (rho.size() != g.dim())
    bad(path + ".rho", "expected " + std::to_string(g.dim()) + " matrices, got " + std::to_string(rho.size()));
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < rho.size(); ++i)
    ms.push_back(matrixFromJson(rho[i], h.dim(), h.dim(), path + ".rho[" + std::to_string(i) + "]"));
  return ActionMap(std::move(g), std::move(h), std::move(ms));
}

TensorMap resolveTensor(const Workspace& ws, const Json& ref, const std::string& path) {
  if (ref.is_string()) return lookup(ws.tensors, ref.get<std::string>(), "tensor");
  ActionMap a = resolveAction(ws, field(ref, "action", path), path + ".action");
  Matrix m = matrixFromJson(field(ref, "matrix", path), a.source().dim(), a.target().dim(), path + ".matrix");
  return TensorMap(std::move(a), std::move(m));
}

LeibnizLie resolveLeibnizLie(const Workspace& ws, const Json& ref, const std::string& path) {
  if (ref.is_string()) return lookup(ws.leibnizLie, ref.get<std::string>(), "Leibniz-Lie algebra");
  AlgebraSC lie = resolveAlgebra(ws, field(ref, "lie", path), path + ".lie");
  StructureTable tri = tableFromJson(field(ref, "triangle", path), lie.dim(), path + ".triangle");
  return {std::move(lie), std::move(tri)};
}

template <class Map, class Resolve>
void readCategory(const Json& doc, const char* key, Map& out, const Workspace& ws, Resolve resolve) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  const std::string path = std::string("$.") + key;
  if (!it->is_object()) bad(path, "expected an object of named entries");
  for (const auto& [name, value] : it->items()) {
    if (value.is_string()) bad(path + "." + name, "a top-level entry must be an object");
    out.emplace(name, resolve(ws, value, path + "." + name));
  }
}

// Rejects duplicate keys, which the JSON reader would otherwise collapse.
Json parseStrict(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  auto cb = [&keys](int, Json::parse_event_t ev, Json& parsed) {
    switch (ev) {
    case Json::parse_event_t::object_start: keys.emplace_back(); break;
    case Json::parse_event_t::object_end: keys.pop_back(); break;
    case Json::parse_event_t::key: {
      const std::string k = parsed.get<std::string>();
      if (!keys.back().insert(k).second) throw ParseError("duplicate key '" + k + "'");
      break;
    }
    default: break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), cb);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

} // namespace

const AlgebraSC& Workspace::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }
const ActionMap& Workspace::action(const std::string& name) const { return lookup(actions, name, "action"); }
const TensorMap& Workspace::tensor(const std::string& name) const { return lookup(tensors, name, "tensor"); }
const LeibnizLie& Workspace::leibnizLieAlgebra(const std::string& name) const {
  return lookup(leibnizLie, name, "Leibniz-Lie algebra");
}

Workspace parseWorkspace(std::string_view text) {
  const Json doc = parseStrict(text);
  if (!doc.is_object()) bad("$", "expected a workspace object");
  for (const auto& [key, value] : doc.items())
    if (key != "settings" && key != "algebras" && key != "actions" && key != "tensors" && key != "leibnizLie")
      bad("$." + key, "unknown section");

  Workspace ws;
  if (auto s = doc.find("settings"); s != doc.end()) {
    if (!s->is_object()) bad("$.settings", "expected an object");
    ws.settings.maxDegree = setting(*s, "maxDegree", ws.settings.maxDegree);
    ws.settings.arityCap = setting(*s, "arityCap", ws.settings.arityCap);
  }
  if (auto a = doc.find("algebras"); a != doc.end()) {
    if (!a->is_object()) bad("$.algebras", "expected an object of named entries");
    for (const auto& [name, value] : a->items()) {
      AlgebraSC alg = algebraFromJson(value, name, "$.algebras." + name);
      ws.algebras.emplace(name, std::move(alg));
    }
  }
  readCategory(doc, "actions", ws.actions, ws, resolveAction);
  readCategory(doc, "tensors", ws.tensors, ws, resolveTensor);
  readCategory(doc, "leibnizLie", ws.leibnizLie, ws, resolveLeibnizLie);
  return ws;
}

Workspace loadWorkspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open workspace '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parseWorkspace(ss.str());
}

} // namespace netkit
