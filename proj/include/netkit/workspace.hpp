#ifndef NETKIT_WORKSPACE_HPP
#define NETKIT_WORKSPACE_HPP

#include "netkit/serialize.hpp"

#include <map>
#include <string>
#include <string_view>

namespace netkit {

struct Settings {
  std::size_t maxDegree = kDefaultMaxDegree;
  std::size_t arityCap = kDefaultArityCap;
};

/// Named objects of one algebra-description file, fully resolved. Maps are
/// ordered by name.
struct Workspace {
  Settings settings;
  std::map<std::string, AlgebraSC> algebras;
  std::map<std::string, ActionMap> actions;
  std::map<std::string, TensorMap> tensors;
  std::map<std::string, LeibnizLie> leibnizLie;

  const AlgebraSC& algebra(const std::string& name) const;
  const ActionMap& action(const std::string& name) const;
  const TensorMap& tensor(const std::string& name) const;
  const LeibnizLie& leibnizLieAlgebra(const std::string& name) const;
};

/// Categories resolve in the order algebras, actions, tensors, leibnizLie;
/// a reference is either the name of an earlier-category object or an
/// inline object. Throws ParseError (with byte offset for malformed JSON),
/// UnresolvedReference, FlavorViolation.
Workspace parseWorkspace(std::string_view text);
Workspace loadWorkspace(const std::string& path);

} // namespace netkit

#endif
