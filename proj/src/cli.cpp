#include "netkit/cli.hpp"

#include "netkit/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace netkit {

namespace {

constexpr const char* kSynopsis =
    "usage: netkit [--workspace PATH] [--format json|text] [--output PATH] COMMAND [options]\n"
    "  check lie|leibniz --algebra NAME\n"
    "  check action --action NAME\n"
    "  check net --tensor NAME\n"
    "  check leibniz-lie --leibniz-lie NAME\n"
    "  check nijenhuis --tensor NAME --element X\n"
    "  check nijenhuis-operator (--tensor NAME --element X | --algebra NAME --matrix M)\n"
    "  check deform --tensor NAME --direction NAME\n"
    "  check equivalence --tensor NAME --direction NAME [--direction2 NAME] (--element X | --candidates X;Y;..)\n"
    "  build hemisemidirect --action NAME\n"
    "  build descendent|induced-triangle --tensor NAME\n"
    "  build subadjacent|ell-net --leibniz-lie NAME\n"
    "  build projection-net|quotient-lie --algebra NAME\n"
    "  mc net --tensor NAME\n"
    "  mc deform --tensor NAME --direction NAME\n"
    "  cohomology --tensor NAME --degree K\n"
    "  class-equals --tensor NAME --degree 2 --direction NAME [--direction2 NAME]\n"
    "  class-equals --tensor NAME --degree 1 --element X [--element2 Y]\n";

struct Options {
  std::string workspace, format = "text", output;
  std::string algebra, action, tensor, leibnizLie;
  std::string direction, direction2, element, element2, candidates, matrix;
  std::size_t degree = 0;
  std::string command;
};

// What a command produced: a JSON document, its text rendering and the exit
// code.
struct Outcome {
  Json json;
  std::string text;
  int code = kExitPass;
};

// ---- text rendering

std::string vecText(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

std::string indexText(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

std::string matrixText(const Matrix& m, const std::string& indent) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) s += indent + vecText(m.row(r)) + "\n";
  return s;
}

std::string reportText(const Report& r) {
  std::string s = "check " + r.check + ": " + (r.passed() ? "pass" : "FAIL") + "\n";
  if (!r.passed()) s += "violations: " + std::to_string(r.violations.size()) + "\n";
  for (const Violation& v : r.violations) s += "  " + v.rule + " " + indexText(v.indices) + ": " + vecText(v.residual) + "\n";
  for (const std::string& n : r.notes) s += "note: " + n + "\n";
  return s;
}

std::string algebraText(const AlgebraSC& a) {
  std::string s = "algebra " + a.name() + ": dim " + std::to_string(a.dim()) + ", " + flavorName(a.flavor()) + "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!isZero(a.bracket(i, j)))
        s += "  [e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "] = " + vecText(a.bracket(i, j)) + "\n";
  return s;
}

std::string tensorText(const TensorMap& t) {
  std::string s = "source ";
  s += algebraText(t.g());
  s += "target " + algebraText(t.h());
  for (std::size_t i = 0; i < t.g().dim(); ++i) s += "rho(e" + std::to_string(i + 1) + "):\n" + matrixText(t.action().rho(i), "  ");
  s += "tensor:\n" + matrixText(t.matrix(), "  ");
  return s;
}

std::string leibnizLieText(const LeibnizLie& l) {
  std::string s = "lie " + algebraText(l.lie) + "triangle:\n";
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = 0; j < l.dim(); ++j)
      if (!isZero(l.triangle.at(i, j)))
        s += "  e" + std::to_string(i + 1) + " |> e" + std::to_string(j + 1) + " = " + vecText(l.triangle.at(i, j)) + "\n";
  return s;
}

std::string cohomologyText(const CohomologyReport& c) {
  std::string s = "H^" + std::to_string(c.degree) + ": dimZ " + std::to_string(c.dimZ) + ", dimB " +
                  std::to_string(c.dimB) + ", dimH " + std::to_string(c.dimH) + "\n";
  s += "cocycle basis:\n";
  for (const Vector& v : c.cocycleBasis.basis()) s += "  " + vecText(v) + "\n";
  s += "coboundary basis:\n";
  for (const Vector& v : c.coboundaryBasis.basis()) s += "  " + vecText(v) + "\n";
  return s;
}

Outcome fromReport(const Report& r) { return {toJson(r), reportText(r), r.passed() ? kExitPass : kExitFail}; }

// ---- argument helpers

const std::string& need(const std::string& value, const char* flag, const std::string& command) {
  if (value.empty()) throw UsageError(command + " requires " + flag);
  return value;
}

Vector elementArg(const std::string& text, std::size_t dim, const char* flag) {
  Vector v = parseVectorList(text);
  if (v.size() != dim)
    throw UsageError(std::string(flag) + " has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(dim));
  return v;
}

Matrix matrixArg(const std::string& text, std::size_t n) {
  std::vector<Vector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(elementArg(row, n, "--matrix row"));
  if (rows.size() != n) throw UsageError("--matrix must have " + std::to_string(n) + " rows");
  return Matrix::fromRows(rows, n);
}

std::vector<Vector> candidatesArg(const std::string& text, std::size_t dim) {
  std::vector<Vector> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(elementArg(item, dim, "--candidates entry"));
  if (out.empty()) throw UsageError("--candidates is empty");
  return out;
}

// A named tensor whose matrix serves as a deformation direction for base.
Matrix directionArg(const Workspace& ws, const std::string& name, const TensorMap& base, const char* flag) {
  const Matrix& m = ws.tensor(name).matrix();
  if (m.rows() != base.matrix().rows() || m.cols() != base.matrix().cols())
    throw UsageError(std::string(flag) + " '" + name + "' does not have the shape of the base tensor");
  return m;
}

// ---- commands

Outcome runCheck(const Workspace& ws, const Options& o, const std::string& sub) {
  const std::string cmd = "check " + sub;
  if (sub == "lie") return fromReport(checkLie(ws.algebra(need(o.algebra, "--algebra", cmd))));
  if (sub == "leibniz") return fromReport(checkLeibniz(ws.algebra(need(o.algebra, "--algebra", cmd))));
  if (sub == "action") return fromReport(checkCoherentAction(ws.action(need(o.action, "--action", cmd))));
  if (sub == "net") return fromReport(checkNET(ws.tensor(need(o.tensor, "--tensor", cmd))));
  if (sub == "leibniz-lie")
    return fromReport(checkLeibnizLie(ws.leibnizLieAlgebra(need(o.leibnizLie, "--leibniz-lie", cmd))));
  if (sub == "nijenhuis") {
    const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", cmd));
    return fromReport(checkNijenhuisElement({t, elementArg(need(o.element, "--element", cmd), t.g().dim(), "--element")}));
  }
  if (sub == "nijenhuis-operator") {
    if (!o.tensor.empty()) {
      const TensorMap& t = ws.tensor(o.tensor);
      const Vector x = elementArg(need(o.element, "--element", cmd), t.g().dim(), "--element");
      return fromReport(checkNijenhuisOperator(descendent(t), t.action().rho(x)));
    }
    const AlgebraSC& a = ws.algebra(need(o.algebra, "--tensor or --algebra", cmd));
    return fromReport(checkNijenhuisOperator(a, matrixArg(need(o.matrix, "--matrix", cmd), a.dim())));
  }
  if (sub == "deform") {
    const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", cmd));
    return fromReport(checkLinearDeformation({t, directionArg(ws, need(o.direction, "--direction", cmd), t, "--direction")}));
  }
  // equivalence
  const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", cmd));
  const DeformationDirection source{t, directionArg(ws, need(o.direction, "--direction", cmd), t, "--direction")};
  const DeformationDirection target{
      t, o.direction2.empty() ? Matrix(t.matrix().rows(), t.matrix().cols())
                              : directionArg(ws, o.direction2, t, "--direction2")};
  if (o.candidates.empty())
    return fromReport(checkEquivalence(source, target, elementArg(need(o.element, "--element or --candidates", cmd),
                                                                  t.g().dim(), "--element")));
  const std::vector<Vector> xs = candidatesArg(o.candidates, t.g().dim());
  std::optional<Report> first;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Report r = checkEquivalence(source, target, xs[k]);
    if (r.passed()) {
      r.notes.push_back("candidate " + std::to_string(k + 1) + " of " + std::to_string(xs.size()) +
                        " passes: x = " + vecText(xs[k]));
      return fromReport(r);
    }
    if (!first) first = std::move(r);
  }
  first->notes.push_back("no candidate passes; report shown for candidate 1 of " + std::to_string(xs.size()));
  return fromReport(*first);
}

Outcome runBuild(const Workspace& ws, const Options& o, const std::string& sub) {
  const std::string cmd = "build " + sub;
  if (sub == "hemisemidirect") {
    const AlgebraSC a = hemisemidirect(ws.action(need(o.action, "--action", cmd)));
    return {toJson(a), algebraText(a)};
  }
  if (sub == "descendent") {
    const AlgebraSC a = descendent(ws.tensor(need(o.tensor, "--tensor", cmd)));
    return {toJson(a), algebraText(a)};
  }
  if (sub == "subadjacent") {
    const AlgebraSC a = subadjacent(ws.leibnizLieAlgebra(need(o.leibnizLie, "--leibniz-lie", cmd)));
    return {toJson(a), algebraText(a)};
  }
  if (sub == "induced-triangle") {
    const LeibnizLie l = inducedLeibnizLie(ws.tensor(need(o.tensor, "--tensor", cmd)));
    return {toJson(l), leibnizLieText(l)};
  }
  if (sub == "projection-net") {
    const TensorMap t = projectionNET(ws.algebra(need(o.algebra, "--algebra", cmd)));
    return {toJson(t), tensorText(t)};
  }
  if (sub == "ell-net") {
    const TensorMap t = ellNET(ws.leibnizLieAlgebra(need(o.leibnizLie, "--leibniz-lie", cmd)));
    return {toJson(t), tensorText(t)};
  }
  // quotient-lie
  const QuotientLie q = quotientLie(ws.algebra(need(o.algebra, "--algebra", cmd)));
  Json j;
  j["algebra"] = toJson(q.algebra);
  j["projection"] = toJson(q.projection);
  return {std::move(j), algebraText(q.algebra) + "projection:\n" + matrixText(q.projection, "  ")};
}

Outcome runMc(const Workspace& ws, const Options& o, const std::string& sub) {
  const std::string cmd = "mc " + sub;
  const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", cmd));
  if (sub == "net") return fromReport(mcNETCheck(t));
  return fromReport(mcDeformCheck(t, directionArg(ws, need(o.direction, "--direction", cmd), t, "--direction")));
}

Outcome runCohomology(const Workspace& ws, const Options& o) {
  const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", "cohomology"));
  if (o.degree == 0) throw UsageError("cohomology requires --degree K with K >= 1");
  const CohomologyReport c = cohomology(t, o.degree, ws.settings.maxDegree);
  return {toJson(c), cohomologyText(c)};
}

Outcome runClassEquals(const Workspace& ws, const Options& o) {
  const TensorMap& t = ws.tensor(need(o.tensor, "--tensor", "class-equals"));
  const std::size_t k = o.degree == 0 ? 2 : o.degree;
  MultiMap f, g;
  if (k == 1) {
    f = MultiMap::constant(elementArg(need(o.element, "--element", "class-equals"), t.g().dim(), "--element"),
                           t.h().dim());
    g = o.element2.empty() ? MultiMap(0, t.h().dim(), t.g().dim())
                           : MultiMap::constant(elementArg(o.element2, t.g().dim(), "--element2"), t.h().dim());
  } else if (k == 2) {
    f = MultiMap::fromMatrix(directionArg(ws, need(o.direction, "--direction", "class-equals"), t, "--direction"));
    g = o.direction2.empty() ? MultiMap(1, t.h().dim(), t.g().dim())
                             : MultiMap::fromMatrix(directionArg(ws, o.direction2, t, "--direction2"));
  } else {
    throw UsageError("class-equals supports --degree 1 or 2");
  }
  const bool equal = classEquals(t, f, g, k, ws.settings.maxDegree);
  Json j;
  j["degree"] = k;
  j["equal"] = equal;
  return {std::move(j), std::string("degree ") + std::to_string(k) + " classes " + (equal ? "equal" : "differ") + "\n",
          equal ? kExitPass : kExitFail};
}

Outcome dispatch(const Workspace& ws, const Options& o) {
  const auto space = o.command.find(' ');
  const std::string head = o.command.substr(0, space);
  const std::string sub = space == std::string::npos ? "" : o.command.substr(space + 1);
  if (head == "check") return runCheck(ws, o, sub);
  if (head == "build") return runBuild(ws, o, sub);
  if (head == "mc") return runMc(ws, o, sub);
  if (head == "cohomology") return runCohomology(ws, o);
  return runClassEquals(ws, o);
}

void configure(CLI::App& app, Options& o) {
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--workspace", o.workspace, "workspace JSON file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", o.output, "write the report to PATH instead of stdout");
  app.add_option("--algebra", o.algebra, "algebra name");
  app.add_option("--action", o.action, "action name");
  app.add_option("--tensor", o.tensor, "tensor name");
  app.add_option("--leibniz-lie", o.leibnizLie, "Leibniz-Lie algebra name");
  app.add_option("--degree", o.degree, "cochain degree");
  app.add_option("--direction", o.direction, "tensor whose matrix is the deformation direction");
  app.add_option("--direction2", o.direction2, "second direction; zero when omitted");
  app.add_option("--element", o.element, "element of g as \"r1,r2,...\"");
  app.add_option("--element2", o.element2, "second element of g");
  app.add_option("--candidates", o.candidates, "candidate elements \"r,..;r,..\"");
  app.add_option("--matrix", o.matrix, "square matrix \"r,..;r,..\" by rows");

  auto leaf = [&o](CLI::App* parent, const std::string& name) {
    parent->add_subcommand(name)->callback([&o, parent, name] {
      o.command = parent->get_parent() ? parent->get_name() + " " + name : name;
    });
  };
  CLI::App* check = app.add_subcommand("check", "verify an identity");
  check->require_subcommand(1);
  for (const char* s : {"lie", "leibniz", "action", "net", "leibniz-lie", "nijenhuis", "nijenhuis-operator", "deform",
                        "equivalence"})
    leaf(check, s);
  CLI::App* build = app.add_subcommand("build", "construct an object");
  build->require_subcommand(1);
  for (const char* s :
       {"hemisemidirect", "descendent", "subadjacent", "induced-triangle", "projection-net", "ell-net", "quotient-lie"})
    leaf(build, s);
  CLI::App* mc = app.add_subcommand("mc", "Maurer-Cartan checks");
  mc->require_subcommand(1);
  for (const char* s : {"net", "deform"}) leaf(mc, s);
  leaf(&app, "cohomology");
  leaf(&app, "class-equals");
}

// Parses args into o. Returns an exit code when parsing alone settles the
// run (help or a usage error).
std::optional<int> parseArgs(const std::vector<std::string>& args, Options& o, std::ostream& out, std::ostream& err) {
  CLI::App app("netkit: nonabelian embedding tensors over Q", "netkit");
  configure(app, o);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << kSynopsis;
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  }
  return std::nullopt;
}

int emit(const Outcome& r, const Options& o, std::ostream& out, std::ostream& err) {
  const std::string body = o.format == "json" ? dump(r.json) : r.text;
  if (o.output.empty()) {
    out << body;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    f << body;
  }
  return r.code;
}

int execute(const Workspace* preloaded, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  if (auto code = parseArgs(args, o, out, err)) return *code;
  Workspace loaded;
  if (!preloaded && !o.workspace.empty()) {
    try {
      loaded = loadWorkspace(o.workspace);
    } catch (const Error& e) {
      err << "error: " << o.workspace << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  try {
    return emit(dispatch(preloaded ? *preloaded : loaded, o), o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnresolvedReference& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

} // namespace

int runCommand(const Workspace& ws, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return execute(&ws, args, out, err);
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return execute(nullptr, args, out, err);
}

} // namespace netkit
