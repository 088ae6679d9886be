#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "comatrix/algebra.hpp"
#include "comatrix/bimodule.hpp"
#include "comatrix/error.hpp"

namespace comatrix::cli {

/// Location-carrying workspace error. what() reads "line L, column C: <kind>: <message>".
class WorkspaceError : public Error {
 public:
  WorkspaceError(const std::string& kind, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class SyntaxError : public WorkspaceError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : WorkspaceError("syntax error", line, column, message) {}
};

class UnresolvedName : public WorkspaceError {
 public:
  UnresolvedName(std::size_t line, std::size_t column, const std::string& name)
      : WorkspaceError("unresolved name", line, column, "'" + name + "' is not defined") {}
};

class DimensionError : public WorkspaceError {
 public:
  DimensionError(std::size_t line, std::size_t column, const std::string& message)
      : WorkspaceError("dimension error", line, column, message) {}
};

/// A definition that resolves to an invalid object (e.g. generators not closed under products).
class StructureError : public WorkspaceError {
 public:
  StructureError(std::size_t line, std::size_t column, const std::string& message)
      : WorkspaceError("invalid structure", line, column, message) {}
};

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct MultEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix coeffs;
  Location at;
  friend bool operator==(const MultEntry& x, const MultEntry& y) {
    return x.i == y.i && x.j == y.j && x.coeffs == y.coeffs;
  }
};

struct ExplicitAlgebra {
  std::size_t dim = 0;
  std::vector<MultEntry> mult;
  Matrix unit;
  friend bool operator==(const ExplicitAlgebra&, const ExplicitAlgebra&) = default;
};

struct MatrixAlgebra {
  std::size_t n = 0;
  friend bool operator==(const MatrixAlgebra&, const MatrixAlgebra&) = default;
};

struct ProductAlgebra {
  std::string a;
  std::string b;
  friend bool operator==(const ProductAlgebra&, const ProductAlgebra&) = default;
};

struct SubalgebraDef {
  std::string parent;
  std::vector<Matrix> gens;
  friend bool operator==(const SubalgebraDef&, const SubalgebraDef&) = default;
};

struct AlgebraDef {
  std::string name;
  std::variant<ExplicitAlgebra, MatrixAlgebra, ProductAlgebra, SubalgebraDef> form;
  Location at;
  friend bool operator==(const AlgebraDef& x, const AlgebraDef& y) { return x.name == y.name && x.form == y.form; }
};

struct ActionEntry {
  std::size_t index = 0;
  Matrix matrix;
  Location at;
  friend bool operator==(const ActionEntry& x, const ActionEntry& y) {
    return x.index == y.index && x.matrix == y.matrix;
  }
};

struct ExplicitBimodule {
  std::string left;
  std::string right;
  std::size_t dim = 0;
  std::vector<ActionEntry> left_entries;
  std::vector<ActionEntry> right_entries;
  friend bool operator==(const ExplicitBimodule&, const ExplicitBimodule&) = default;
};

struct FreeDef {
  std::string algebra;
  std::size_t rank = 0;
  friend bool operator==(const FreeDef&, const FreeDef&) = default;
};

struct DualDef {
  std::string of;
  friend bool operator==(const DualDef&, const DualDef&) = default;
};

struct OppositeDef {
  std::string of;
  friend bool operator==(const OppositeDef&, const OppositeDef&) = default;
};

struct BimoduleDef {
  std::string name;
  std::variant<ExplicitBimodule, FreeDef, DualDef, OppositeDef> form;
  Location at;
  friend bool operator==(const BimoduleDef& x, const BimoduleDef& y) { return x.name == y.name && x.form == y.form; }
};

struct TaskDef {
  std::string kind;
  std::vector<std::string> args;
  std::vector<std::pair<std::string, std::string>> options;
  Location at;
  friend bool operator==(const TaskDef& x, const TaskDef& y) {
    return x.kind == y.kind && x.args == y.args && x.options == y.options;
  }
  std::string signature() const;
};

using Statement = std::variant<AlgebraDef, BimoduleDef, TaskDef>;

/// Resolved objects by name.
struct Objects {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, Bimodule> bimodules;
};

struct Workspace {
  std::optional<Field> field;
  std::vector<Statement> statements;
  Objects objects;

  std::vector<TaskDef> tasks() const;
  friend bool operator==(const Workspace& x, const Workspace& y) {
    return x.field == y.field && x.statements == y.statements;
  }
};

const std::vector<std::string>& task_kinds();

/// Parses and resolves. Throws SyntaxError, UnresolvedName, DimensionError or StructureError.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

/// Canonical text; parse_workspace(serialize(w)) == w.
std::string serialize(const Workspace& w);

}  // namespace comatrix::cli
