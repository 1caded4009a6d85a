#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfw/error.hpp"
#include "mfw/graded.hpp"
#include "mfw/periodic.hpp"

namespace mfw {

/// One `[kind name]` block of a workbench file.
struct WorkbenchSection {
  struct Value {
    std::string text;
    std::size_t line = 0;
  };
  std::string kind;
  std::string name;  // empty for [ring]
  std::size_t line = 0;
  std::map<std::string, Value> values;
};

/// Raw sections in file order. Throws FormatError with a 1-based line.
struct WorkbenchFile {
  std::vector<WorkbenchSection> sections;

  static WorkbenchFile parse(const std::string& text);
  /// Throws FormatError if the file cannot be read.
  static WorkbenchFile load(const std::string& path);

  const WorkbenchSection* find(const std::string& kind, const std::string& name) const;
  std::vector<std::string> names(const std::string& kind) const;
};

/// Command-line overrides of the [ring] section.
struct WorkbenchOverrides {
  std::optional<std::string> order;
  std::optional<std::string> field;
};

/// A parsed file with its ring tower. Objects are built and verified on
/// request, so one bad section does not hide the others.
class Workbench {
 public:
  /// Throws FormatError and everything build_tower throws.
  static Workbench open(WorkbenchFile file, const WorkbenchOverrides& overrides = {});

  const WorkbenchFile& file() const { return file_; }
  const TowerPtr& tower() const { return tower_; }

  MatrixFactorization mf(const std::string& name) const;
  MfMorphism morphism(const std::string& name) const;
  MfHomotopy homotopy(const std::string& name) const;
  HomotopyTransportInput transport_input(const std::string& name) const;
  ChainLiftInput lift_input(const std::string& name) const;

  /// Parses a matrix literal at level S: `[[a, b], [c, d]]`, `[]` for the
  /// 0x0 matrix, or `0` / `1` for the zero / identity matrix of the given shape.
  RingMatrix matrix(const WorkbenchSection::Value& value, std::optional<std::size_t> rows,
                    std::optional<std::size_t> cols) const;

 private:
  Workbench(WorkbenchFile file, TowerPtr tower) : file_(std::move(file)), tower_(std::move(tower)) {}

  const WorkbenchSection& section(const std::string& kind, const std::string& name) const;

  WorkbenchFile file_;
  TowerPtr tower_;
};

/// Splits `[[a, b], [c, d]]` into rows of entry strings. Throws FormatError.
std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text,
                                                           std::size_t line);

struct CommandRequest {
  std::string command;
  std::string file;
  std::string target;  // object name, when the command takes one
  int min_degree = 0;
  int max_degree_window = 4;
  WorkbenchOverrides overrides;
  WindowBudget budget;
};

/// Runs one workbench command, writing the report and a key=value trailer to
/// `out`. Returns the exit code: 0 ok, 1 verification failed, 2 parse error,
/// 3 precondition violated, 4 budget exceeded.
int run_command(const CommandRequest& request, std::ostream& out);

int exit_code(ErrorCategory category);

}  // namespace mfw
