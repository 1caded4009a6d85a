// Command-line front end for the matrix factorization workbench.

#include <iostream>

#include "CLI11.hpp"
#include "mfw/workbench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for matrix factorizations over complete intersections"};
  app.require_subcommand(1);

  mfw::CommandRequest req;
  std::string order, field;
  int max_degree = -1;
  app.add_option("--order", order, "Monomial order, overrides the file")
      ->check(CLI::IsMember({"lex", "grevlex"}));
  app.add_option("--field", field, "Coefficient field qq or fp:<p>, overrides the file");
  app.add_option("--max-degree", max_degree, "Largest graded piece a window may enumerate")
      ->check(CLI::NonNegativeNumber);

  struct Spec {
    const char* name;
    const char* help;
    bool takes_target;
  };
  const Spec specs[] = {
      {"validate", "Build the tower and verify every mf section", false},
      {"suspend", "Suspension of an mf", true},
      {"cone", "Mapping cone of a morphism with its natural maps", true},
      {"verify-homotopy", "Check a homotopy section", true},
      {"reduce", "Reduce an mf modulo x to a periodic complex", true},
      {"transport", "Lift a nullhomotopy of T(theta) to S", true},
      {"lift", "Lift a chain map window to a morphism", true},
      {"coker", "Cokernel presentation of psi over R", true},
      {"acyclic-window", "Graded homology of T(A) and its transpose", true},
      {"gb", "Reduced Groebner bases of the tower ideals", false},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", req.file, "Workbench file")->required();
    if (s.takes_target) sub->add_option("name", req.target, "Section name")->required();
    if (std::string(s.name) == "acyclic-window") {
      sub->add_option("--min", req.min_degree, "First internal degree");
      sub->add_option("--max", req.max_degree_window, "Last internal degree");
    }
    sub->callback([&req, name = s.name] { req.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!order.empty()) req.overrides.order = order;
  if (!field.empty()) req.overrides.field = field;
  if (max_degree >= 0) req.budget.max_degree = max_degree;
  return mfw::run_command(req, std::cout);
}
