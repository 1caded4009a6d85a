#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "mfw/error.hpp"
#include "mfw/workbench.hpp"

namespace mfw {

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Verification: return "verification";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Precondition: return "precondition";
    case ErrorCategory::Budget: return "budget";
  }
  return "unknown";
}

std::string trailer_value(const std::string& v) {
  if (!v.empty() && v.find_first_of(" \t\"=") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_trailer(std::ostream& out, const Fields& fields) {
  bool first = true;
  for (const auto& [k, v] : fields) {
    out << (first ? "" : " ") << k << '=' << trailer_value(v);
    first = false;
  }
  out << '\n';
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string basis_list(const RingTower& tower, const GroebnerBasis& g) {
  if (g.basis.empty()) return "(none)";
  std::vector<std::string> parts;
  for (const auto& p : g.basis) parts.push_back(tower.format(p));
  return join(parts, ", ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void describe_tower(const RingTower& tower, std::ostream& out) {
  out << "ring: " << tower.field().name() << "[" << join(tower.ring()->vars, ", ") << "], order "
      << tower.order().name() << "\n";
  std::vector<std::string> ts;
  for (const auto& t : tower.t_gens()) ts.push_back(tower.format(t));
  out << "t: " << join(ts, ", ") << "\n";
  std::vector<std::string> coords;
  for (const auto& c : tower.x_coords()) coords.push_back(format_rational(c));
  out << "x: " << tower.format(tower.x_elem()) << " (coordinates " << join(coords, ", ") << ")\n";
  std::vector<std::string> sg;
  for (const auto& s : tower.s_gens()) sg.push_back(tower.format(s));
  out << "S = Q" << (sg.empty() ? "" : "/(" + join(sg, ", ") + ")") << "\n";
  const CiReport& r = tower.report();
  out << "presentation: t in n^2 " << yes_no(r.all_in_n_squared) << ", homogeneous "
      << yes_no(r.all_homogeneous);
  if (r.quotient_dimension) {
    out << ", dim Q/(t) = " << *r.quotient_dimension << " (ambient " << r.ambient_dimension
        << "), regular sequence " << yes_no(r.regular.value_or(false));
  } else {
    out << ", regular sequence unchecked (inhomogeneous)";
  }
  out << "\n";
}

void print_mf(const std::string& label, const MatrixFactorization& a, std::ostream& out) {
  out << label << ": rank F = " << a.rank_f() << ", rank G = " << a.rank_g() << "\n";
  out << "  phi = " << a.phi().format() << "\n";
  out << "  psi = " << a.psi().format() << "\n";
}

void print_morphism(const std::string& label, const MfMorphism& m, std::ostream& out) {
  out << label << ":\n";
  out << "  f = " << m.f().format() << "\n";
  out << "  g = " << m.g().format() << "\n";
}

const std::string& require_target(const CommandRequest& req) {
  if (req.target.empty()) throw InvalidArgument("command '" + req.command + "' needs an object name");
  return req.target;
}

// Each command prints its report and returns extra trailer fields plus exit code.
struct Outcome {
  int code = 0;
  Fields fields;
};

Outcome cmd_validate(const Workbench& wb, std::ostream& out) {
  describe_tower(*wb.tower(), out);
  Outcome result;
  std::size_t verified = 0;
  const auto names = wb.file().names("mf");
  for (const auto& name : names) {
    try {
      const MatrixFactorization a = wb.mf(name);
      out << "mf " << name << ": axioms verified (rank " << a.rank_f() << ")\n";
      ++verified;
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Verification) throw;
      out << "mf " << name << ": " << e.what() << "\n";
      if (result.code == 0) {
        result.code = 1;
        result.fields = {{"kind", e.kind()}, {"mf", name}};
        for (const auto& f : e.fields()) result.fields.push_back(f);
      }
    }
  }
  result.fields.insert(result.fields.begin(), {"verified", std::to_string(verified) + "/" +
                                                               std::to_string(names.size())});
  return result;
}

Outcome cmd_suspend(const Workbench& wb, const std::string& name, std::ostream& out) {
  const MatrixFactorization a = wb.mf(name);
  const MatrixFactorization sa = suspend(a);
  print_mf("suspend(" + name + ")", sa, out);
  out << "axioms verified\n";
  const bool twice = suspend(sa) == a;
  out << "suspend(suspend(" << name << ")) = " << name << ": " << yes_no(twice) << "\n";
  if (!twice) return {1, {{"kind", "VerificationFailure"}}};
  return {};
}

Outcome cmd_cone(const Workbench& wb, const std::string& name, std::ostream& out) {
  const MfMorphism theta = wb.morphism(name);
  const MappingCone c = mapping_cone(theta);
  print_mf("cone(" + name + ")", c.cone, out);
  out << "axioms verified\n";
  print_morphism("inclusion", c.inclusion, out);
  print_morphism("projection", c.projection, out);
  const MfMorphism composite = compose_morphisms(c.projection, c.inclusion);
  const bool zero = composite.f().is_zero() && composite.g().is_zero();
  out << "projection * inclusion = 0: " << yes_no(zero) << "\n";
  if (!zero) return {1, {{"kind", "VerificationFailure"}}};
  return {0, {{"rank", std::to_string(c.cone.rank_f())}}};
}

Outcome cmd_verify_homotopy(const Workbench& wb, const std::string& name, std::ostream& out) {
  const MfHomotopy h = wb.homotopy(name);
  out << "homotopy " << name << ":\n";
  out << "  s = " << h.s().format() << "\n";
  out << "  t = " << h.t().format() << "\n";
  out << "f - f' = s*phi1 + psi2*t: verified\n";
  out << "g - g' = t*psi1 + phi2*s: verified\n";
  return {};
}

Outcome cmd_reduce(const Workbench& wb, const std::string& name, std::ostream& out) {
  const MatrixFactorization a = wb.mf(name);
  const PeriodicComplex c = reduce_object(a);
  out << "T(" << name << ") over R = Q/(" << basis_list(*wb.tower(), wb.tower()->r_basis())
      << ")\n";
  out << "  phi_bar = " << c.phi_bar().format() << "\n";
  out << "  psi_bar = " << c.psi_bar().format() << "\n";
  if (auto tw = c.twist()) {
    out << "  twist = " << *tw << "\n";
  } else {
    out << "  twist = none (x inhomogeneous)\n";
  }
  out << "psi_bar*phi_bar = 0 and phi_bar*psi_bar = 0: verified\n";
  const DualReductionReport d = dual_reduction_check(a);
  out << "transpose commutes with reduction: " << yes_no(d.passed()) << "\n";
  if (!d.passed()) return {1, {{"kind", "VerificationFailure"}}};
  return {};
}

Outcome cmd_transport(const Workbench& wb, const std::string& name, std::ostream& out) {
  const HomotopyTransportInput input = wb.transport_input(name);
  const TransportResult r = transport_nullhomotopy(input);
  out << "transport " << name << ":\n";
  out << "  p = " << r.p.format() << "\n";
  out << "  q = " << r.q.format() << "\n";
  out << "  p*psi1 = s1 - s2 + psi2*q: verified\n";
  out << "nullhomotopy (s, t'):\n";
  out << "  s = " << r.homotopy.s().format() << "\n";
  out << "  t' = " << r.homotopy.t().format() << "\n";
  out << "verify_homotopy(theta, 0, s, t'): verified\n";
  return {};
}

Outcome cmd_lift(const Workbench& wb, const std::string& name, std::ostream& out) {
  const ChainLiftInput input = wb.lift_input(name);
  const LiftResult r = lift_chain_map(input);
  out << "lift " << name << ":\n";
  out << "  alpha = " << r.alpha.format() << "\n";
  out << "  beta = " << r.beta.format() << "\n";
  out << "  psi2*alpha*psi1 = f0*psi1 - psi2*g0: verified\n";
  print_morphism("morphism", r.theta, out);
  out << "axioms of a morphism: verified\n";
  out << "witness over R:\n";
  out << "  alpha_bar = " << r.alpha_bar.format() << "\n";
  out << "  beta_bar = " << r.beta_bar.format() << "\n";
  out << "  f_bar - f0_bar = -psi2_bar*alpha_bar + beta_bar*phi1_bar: verified\n";
  return {};
}

Outcome cmd_coker(const Workbench& wb, const std::string& name, std::ostream& out) {
  const CokerPresentation p = coker_presentation(wb.mf(name));
  out << "Coker psi for " << name << " over R:\n";
  out << "  presentation = " << p.presentation.format() << "\n";
  out << "  0 -> G -psi-> F -> Coker psi -> 0 over S, psi = " << p.psi.format() << "\n";
  out << "  x*1_F = psi*phi with phi = " << p.certificate.format() << "\n";
  out << "  det(phi)*det(psi) = " << (p.det_sign < 0 ? "-" : "") << "x^" << p.psi.rows() << "\n";
  return {0, {{"det_sign", std::to_string(p.det_sign)}}};
}

Outcome cmd_acyclic_window(const Workbench& wb, const CommandRequest& req, std::ostream& out) {
  const std::string& name = require_target(req);
  const PeriodicComplex c = reduce_object(wb.mf(name));
  const AcyclicityWindow w =
      graded_acyclicity_window(c, req.min_degree, req.max_degree_window, req.budget);
  const GradedShape shape = graded_shape(c);
  out << "T(" << name << "), degrees " << req.min_degree << ".." << req.max_degree_window
      << ", twist " << shape.twist << "\n";
  out << format_homology_table(w.complex);
  out << "transpose of T(" << name << "):\n";
  out << format_homology_table(w.dual);
  out << "# degree,position,dim_ker,dim_im,homology (complex)\n" << format_homology_csv(w.complex);
  out << "# degree,position,dim_ker,dim_im,homology (transpose)\n" << format_homology_csv(w.dual);
  out << "acyclic on window: " << yes_no(w.acyclic()) << "\n";
  if (!w.acyclic()) return {1, {{"kind", "NonzeroHomology"}}};
  return {0, {{"rows", std::to_string(w.complex.size())}}};
}

Outcome cmd_gb(const Workbench& wb, std::ostream& out) {
  const RingTower& tower = *wb.tower();
  out << "order " << tower.order().name() << "\n";
  out << "S ideal: " << basis_list(tower, tower.s_basis()) << "\n";
  out << "R ideal: " << basis_list(tower, tower.r_basis()) << "\n";
  out << "(x) + S ideal: " << basis_list(tower, tower.divider().combined_basis()) << "\n";
  return {};
}

}  // namespace

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Verification: return 1;
    case ErrorCategory::Parse: return 2;
    case ErrorCategory::Precondition: return 3;
    case ErrorCategory::Budget: return 4;
  }
  return 1;
}

int run_command(const CommandRequest& req, std::ostream& out) {
  Fields base{{"command", req.command}};
  if (!req.target.empty()) base.push_back({"target", req.target});
  try {
    const Workbench wb = Workbench::open(WorkbenchFile::load(req.file), req.overrides);
    Outcome o;
    const std::string& cmd = req.command;
    if (cmd == "validate") {
      o = cmd_validate(wb, out);
    } else if (cmd == "suspend") {
      o = cmd_suspend(wb, require_target(req), out);
    } else if (cmd == "cone") {
      o = cmd_cone(wb, require_target(req), out);
    } else if (cmd == "verify-homotopy") {
      o = cmd_verify_homotopy(wb, require_target(req), out);
    } else if (cmd == "reduce") {
      o = cmd_reduce(wb, require_target(req), out);
    } else if (cmd == "transport") {
      o = cmd_transport(wb, require_target(req), out);
    } else if (cmd == "lift") {
      o = cmd_lift(wb, require_target(req), out);
    } else if (cmd == "coker") {
      o = cmd_coker(wb, require_target(req), out);
    } else if (cmd == "acyclic-window") {
      o = cmd_acyclic_window(wb, req, out);
    } else if (cmd == "gb") {
      o = cmd_gb(wb, out);
    } else {
      throw InvalidArgument("unknown command '" + cmd + "'");
    }
    Fields fields = base;
    fields.push_back({"status", o.code == 0 ? "ok" : "failed"});
    fields.insert(fields.end(), o.fields.begin(), o.fields.end());
    fields.push_back({"exit", std::to_string(o.code)});
    write_trailer(out, fields);
    return o.code;
  } catch (const Error& e) {
    const int code = exit_code(e.category());
    out << "error: " << e.what() << "\n";
    Fields fields = base;
    fields.push_back({"status", "error"});
    fields.push_back({"kind", e.kind()});
    fields.push_back({"category", category_name(e.category())});
    for (const auto& f : e.fields()) fields.push_back(f);
    fields.push_back({"exit", std::to_string(code)});
    write_trailer(out, fields);
    return code;
  }
}

}  // namespace mfw
