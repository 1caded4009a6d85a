#include "mfw/workbench.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "mfw/error.hpp"

namespace mfw {

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"ring", {"field", "vars", "order", "t", "x"}},
      {"mf", {"phi", "psi"}},
      {"morphism", {"source", "target", "f", "g"}},
      {"homotopy", {"from", "to", "s", "t"}},
      {"transport", {"morphism", "s1", "t", "s2"}},
      {"lift", {"source", "target", "g1", "f0", "g0"}},
  };
  return keys;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
  }
  return depth;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

const WorkbenchSection::Value& require_value(const WorkbenchSection& s, const std::string& key) {
  auto it = s.values.find(key);
  if (it == s.values.end()) {
    throw FormatError(s.line, "section [" + s.kind + (s.name.empty() ? "" : " " + s.name) +
                                  "] is missing key '" + key + "'");
  }
  return it->second;
}

Polynomial parse_entry(const std::string& text, const RingPtr& ring, std::size_t line) {
  try {
    return parse_polynomial(text, ring);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::Parse) throw;
    throw FormatError(line, "in \"" + text + "\": " + e.kind() + ": " + e.what());
  }
}

}  // namespace

// ---- file syntax ---------------------------------------------------------------------------

WorkbenchFile WorkbenchFile::parse(const std::string& text) {
  static const std::regex header(R"(\[\s*([A-Za-z]+)(?:\s+([A-Za-z_][A-Za-z0-9_']*))?\s*\])");
  static const std::regex assignment(R"(([A-Za-z][A-Za-z0-9_]*)\s*=(.*))");
  WorkbenchFile file;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  WorkbenchSection* current = nullptr;
  std::string* pending = nullptr;
  std::size_t pending_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (pending) {
      *pending += " " + line;
      if (bracket_balance(*pending) <= 0) pending = nullptr;
      continue;
    }
    if (line.empty()) continue;
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      const std::string kind = m[1];
      const std::string name = m[2];
      if (!allowed_keys().contains(kind)) throw FormatError(line_no, "unknown section kind '" + kind + "'");
      if ((kind == "ring") != name.empty()) {
        throw FormatError(line_no, kind == "ring" ? "[ring] takes no name"
                                                  : "section [" + kind + "] needs a name");
      }
      for (const auto& s : file.sections) {
        if (s.kind == kind && s.name == name) {
          throw FormatError(line_no, "duplicate section [" + kind + (name.empty() ? "" : " " + name) + "]");
        }
      }
      file.sections.push_back(WorkbenchSection{kind, name, line_no, {}});
      current = &file.sections.back();
      continue;
    }
    if (!std::regex_match(line, m, assignment)) throw FormatError(line_no, "expected 'key = value' or a section header");
    if (!current) throw FormatError(line_no, "key outside of any section");
    const std::string key = m[1];
    if (!allowed_keys().at(current->kind).contains(key)) {
      throw FormatError(line_no, "unknown key '" + key + "' in [" + current->kind + "]");
    }
    if (current->values.contains(key)) throw FormatError(line_no, "duplicate key '" + key + "'");
    auto& value = current->values[key];
    value = {trim(m[2]), line_no};
    if (value.text.empty()) throw FormatError(line_no, "empty value for '" + key + "'");
    if (bracket_balance(value.text) > 0) {
      pending = &value.text;
      pending_line = line_no;
    }
  }
  if (pending) throw FormatError(pending_line, "unbalanced brackets");
  if (!file.find("ring", "")) throw FormatError(line_no, "missing [ring] section");
  return file;
}

WorkbenchFile WorkbenchFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const WorkbenchSection* WorkbenchFile::find(const std::string& kind, const std::string& name) const {
  for (const auto& s : sections) {
    if (s.kind == kind && s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> WorkbenchFile::names(const std::string& kind) const {
  std::vector<std::string> out;
  for (const auto& s : sections) {
    if (s.kind == kind) out.push_back(s.name);
  }
  return out;
}

std::vector<std::vector<std::string>> split_matrix_literal(const std::string& text,
                                                           std::size_t line) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']' || bracket_balance(t) != 0) {
    throw FormatError(line, "malformed matrix literal '" + t + "'");
  }
  const std::string inner = trim(t.substr(1, t.size() - 2));
  std::vector<std::vector<std::string>> rows;
  if (inner.empty()) return rows;
  for (const auto& row : split_top_level(inner, ',')) {
    if (row.size() < 2 || row.front() != '[' || row.back() != ']') {
      throw FormatError(line, "matrix row '" + row + "' is not bracketed");
    }
    const std::string body = trim(row.substr(1, row.size() - 2));
    if (body.empty()) throw FormatError(line, "empty matrix row");
    auto entries = split_top_level(body, ',');
    for (const auto& e : entries) {
      if (e.empty()) throw FormatError(line, "empty matrix entry");
    }
    if (!rows.empty() && entries.size() != rows.front().size()) {
      throw FormatError(line, "ragged matrix: rows of length " +
                                  std::to_string(rows.front().size()) + " and " +
                                  std::to_string(entries.size()));
    }
    rows.push_back(std::move(entries));
  }
  return rows;
}

// ---- semantic layer --------------------------------------------------------------------------

Workbench Workbench::open(WorkbenchFile file, const WorkbenchOverrides& overrides) {
  const WorkbenchSection& ring_sec = *file.find("ring", "");
  const auto value_or = [&](const char* key, const std::string& fallback) {
    auto it = ring_sec.values.find(key);
    return it == ring_sec.values.end() ? fallback : it->second.text;
  };
  const auto line_of = [&](const char* key) {
    auto it = ring_sec.values.find(key);
    return it == ring_sec.values.end() ? ring_sec.line : it->second.line;
  };

  Field field = Field::rationals();
  const std::string field_text = overrides.field.value_or(value_or("field", "qq"));
  try {
    field = parse_field(field_text);
  } catch (const Error& e) {
    throw FormatError(line_of("field"), e.what());
  }

  std::vector<std::string> vars;
  for (auto& v : split_top_level(require_value(ring_sec, "vars").text, ',')) vars.push_back(v);
  RingPtr ring;
  try {
    ring = make_ring(vars, field);
  } catch (const Error& e) {
    throw FormatError(line_of("vars"), e.what());
  }

  const std::string order_text = overrides.order.value_or(value_or("order", "grevlex"));
  MonomialOrder order;
  if (order_text == "lex") {
    order = MonomialOrder::lex(vars.size());
  } else if (order_text == "grevlex") {
    order = MonomialOrder::grevlex(vars.size());
  } else {
    throw FormatError(line_of("order"), "unknown order '" + order_text + "' (lex or grevlex)");
  }

  const auto& t_val = require_value(ring_sec, "t");
  std::vector<Polynomial> t_gens;
  for (const auto& s : split_top_level(t_val.text, ',')) {
    t_gens.push_back(parse_entry(s, ring, t_val.line));
  }
  const auto& x_val = require_value(ring_sec, "x");
  std::vector<Rational> coords;
  for (const auto& s : split_top_level(x_val.text, ',')) {
    const Polynomial c = parse_entry(s, ring, x_val.line);
    if (!c.is_constant()) throw FormatError(x_val.line, "x coordinate '" + s + "' is not a constant");
    coords.push_back(c.coefficient(Monomial(vars.size())));
  }
  TowerPtr tower = build_tower(ring, order, std::move(t_gens), std::move(coords));
  return Workbench(std::move(file), std::move(tower));
}

const WorkbenchSection& Workbench::section(const std::string& kind, const std::string& name) const {
  if (const auto* s = file_.find(kind, name)) return *s;
  throw FormatError(0, "no [" + kind + " " + name + "] section");
}

RingMatrix Workbench::matrix(const WorkbenchSection::Value& value, std::optional<std::size_t> rows,
                             std::optional<std::size_t> cols) const {
  const std::string t = trim(value.text);
  if (t == "0" || t == "1") {
    if (!rows || !cols) throw FormatError(value.line, "shape of '" + t + "' cannot be inferred here");
    if (t == "0") return RingMatrix::zero(tower_, Level::S, *rows, *cols);
    if (*rows != *cols) throw FormatError(value.line, "identity shorthand for a non-square block");
    return RingMatrix::identity(tower_, Level::S, *rows);
  }
  const auto cells = split_matrix_literal(t, value.line);
  const std::size_t r = cells.size();
  const std::size_t c = r == 0 ? (cols && rows && *rows == 0 ? *cols : 0) : cells.front().size();
  std::vector<Polynomial> entries;
  for (const auto& row : cells) {
    for (const auto& e : row) entries.push_back(parse_entry(e, tower_->ring(), value.line));
  }
  return RingMatrix::from_entries(tower_, Level::S, r, c, entries);
}

MatrixFactorization Workbench::mf(const std::string& name) const {
  const auto& s = section("mf", name);
  const auto& phi_v = require_value(s, "phi");
  const auto& psi_v = require_value(s, "psi");
  const auto shorthand = [](const WorkbenchSection::Value& v) {
    const std::string t = trim(v.text);
    return t == "0" || t == "1";
  };
  if (shorthand(phi_v) && shorthand(psi_v)) {
    throw FormatError(s.line, "mf " + name + ": phi and psi cannot both be shorthand");
  }
  if (shorthand(phi_v)) {
    RingMatrix psi = matrix(psi_v, std::nullopt, std::nullopt);
    RingMatrix phi = matrix(phi_v, psi.cols(), psi.rows());
    return MatrixFactorization::verify(std::move(phi), std::move(psi));
  }
  RingMatrix phi = matrix(phi_v, std::nullopt, std::nullopt);
  RingMatrix psi = matrix(psi_v, phi.cols(), phi.rows());
  return MatrixFactorization::verify(std::move(phi), std::move(psi));
}

MfMorphism Workbench::morphism(const std::string& name) const {
  const auto& s = section("morphism", name);
  MatrixFactorization source = mf(require_value(s, "source").text);
  MatrixFactorization target = mf(require_value(s, "target").text);
  RingMatrix f = matrix(require_value(s, "f"), target.rank_f(), source.rank_f());
  RingMatrix g = matrix(require_value(s, "g"), target.rank_g(), source.rank_g());
  return MfMorphism::verify(std::move(source), std::move(target), std::move(f), std::move(g));
}

MfHomotopy Workbench::homotopy(const std::string& name) const {
  const auto& s = section("homotopy", name);
  MfMorphism theta = morphism(require_value(s, "from").text);
  const std::string to = require_value(s, "to").text;
  MfMorphism theta_prime =
      to == "0" ? MfMorphism::zero(theta.source(), theta.target()) : morphism(to);
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  RingMatrix hs = matrix(require_value(s, "s"), a2.rank_f(), a1.rank_g());
  RingMatrix ht = matrix(require_value(s, "t"), a2.rank_g(), a1.rank_f());
  return MfHomotopy::verify(std::move(theta), std::move(theta_prime), std::move(hs), std::move(ht));
}

HomotopyTransportInput Workbench::transport_input(const std::string& name) const {
  const auto& s = section("transport", name);
  MfMorphism theta = morphism(require_value(s, "morphism").text);
  const auto& a1 = theta.source();
  const auto& a2 = theta.target();
  RingMatrix s1 = matrix(require_value(s, "s1"), a2.rank_f(), a1.rank_g());
  RingMatrix t = matrix(require_value(s, "t"), a2.rank_g(), a1.rank_f());
  RingMatrix s2 = matrix(require_value(s, "s2"), a2.rank_f(), a1.rank_g());
  return HomotopyTransportInput::make(std::move(theta), std::move(s1), std::move(t), std::move(s2));
}

ChainLiftInput Workbench::lift_input(const std::string& name) const {
  const auto& s = section("lift", name);
  MatrixFactorization source = mf(require_value(s, "source").text);
  MatrixFactorization target = mf(require_value(s, "target").text);
  RingMatrix g1 = matrix(require_value(s, "g1"), target.rank_g(), source.rank_g());
  RingMatrix f0 = matrix(require_value(s, "f0"), target.rank_f(), source.rank_f());
  RingMatrix g0 = matrix(require_value(s, "g0"), target.rank_g(), source.rank_g());
  return ChainLiftInput::make(std::move(source), std::move(target), std::move(g1), std::move(f0),
                              std::move(g0));
}

}  // namespace mfw
