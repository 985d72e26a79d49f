#include "glc/instance.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace glc {

namespace {

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_column;  ///< 1-based column where the value starts
};

struct Section {
  std::size_t header_line = 0;
  std::vector<Line> lines;
};

std::string trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset = b;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what, line, column);
}

std::map<std::string, Section> split_sections(std::string_view text) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    start = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t lead = 0;
    std::string body = trim(raw, &lead);
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') fail(number, lead + 1, "unterminated section header");
      std::string name = trim(std::string_view(body).substr(1, body.size() - 2));
      if (name != "ring" && name != "ideal" && name != "M" && name != "N")
        fail(number, lead + 2, "unknown section [" + name + "]");
      if (sections.count(name)) fail(number, lead + 1, "duplicate section [" + name + "]");
      current = &sections[name];
      current->header_line = number;
      continue;
    }
    if (!current) fail(number, lead + 1, "entry outside of a section");
    auto eq = raw.find('=');
    if (eq == std::string_view::npos) fail(number, lead + 1, "expected key = value");
    std::string key = trim(raw.substr(0, eq));
    std::size_t voff = 0;
    std::string value = trim(raw.substr(eq + 1), &voff);
    current->lines.push_back({number, key, value, eq + 2 + voff});
  }
  return sections;
}

/// Comma-separated items with their 1-based columns.
std::vector<std::pair<std::string, std::size_t>> items(const std::string& value, std::size_t column, char sep = ',') {
  std::vector<std::pair<std::string, std::size_t>> out;
  if (trim(value).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = value.find(sep, start);
    std::string_view piece = std::string_view(value).substr(start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t off = 0;
    out.emplace_back(trim(piece, &off), column + start + off);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

const Line* find_key(const Section& s, const std::string& key) {
  const Line* found = nullptr;
  for (const auto& l : s.lines) {
    if (l.key != key) continue;
    if (found) fail(l.number, 1, "duplicate key " + key);
    found = &l;
  }
  return found;
}

void check_keys(const Section& s, std::initializer_list<std::string_view> allowed) {
  for (const auto& l : s.lines)
    if (std::find(allowed.begin(), allowed.end(), l.key) == allowed.end()) fail(l.number, 1, "unknown key " + l.key);
}

template <CoefficientField F>
Polynomial<F> polynomial_at(const RingPtr<F>& ring, const std::string& text, std::size_t line, std::size_t column) {
  if (text.empty()) fail(line, column, "empty polynomial");
  Polynomial<F> p(ring);
  try {
    p = parse_polynomial(ring, text);
  } catch (const ParseError& e) {
    std::string what = e.what();
    if (auto at = what.find(" at column "); at != std::string::npos) what.resize(at);
    fail(line, column + (e.column() ? e.column() - 1 : 0), what);
  }
  if (!p.is_homogeneous()) fail(line, column, "polynomial " + text + " is not homogeneous");
  return p;
}

template <CoefficientField F>
std::vector<Polynomial<F>> polynomials(const RingPtr<F>& ring, const Line& l) {
  std::vector<Polynomial<F>> out;
  for (const auto& [text, col] : items(l.value, l.value_column)) out.push_back(polynomial_at(ring, text, l.number, col));
  return out;
}

template <CoefficientField F>
PresentedModule<F> parse_module(const RingPtr<F>& ring, const Section& s, const std::string& name) {
  check_keys(s, {"quotient", "directsum", "degrees", "relation"});
  if (s.lines.empty()) return PresentedModule<F>::zero(ring);
  const Line* quotient = find_key(s, "quotient");
  const Line* directsum = find_key(s, "directsum");
  const Line* degrees = find_key(s, "degrees");
  int forms = (quotient != nullptr) + (directsum != nullptr) + (degrees != nullptr);
  if (forms != 1) fail(s.header_line, 1, "module " + name + " needs exactly one of quotient, directsum, degrees");
  if (quotient) return PresentedModule<F>::cyclic(make_ideal(ring, polynomials(ring, *quotient)));
  if (directsum) {
    std::vector<PresentedModule<F>> parts;
    for (const auto& [part, col] : items(directsum->value, directsum->value_column, '|')) {
      Line sub{directsum->number, "", part, col};
      parts.push_back(PresentedModule<F>::cyclic(make_ideal(ring, polynomials(ring, sub))));
    }
    return direct_sum(parts);
  }
  std::vector<int> degs;
  for (const auto& [text, col] : items(degrees->value, degrees->value_column)) {
    try {
      std::size_t used = 0;
      degs.push_back(std::stoi(text, &used));
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      fail(degrees->number, col, "expected an integer degree");
    }
  }
  FreeModule gens(degs);
  std::vector<Vector<F>> rels;
  for (const auto& l : s.lines) {
    if (l.key != "relation") continue;
    auto entries = polynomials(ring, l);
    if (entries.size() != gens.rank())
      fail(l.number, l.value_column, "relation has " + std::to_string(entries.size()) + " entries, expected " +
                                         std::to_string(gens.rank()));
    auto v = from_components(*ring, entries);
    if (!is_homogeneous(v, gens.degrees)) fail(l.number, l.value_column, "relation is not homogeneous");
    rels.push_back(std::move(v));
  }
  return PresentedModule<F>(ring, gens, std::move(rels));
}

template <CoefficientField F>
Instance<F> build(F field, const std::map<std::string, Section>& sections, const std::vector<std::string>& vars,
                  const Line* hypersurface, std::string id, MonomialOrder order) {
  RingPtr<F> ring = Ring<F>::make(std::move(field), vars, order);
  if (hypersurface) {
    auto f = polynomial_at(ring, hypersurface->value, hypersurface->number, hypersurface->value_column);
    if (f.degree() < 2) fail(hypersurface->number, hypersurface->value_column, "hypersurface must have degree >= 2");
    ring = ring->with_hypersurface(f);
  }
  const Section& ideal = sections.at("ideal");
  check_keys(ideal, {"generators"});
  const Line* gens = find_key(ideal, "generators");
  if (!gens) fail(ideal.header_line, 1, "[ideal] needs generators");
  Instance<F> inst{std::move(id), ring, make_ideal(ring, polynomials(ring, *gens)),
                   parse_module(ring, sections.at("M"), "M"), parse_module(ring, sections.at("N"), "N")};
  validate(inst);
  return inst;
}

template <CoefficientField F>
std::string join(const std::vector<Polynomial<F>>& ps) {
  std::string s;
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s;
}

template <CoefficientField F>
void print_module(std::ostringstream& out, const std::string& name, const PresentedModule<F>& M) {
  out << "[" << name << "]\n";
  if (M.generators().rank() == 0) return;
  out << "degrees = ";
  for (std::size_t i = 0; i < M.generators().rank(); ++i) out << (i ? ", " : "") << M.generators().degrees[i];
  out << "\n";
  for (const auto& r : M.relations()) {
    std::vector<Polynomial<F>> entries;
    for (std::uint32_t p = 0; p < M.generators().rank(); ++p) entries.push_back(component(M.ring(), r, p));
    out << "relation = ";
    for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? ", " : "") << entries[i].to_string();
    out << "\n";
  }
}

}  // namespace

AnyInstance parse_instance(std::string_view text, std::string id, MonomialOrder order) {
  auto sections = split_sections(text);
  const std::size_t end_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  auto require = [&](std::initializer_list<const char*> names) {
    for (const char* name : names)
      if (!sections.count(name)) fail(end_line, 1, std::string("missing section [") + name + "]");
  };
  require({"ring"});
  const Section& ring = sections.at("ring");
  check_keys(ring, {"vars", "field", "hypersurface"});
  const Line* vars = find_key(ring, "vars");
  const Line* field = find_key(ring, "field");
  if (!vars) fail(ring.header_line, 1, "[ring] needs vars");
  if (!field) fail(ring.header_line, 1, "[ring] needs field");
  std::vector<std::string> names;
  for (const auto& [name, col] : items(vars->value, vars->value_column)) {
    bool ok = !name.empty() && std::isalpha(static_cast<unsigned char>(name[0]));
    for (char c : name) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) fail(vars->number, col, "bad variable name '" + name + "'");
    names.push_back(name);
  }
  try {
    if (names.empty() || names.size() > kMaxVariables) throw std::invalid_argument("ring needs between 1 and 8 variables");
    Ring<RationalField>(RationalField{}, names);
  } catch (const std::invalid_argument& e) {
    fail(vars->number, vars->value_column, e.what());
  }
  const Line* hyper = find_key(ring, "hypersurface");
  const std::string& fv = field->value;
  if (fv == "QQ") {
    require({"ideal", "M", "N"});
    return build(RationalField{}, sections, names, hyper, std::move(id), order);
  }
  if (fv.size() > 3 && fv.rfind("F(", 0) == 0 && fv.back() == ')') {
    std::string digits = trim(std::string_view(fv).substr(2, fv.size() - 3));
    std::uint64_t p = 0;
    try {
      std::size_t used = 0;
      p = std::stoull(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::exception&) {
      fail(field->number, field->value_column + 2, "expected a decimal characteristic");
    }
    if (!is_prime(p) || p >= (1ull << 62))
      fail(field->number, field->value_column + 2, "characteristic " + digits + " is not a prime below 2^62");
    require({"ideal", "M", "N"});
    return build(PrimeField(p), sections, names, hyper, std::move(id), order);
  }
  fail(field->number, field->value_column, "field must be QQ or F(p)");
}

AnyInstance load_instance(const std::filesystem::path& path, MonomialOrder order) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str(), path.stem().string(), order);
}

template <CoefficientField F>
std::string print_instance(const Instance<F>& inst) {
  std::ostringstream out;
  const auto& ring = *inst.ring;
  out << "[ring]\nvars = ";
  for (std::size_t i = 0; i < ring.nvars(); ++i) out << (i ? ", " : "") << ring.variable_names()[i];
  const FieldSpec spec = ring.field().spec();
  out << "\nfield = " << (spec.kind == FieldKind::rationals ? std::string("QQ") : "F(" + std::to_string(spec.characteristic) + ")")
      << "\n";
  if (ring.has_hypersurface()) out << "hypersurface = " << ring.hypersurface().to_string() << "\n";
  out << "\n[ideal]\ngenerators = " << join(inst.a.generators) << "\n\n";
  print_module(out, "M", inst.M);
  out << "\n";
  print_module(out, "N", inst.N);
  return out.str();
}

std::string print_instance(const AnyInstance& inst) {
  return std::visit([](const auto& i) { return print_instance(i); }, inst);
}

const std::string& instance_id(const AnyInstance& inst) {
  return std::visit([](const auto& i) -> const std::string& { return i.id; }, inst);
}

template std::string print_instance<PrimeField>(const Instance<PrimeField>&);
template std::string print_instance<RationalField>(const Instance<RationalField>&);

}  // namespace glc
