#include "bggkit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bggkit::io {

namespace fs = std::filesystem;

namespace {

const json& field(const json& j, const char* key, const std::string& invariant) {
  if (!j.is_object() || !j.contains(key)) throw InputError(invariant, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& invariant) {
  if (!j.is_number_integer()) throw InputError(invariant, "expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

void check_format(const json& j) {
  if (j.is_object() && j.contains("format") && j.at("format") != kFormat) {
    throw InputError("file.format", "unsupported format " + j.at("format").dump());
  }
}

json weight_list(const KElement& k) {
  json arr = json::array();
  for (const auto& [w, m] : k.terms()) arr.push_back(json{{"w", weight_label(w)}, {"m", m}});
  return arr;
}

}  // namespace

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("file.readable", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("file.json", path.string() + ": " + e.what());
  }
}

void write_text_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("file.writable", "cannot write " + path.string());
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void AliasMap::set(Weight w, const std::string& alias) {
  if (auto it = lookup_.find(alias); it != lookup_.end() && it->second != w) {
    throw InputError("aliases.unique", "alias " + alias + " used twice");
  }
  if (auto it = alias_.find(w); it != alias_.end()) lookup_.erase(it->second);
  alias_[w] = alias;
  lookup_[alias] = w;
}

std::string AliasMap::name(Weight w) const {
  auto it = alias_.find(w);
  return it == alias_.end() ? weight_label(w) : it->second;
}

Weight AliasMap::resolve(const std::string& text) const {
  if (auto it = lookup_.find(text); it != lookup_.end()) return it->second;
  if (auto w = parse_weight_label(text)) return *w;
  throw InputError("weight.label", "cannot read weight \"" + text + "\"");
}

AliasMap aliases_from_json(const json& j, const DoubleGroup& dg) {
  check_format(j);
  const json& obj = field(j, "aliases", "aliases.shape");
  if (!obj.is_object()) throw InputError("aliases.shape", "\"aliases\" must map labels to names");
  AliasMap a;
  for (const auto& [label, alias] : obj.items()) {
    auto w = parse_weight_label(label);
    if (!w || !dg.contains(*w)) throw InputError("aliases.known_weights", "unknown weight " + label);
    if (!alias.is_string()) throw InputError("aliases.shape", "alias of " + label + " is not a string");
    a.set(*w, alias.get<std::string>());
  }
  return a;
}

json aliases_to_json(const AliasMap& a) {
  json obj = json::object();
  for (const auto& [w, s] : a.aliases()) obj[weight_label(w)] = s;
  return json{{"format", kFormat}, {"aliases", obj}};
}

FiniteGroup group_from_json(const json& j, std::size_t max_order) {
  check_format(j);
  const std::int64_t degree = as_int(field(j, "degree", "group.degree"), "group.degree");
  if (degree < 1 || degree > 64) throw InputError("group.degree", "degree must be between 1 and 64");
  const json& gens = field(j, "generators", "group.generators");
  if (!gens.is_array()) throw InputError("group.generators", "\"generators\" must be an array");
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    if (!g.is_array()) throw InputError("group.generators", "generator " + g.dump() + " is not an image array");
    std::vector<int> images;
    for (const auto& x : g) images.push_back(static_cast<int>(as_int(x, "perm.bijective")));
    perms.emplace_back(std::move(images));
  }
  return close_group(static_cast<int>(degree), perms, max_order);
}

json group_to_json(const FiniteGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  return json{{"format", kFormat}, {"degree", g.degree()}, {"generators", gens}};
}

json cyclotomic_to_json(const Cyclotomic& z) {
  json coeffs = json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.get_str());
  return json{{"order", z.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  const int order = static_cast<int>(as_int(field(j, "order", "cyclotomic.shape"), "cyclotomic.shape"));
  std::vector<Rational> coeffs;
  for (const auto& c : field(j, "coeffs", "cyclotomic.shape")) {
    try {
      Rational r(c.get<std::string>());
      r.canonicalize();
      coeffs.push_back(r);
    } catch (const std::exception&) {
      throw InputError("cyclotomic.shape", "bad rational " + c.dump());
    }
  }
  return Cyclotomic(order, std::move(coeffs));
}

json laurent_to_json(const LaurentPoly& p) {
  json obj = json::object();
  for (const auto& [d, c] : p.terms()) obj[std::to_string(d)] = c;
  return obj;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw InputError("laurent.shape", "expected {\"deg\": coeff}, got " + j.dump());
  LaurentPoly::Terms terms;
  for (const auto& [key, c] : j.items()) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("laurent.shape", "degree key \"" + key + "\" is not an integer");
    }
    terms[d] += as_int(c, "laurent.shape");
  }
  return LaurentPoly(terms);
}

json kelement_to_json(const KElement& k) { return weight_list(k); }

KElement kelement_from_json(const json& j, const AliasMap& names) {
  if (!j.is_array()) throw InputError("character.shape", "expected a weight list, got " + j.dump());
  KElement k;
  for (const auto& e : j) {
    const json& w = field(e, "w", "character.shape");
    if (!w.is_string()) throw InputError("character.shape", "weight must be a string");
    k.add(names.resolve(w.get<std::string>()), as_int(field(e, "m", "character.shape"), "character.shape"));
  }
  return k;
}

json graded_to_json(const GradedChar& g) {
  json arr = json::array();
  for (const auto& [deg, k] : g.components()) arr.push_back(json{{"deg", deg}, {"weights", weight_list(k)}});
  return json{{"char", arr}};
}

GradedChar graded_from_json(const json& j, const AliasMap& names) {
  const json& arr = j.is_array() ? j : field(j, "char", "character.shape");
  if (!arr.is_array()) throw InputError("character.shape", "\"char\" must be an array");
  GradedChar g;
  for (const auto& comp : arr) {
    const int deg = static_cast<int>(as_int(field(comp, "deg", "character.shape"), "character.shape"));
    g.add(deg, kelement_from_json(field(comp, "weights", "character.shape"), names));
  }
  return g;
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("BGGKIT_CACHE_DIR"); env != nullptr && *env != '\0') return fs::path(env);
  return std::nullopt;
}

std::string content_hash(const json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

json tables_to_json(const DoubleGroup& dg) {
  json tables = json::array();
  for (std::size_t c = 0; c < dg.classes().size(); ++c) {
    const auto& t = dg.centralizer_table(static_cast<int>(c));
    json rows = json::array();
    for (const auto& row : t.rows) {
      json r = json::array();
      for (const auto& v : row) r.push_back(cyclotomic_to_json(v));
      rows.push_back(r);
    }
    tables.push_back(json{{"group_order", t.group_order}, {"exponent", t.exponent}, {"degrees", t.degrees}, {"rows", rows}});
  }
  return json{{"format", kFormat}, {"tables", tables}};
}

std::vector<OrdinaryCharTable> tables_from_json(const json& j) {
  check_format(j);
  std::vector<OrdinaryCharTable> out;
  for (const auto& t : field(j, "tables", "cache.shape")) {
    OrdinaryCharTable table;
    table.group_order = static_cast<std::size_t>(as_int(field(t, "group_order", "cache.shape"), "cache.shape"));
    table.exponent = static_cast<int>(as_int(field(t, "exponent", "cache.shape"), "cache.shape"));
    for (const auto& d : field(t, "degrees", "cache.shape")) table.degrees.push_back(as_int(d, "cache.shape"));
    for (const auto& row : field(t, "rows", "cache.shape")) {
      std::vector<Cyclotomic> r;
      for (const auto& v : row) r.push_back(cyclotomic_from_json(v));
      table.rows.push_back(std::move(r));
    }
    if (table.rows.size() != table.degrees.size()) throw InputError("cache.shape", "row and degree counts differ");
    out.push_back(std::move(table));
  }
  return out;
}

std::shared_ptr<const DoubleGroup> load_double_group(const json& group, const LoadOptions& opts) {
  FiniteGroup g = group_from_json(group, opts.max_group_order);
  if (!opts.cache_dir) return std::make_shared<const DoubleGroup>(std::move(g));
  const json canonical = group_to_json(g);
  const fs::path file = *opts.cache_dir / ("tables-" + content_hash(canonical) + ".json");
  if (fs::exists(file)) {
    try {
      return std::make_shared<const DoubleGroup>(std::move(g), tables_from_json(read_json_file(file)));
    } catch (const InputError&) {
      // stale or damaged cache entry: recompute below
      g = group_from_json(group, opts.max_group_order);
    }
  }
  auto dg = std::make_shared<const DoubleGroup>(std::move(g));
  const fs::path tmp = file.string() + ".tmp";
  write_text_file(tmp, dump(tables_to_json(*dg)));
  fs::rename(tmp, file);
  return dg;
}

std::shared_ptr<const DoubleGroup> load_double_group_file(const fs::path& path, const LoadOptions& opts) {
  return load_double_group(read_json_file(path), opts);
}

NicholsProfile profile_from_json(const json& j, std::shared_ptr<const DoubleGroup> dg, const AliasMap& names) {
  check_format(j);
  const json& comps = field(j, "components", "profile.shape");
  if (!comps.is_array()) throw InputError("profile.shape", "\"components\" must be an array");
  std::map<int, KElement> by_degree;
  for (const auto& c : comps) {
    const std::int64_t deg = as_int(field(c, "deg", "profile.shape"), "profile.shape");
    if (deg < 0 || deg > 100000) throw InputError("profile.degrees", "component degree " + std::to_string(deg) + " out of range");
    if (by_degree.contains(static_cast<int>(deg))) {
      throw InputError("profile.degrees", "degree " + std::to_string(deg) + " listed twice");
    }
    by_degree.emplace(static_cast<int>(deg), kelement_from_json(field(c, "weights", "profile.shape"), names));
  }
  std::vector<KElement> components;
  for (const auto& [deg, k] : by_degree) {
    if (deg != static_cast<int>(components.size())) {
      throw InputError("profile.degrees", "component degrees must be 0..n_top without gaps");
    }
    components.push_back(k);
  }
  return NicholsProfile::create(std::move(dg), std::move(components));
}

NicholsProfile profile_from_json(const json& j, const fs::path& base_dir, const LoadOptions& opts,
                                 const AliasMap& names) {
  const json& ref = field(j, "group", "profile.group");
  std::shared_ptr<const DoubleGroup> dg;
  if (ref.is_string()) {
    dg = load_double_group_file(base_dir / ref.get<std::string>(), opts);
  } else if (ref.is_object()) {
    dg = load_double_group(ref, opts);
  } else {
    throw InputError("profile.group", "\"group\" must be a path or a group object");
  }
  return profile_from_json(j, dg, names);
}

json profile_to_json(const NicholsProfile& p, const json& group_ref) {
  json comps = json::array();
  for (std::size_t j = 0; j < p.components().size(); ++j) {
    comps.push_back(json{{"deg", j}, {"weights", weight_list(p.components()[j])}});
  }
  return json{{"format", kFormat}, {"group", group_ref}, {"components", comps}};
}

json simples_to_json(const SimpleTable& t) {
  json arr = json::array();
  for (const auto& [w, ch] : t.entries()) arr.push_back(json{{"w", weight_label(w)}, {"char", graded_to_json(ch)}});
  return json{{"format", kFormat}, {"simples", arr}};
}

SimpleTable simples_from_json(const json& j, const DoubleGroup& dg, const AliasMap& names) {
  check_format(j);
  std::map<Weight, GradedChar> entries;
  for (const auto& e : field(j, "simples", "simples.shape")) {
    const Weight w = names.resolve(field(e, "w", "simples.shape").get<std::string>());
    if (!entries.emplace(w, graded_from_json(field(e, "char", "simples.shape"), names)).second) {
      throw InputError("simples.unique", "two entries for " + weight_label(w));
    }
  }
  return SimpleTable::create(dg, std::move(entries));
}

json decomposition_to_json(const LaurentMatrix& m, bool graded) {
  json rows = json::array();
  for (const auto& [lambda, row] : m) {
    json entries = json::array();
    for (const auto& [mu, p] : row) {
      if (graded) {
        entries.push_back(json{{"w", weight_label(mu)}, {"p", laurent_to_json(p)}});
      } else {
        entries.push_back(json{{"w", weight_label(mu)}, {"m", p.eval_one()}});
      }
    }
    rows.push_back(json{{"verma", weight_label(lambda)}, {"entries", entries}});
  }
  return json{{"format", kFormat}, {"graded", graded}, {"rows", rows}};
}

LaurentMatrix decomposition_from_json(const json& j, const AliasMap& names) {
  check_format(j);
  LaurentMatrix m;
  for (const auto& row : field(j, "rows", "decomposition.shape")) {
    const Weight lambda = names.resolve(field(row, "verma", "decomposition.shape").get<std::string>());
    if (m.contains(lambda)) throw InputError("decomposition.unique", "two rows for " + weight_label(lambda));
    auto& out = m[lambda];
    for (const auto& e : field(row, "entries", "decomposition.shape")) {
      const Weight mu = names.resolve(field(e, "w", "decomposition.shape").get<std::string>());
      LaurentPoly p = e.contains("p") ? laurent_from_json(e.at("p"))
                                      : LaurentPoly(as_int(field(e, "m", "decomposition.shape"), "decomposition.shape"));
      out[mu] += p;
      if (out[mu].is_zero()) out.erase(mu);
    }
  }
  return m;
}

json matrix_to_json(const LaurentMatrix& m) {
  json obj = json::object();
  for (const auto& [row, cols] : m) {
    json r = json::object();
    for (const auto& [col, p] : cols) r[weight_label(col)] = laurent_to_json(p);
    obj[weight_label(row)] = r;
  }
  return obj;
}

LaurentMatrix matrix_from_json(const json& j, const AliasMap& names) {
  if (!j.is_object()) throw InputError("matrix.shape", "matrix must be an object");
  LaurentMatrix m;
  for (const auto& [row, cols] : j.items()) {
    auto& out = m[names.resolve(row)];
    for (const auto& [col, p] : cols.items()) {
      LaurentPoly poly = laurent_from_json(p);
      if (!poly.is_zero()) out[names.resolve(col)] = poly;
    }
  }
  return m;
}

json report_to_json(const BGGReport& r, const AliasMap& names, const CheckReport& checks) {
  const DoubleGroup& dg = r.profile.dg();
  json weights = json::array();
  for (const auto& w : dg.weights()) {
    json e{{"w", weight_label(w)}, {"dim", dg.dimension(w)}};
    if (names.aliases().contains(w)) e["alias"] = names.name(w);
    e["class"] = to_string(r.classification.at(w));
    weights.push_back(e);
  }
  json chars = json::object();
  for (const auto& [w, ch] : r.projective_chars) chars[weight_label(w)] = graded_to_json(ch);
  json checks_json = json::array();
  for (const auto& c : checks.checks) checks_json.push_back(json{{"name", c.name}, {"passed", c.passed}});
  return json{{"format", kFormat},
              {"graded", r.graded},
              {"n_top", r.profile.n_top()},
              {"lambda_V", weight_label(r.profile.lambda_V())},
              {"lambda_oV", weight_label(r.profile.lambda_oV())},
              {"weights", weights},
              {"verma_simple", matrix_to_json(r.verma_simple)},
              {"projective_verma", matrix_to_json(r.projective_verma)},
              {"projective_coverma", matrix_to_json(r.projective_coverma)},
              {"cartan", matrix_to_json(r.cartan)},
              {"projective_chars", chars},
              {"checks", checks_json}};
}

BGGReport report_from_json(const json& j, const NicholsProfile& profile) {
  check_format(j);
  BGGReport r{profile};
  const AliasMap none;
  r.graded = field(j, "graded", "report.shape").get<bool>();
  r.verma_simple = matrix_from_json(field(j, "verma_simple", "report.shape"), none);
  r.projective_verma = matrix_from_json(field(j, "projective_verma", "report.shape"), none);
  r.projective_coverma = matrix_from_json(field(j, "projective_coverma", "report.shape"), none);
  r.cartan = matrix_from_json(field(j, "cartan", "report.shape"), none);
  for (const auto& [label, ch] : field(j, "projective_chars", "report.shape").items()) {
    r.projective_chars.emplace(none.resolve(label), graded_from_json(ch, none));
  }
  for (const auto& w : field(j, "weights", "report.shape")) {
    const std::string cls = field(w, "class", "report.shape").get<std::string>();
    r.classification.emplace(none.resolve(w.at("w").get<std::string>()),
                             cls == "simple_projective" ? VermaClass::simple_projective : VermaClass::non_simple);
  }
  return r;
}

bool same_report_data(const BGGReport& a, const BGGReport& b) {
  return a.graded == b.graded && a.verma_simple == b.verma_simple && a.projective_verma == b.projective_verma &&
         a.projective_coverma == b.projective_coverma && a.cartan == b.cartan &&
         a.projective_chars == b.projective_chars && a.classification == b.classification;
}

std::string applied(const std::string& symbol, const std::string& name) {
  if (name.size() >= 2 && name.front() == '(' && name.back() == ')') return symbol + name;
  return symbol + "(" + name + ")";
}

std::string render_combination(const std::map<Weight, LaurentPoly>& coeffs, const std::string& symbol,
                               const AliasMap& names, std::optional<Weight> head) {
  std::vector<std::pair<Weight, LaurentPoly>> terms;
  if (head && coeffs.contains(*head)) terms.emplace_back(*head, coeffs.at(*head));
  for (const auto& [w, p] : coeffs) {
    if (!(head && w == *head) && !p.is_zero()) terms.emplace_back(w, p);
  }
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, p] : terms) {
    const bool negative = p.terms().size() == 1 && p.terms().begin()->second < 0;
    std::string coeff = negative ? (-p).to_string() : p.to_string();
    if (p.terms().size() > 1) coeff = "(" + coeff + ")";
    if (coeff == "1") coeff.clear();
    if (!out.empty()) {
      out += negative ? " - " : " + ";
    } else if (negative) {
      out += "-";
    }
    out += (coeff.empty() ? "" : coeff + " ") + (symbol.empty() ? names.name(w) : applied(symbol, names.name(w)));
  }
  return out;
}

std::string render_report_text(const BGGReport& r, const AliasMap& names, const CheckReport& checks) {
  const DoubleGroup& dg = r.profile.dg();
  std::ostringstream out;
  out << (r.graded ? "graded" : "ungraded (t = 1)") << " BGG report, " << dg.size() << " weights, n_top = "
      << r.profile.n_top() << ", dim B(V) = " << r.profile.dim_B() << "\n\n";
  for (const auto& lambda : dg.weights()) {
    out << applied("ch M", names.name(lambda)) << " = "
        << render_combination(r.verma_simple.count(lambda) ? r.verma_simple.at(lambda) : std::map<Weight, LaurentPoly>{},
                              "ch L", names, lambda)
        << "\n";
  }
  out << "\n";
  for (const auto& mu : dg.weights()) {
    out << applied("ch P", names.name(mu)) << " = " << render_combination(r.projective_verma.at(mu), "ch M", names, mu)
        << "\n";
  }
  out << "\n";
  int simple = 0;
  for (const auto& [w, c] : r.classification) simple += c == VermaClass::simple_projective;
  out << "simple projective Vermas (" << simple << "):";
  for (const auto& [w, c] : r.classification) {
    if (c == VermaClass::simple_projective) out << " " << applied("M", names.name(w));
  }
  out << "\n\nchecks:\n";
  for (const auto& c : checks.checks) out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << "\n";
  return out.str();
}

}  // namespace bggkit::io
