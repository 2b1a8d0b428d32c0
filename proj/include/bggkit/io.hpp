#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

#include "bggkit/bgg.hpp"

namespace bggkit::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormat = 1;

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Pretty JSON with a trailing newline.
std::string dump(const json& j);

/// Optional display names for weights; canonical labels always resolve.
class AliasMap {
 public:
  AliasMap() = default;
  void set(Weight w, const std::string& alias);
  std::string name(Weight w) const;
  Weight resolve(const std::string& text) const;
  const std::map<Weight, std::string>& aliases() const { return alias_; }

 private:
  std::map<Weight, std::string> alias_;
  std::map<std::string, Weight> lookup_;
};

AliasMap aliases_from_json(const json& j, const DoubleGroup& dg);
json aliases_to_json(const AliasMap& a);

/// {"degree": N, "generators": [[...], ...]}
FiniteGroup group_from_json(const json& j, std::size_t max_order = 10000);
json group_to_json(const FiniteGroup& g);

json cyclotomic_to_json(const Cyclotomic& z);
Cyclotomic cyclotomic_from_json(const json& j);

/// {"deg": coeff} with degrees as string keys, ascending.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json kelement_to_json(const KElement& k);
KElement kelement_from_json(const json& j, const AliasMap& names);

/// {"char": [{"deg": d, "weights": [{"w": label, "m": int}]}]}
json graded_to_json(const GradedChar& g);
GradedChar graded_from_json(const json& j, const AliasMap& names);

struct LoadOptions {
  std::size_t max_group_order = 10000;
  std::optional<std::filesystem::path> cache_dir;
};

/// Flag first, then BGGKIT_CACHE_DIR, otherwise no cache.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// FNV-1a of the canonical dump, as 16 hex digits.
std::string content_hash(const json& j);

/// Builds D(G), reusing centralizer character tables cached under the content hash.
std::shared_ptr<const DoubleGroup> load_double_group(const json& group, const LoadOptions& opts);
std::shared_ptr<const DoubleGroup> load_double_group_file(const std::filesystem::path& path, const LoadOptions& opts);

json tables_to_json(const DoubleGroup& dg);
std::vector<OrdinaryCharTable> tables_from_json(const json& j);

/// "group" is a path relative to `base_dir` or an inline group object.
NicholsProfile profile_from_json(const json& j, const std::filesystem::path& base_dir, const LoadOptions& opts,
                                 const AliasMap& names = {});
NicholsProfile profile_from_json(const json& j, std::shared_ptr<const DoubleGroup> dg, const AliasMap& names = {});
json profile_to_json(const NicholsProfile& p, const json& group_ref);

json simples_to_json(const SimpleTable& t);
SimpleTable simples_from_json(const json& j, const DoubleGroup& dg, const AliasMap& names = {});

/// {"rows": [{"verma": label, "entries": [{"w": label, "m": int} or {"w": label, "p": {...}}]}]}
json decomposition_to_json(const LaurentMatrix& m, bool graded);
LaurentMatrix decomposition_from_json(const json& j, const AliasMap& names = {});

json matrix_to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const json& j, const AliasMap& names = {});

json report_to_json(const BGGReport& r, const AliasMap& names, const CheckReport& checks);
/// Matrices, characters and flags of a report file, for round-trip checks.
BGGReport report_from_json(const json& j, const NicholsProfile& profile);
bool same_report_data(const BGGReport& a, const BGGReport& b);

/// symbol(name), without doubling parentheses already in the name.
std::string applied(const std::string& symbol, const std::string& name);
/// "2 ch M(x) + t^2 ch M(y)"; the head weight, if present, goes first.
std::string render_combination(const std::map<Weight, LaurentPoly>& coeffs, const std::string& symbol,
                               const AliasMap& names, std::optional<Weight> head = std::nullopt);
std::string render_report_text(const BGGReport& r, const AliasMap& names, const CheckReport& checks);

}  // namespace bggkit::io
