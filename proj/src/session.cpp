#include "bggkit/session.hpp"

namespace fs = std::filesystem;

namespace bggkit::io {

LoadOptions load_options(const Sources& c) {
  LoadOptions o;
  o.max_group_order = c.max_group_order;
  o.cache_dir = resolve_cache_dir(c.cache_dir.empty() ? std::nullopt : std::optional<std::string>(c.cache_dir));
  return o;
}

namespace {

AliasMap load_aliases(const Sources& c, const DoubleGroup& dg) {
  if (c.aliases.empty()) return {};
  return aliases_from_json(read_json_file(c.aliases), dg);
}

}  // namespace

Inputs load_inputs(const Sources& c, bool need_profile) {
  Inputs in;
  const auto opts = load_options(c);
  if (!c.profile.empty()) {
    const fs::path path(c.profile);
    const json pj = read_json_file(path);
    const json& ref = pj.contains("group") ? pj.at("group") : json();
    if (!c.group.empty()) {
      in.dg = load_double_group_file(c.group, opts);
    } else if (ref.is_string()) {
      in.dg = load_double_group_file(path.parent_path() / ref.get<std::string>(), opts);
    } else if (ref.is_object()) {
      in.dg = load_double_group(ref, opts);
    } else {
      throw InputError("profile.group", "profile names no group and --group is missing");
    }
    in.names = load_aliases(c, *in.dg);
    in.profile = profile_from_json(pj, in.dg, in.names);
  } else if (need_profile) {
    throw InputError("config.profile", "--profile is required");
  } else if (!c.group.empty()) {
    in.dg = load_double_group_file(c.group, opts);
    in.names = load_aliases(c, *in.dg);
  } else {
    throw InputError("config.group", "--group is required");
  }
  if (!c.simples.empty()) in.table = simples_from_json(read_json_file(c.simples), *in.dg, in.names);
  if (!c.decomposition.empty()) in.decomposition = decomposition_from_json(read_json_file(c.decomposition), in.names);
  if (in.profile && !in.table && !in.decomposition && in.profile->n_top() == 0) {
    std::map<Weight, GradedChar> trivial;
    for (const auto& w : in.dg->weights()) trivial.emplace(w, GradedChar(w));
    in.table = SimpleTable::create(*in.dg, std::move(trivial));
  }
  return in;
}

BGGReport make_report(const Inputs& in, bool ungraded) {
  if (in.table) {
    BGGReport r = bgg_matrices(*in.profile, *in.table);
    return ungraded ? bgg_from_decomposition(*in.profile, r.verma_simple) : r;
  }
  if (in.decomposition) return bgg_from_decomposition(*in.profile, *in.decomposition);
  throw InputError("config.simples", "--simples or --decomposition is required");
}

AliasMap taft_aliases(const taft::TaftData& data) {
  AliasMap names;
  for (const auto& [w, a] : data.aliases()) names.set(w, a);
  return names;
}

void write_taft_bundle(const taft::TaftData& data, const BGGReport& report, const fs::path& out) {
  const AliasMap names = taft_aliases(data);
  const CheckReport checks = verify_report(report);
  write_text_file(out / "group.json", dump(group_to_json(data.dg->group())));
  write_text_file(out / "profile.json", dump(profile_to_json(data.profile, "group.json")));
  write_text_file(out / "simples.json", dump(simples_to_json(data.table)));
  write_text_file(out / "aliases.json", dump(aliases_to_json(names)));
  write_text_file(out / "report.json", dump(report_to_json(report, names, checks)));
  write_text_file(out / "report.txt", render_report_text(report, names, checks));
}

}  // namespace bggkit::io
