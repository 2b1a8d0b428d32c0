#pragma once

#include <optional>
#include <string>

#include "bggkit/io.hpp"
#include "bggkit/taft.hpp"

namespace bggkit::io {

/// File paths for one run; empty means absent.
struct Sources {
  std::string group;
  std::string profile;
  std::string simples;
  std::string decomposition;
  std::string aliases;
  std::string cache_dir;
  std::size_t max_group_order = 10000;
};

struct Inputs {
  std::shared_ptr<const DoubleGroup> dg;
  AliasMap names;
  std::optional<NicholsProfile> profile;
  std::optional<SimpleTable> table;
  std::optional<LaurentMatrix> decomposition;
};

LoadOptions load_options(const Sources& s);

/// Reads and validates every input before any computation starts.
/// A profile with n_top = 0 and no table gets the trivial simple table.
Inputs load_inputs(const Sources& s, bool need_profile);

/// Graded report from a simple table, or ungraded from a decomposition matrix.
BGGReport make_report(const Inputs& in, bool ungraded);

/// Canonical display names "(r,s)" for the Taft weights.
AliasMap taft_aliases(const taft::TaftData& data);

/// group, profile, simples, aliases and report files for the Taft data under `out`.
void write_taft_bundle(const taft::TaftData& data, const BGGReport& report, const std::filesystem::path& out);

}  // namespace bggkit::io
