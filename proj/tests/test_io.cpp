#include <cstdlib>
#include <filesystem>
#include <functional>

#include "doctest.h"

#include "bggkit/io.hpp"
#include "bggkit/taft.hpp"

using namespace bggkit;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return fs::path(BGGKIT_DATA_DIR); }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("bggkit-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("group files") {
  FiniteGroup g = io::group_from_json(io::read_json_file(data_dir() / "s3.json"));
  CHECK(g.order() == 6);
  CHECK(io::group_from_json(io::read_json_file(data_dir() / "trivial.json")).order() == 1);
  CHECK(io::group_from_json(io::group_to_json(g)).elements() == g.elements());
  CHECK(invariant_of([] { io::group_from_json(io::json{{"degree", 3}, {"generators", {{0, 0, 1}}}}); }) ==
        "perm.bijective");
  CHECK(invariant_of([] { io::group_from_json(io::json{{"generators", io::json::array()}}); }) == "group.degree");
  CHECK(invariant_of([] { io::read_json_file("/nonexistent/file.json"); }) == "file.readable");
  CHECK_THROWS_AS(io::group_from_json(io::json{{"degree", 6}, {"generators", {{1, 0, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 0}}}}, 100),
                  ResourceError);
}

TEST_CASE("laurent and character json") {
  LaurentPoly p{{-2, 1}, {3, -4}};
  CHECK(io::laurent_to_json(p).dump() == R"({"-2":1,"3":-4})");
  CHECK(io::laurent_from_json(io::laurent_to_json(p)) == p);
  CHECK(invariant_of([] { io::laurent_from_json(io::json{{"x", 1}}); }) == "laurent.shape");
  GradedChar g;
  g.add(0, Weight{0, 0}, 1);
  g.add(-1, Weight{1, 1}, 2);
  io::AliasMap none;
  CHECK(io::graded_from_json(io::graded_to_json(g), none) == g);
  CHECK(io::graded_to_json(g).dump() ==
        R"({"char":[{"deg":-1,"weights":[{"w":"g1r1","m":2}]},{"deg":0,"weights":[{"w":"g0r0","m":1}]}]})");
}

TEST_CASE("cyclotomic json") {
  Cyclotomic z = Cyclotomic::root_of_unity(5, 2) * Rational(3, 7) + Cyclotomic(1);
  CHECK(io::cyclotomic_from_json(io::cyclotomic_to_json(z)) == z);
}

TEST_CASE("aliases") {
  auto dg = io::load_double_group_file(data_dir() / "s3.json", {});
  io::AliasMap a = io::aliases_from_json(io::read_json_file(data_dir() / "s3_aliases.json"), *dg);
  CHECK(a.resolve("(σ,-)") == Weight{1, 1});
  CHECK(a.resolve("g2r0") == Weight{2, 0});
  CHECK(a.name(Weight{0, 2}) == "(e,ρ)");
  CHECK(invariant_of([&] { a.resolve("(x,y)"); }) == "weight.label");
  CHECK(io::aliases_to_json(a) == io::read_json_file(data_dir() / "s3_aliases.json"));
  CHECK(io::applied("ch M", "(e,+)") == "ch M(e,+)");
  CHECK(io::applied("ch M", "g0r0") == "ch M(g0r0)");
}

TEST_CASE("profile and simples round trip") {
  auto d = taft::build_profile_and_table(3);
  const io::json pj = io::profile_to_json(d.profile, io::group_to_json(d.dg->group()));
  NicholsProfile back = io::profile_from_json(pj, fs::path("."), {});
  CHECK(back.components() == d.profile.components());
  const io::json sj = io::simples_to_json(d.table);
  CHECK(io::simples_from_json(sj, *d.dg) == d.table);
  CHECK(io::dump(io::simples_to_json(io::simples_from_json(sj, *d.dg))) == io::dump(sj));

  io::json bad = pj;
  bad["components"][0]["weights"][0]["w"] = "g1r1";
  CHECK(invariant_of([&] { io::profile_from_json(bad, fs::path("."), {}); }) == "profile.component0_is_epsilon");
  bad = pj;
  bad["components"].erase(1);
  CHECK(invariant_of([&] { io::profile_from_json(bad, fs::path("."), {}); }) == "profile.degrees");
}

TEST_CASE("FK3 fixtures load") {
  io::LoadOptions opts;
  const io::json pj = io::read_json_file(data_dir() / "fk3_profile.json");
  NicholsProfile p = io::profile_from_json(pj, data_dir(), opts);
  CHECK(p.dim_B() == 12);
  io::AliasMap a = io::aliases_from_json(io::read_json_file(data_dir() / "s3_aliases.json"), p.dg());
  LaurentMatrix m = io::decomposition_from_json(io::read_json_file(data_dir() / "fk3_verma_simples.json"), a);
  CHECK(m.size() == 8);
  CHECK(entry(m, Weight{1, 1}, Weight{1, 1}) == LaurentPoly(2));
  CHECK(io::decomposition_from_json(io::decomposition_to_json(m, false)) == m);
}

TEST_CASE("report round trip and determinism") {
  auto d = taft::build_profile_and_table(3);
  BGGReport r = bgg_matrices(d.profile, d.table);
  io::AliasMap names;
  for (const auto& [w, s] : d.aliases()) names.set(w, s);
  const CheckReport checks = verify_report(r);
  const std::string first = io::dump(io::report_to_json(r, names, checks));
  BGGReport again = bgg_matrices(d.profile, d.table);
  CHECK(io::dump(io::report_to_json(again, names, verify_report(again))) == first);
  BGGReport loaded = io::report_from_json(io::json::parse(first), d.profile);
  CHECK(io::same_report_data(loaded, r));
  const std::string text = io::render_report_text(r, names, checks);
  CHECK(text.find("ch P(2,1) = ch M(2,1) + t^2 ch M(0,2)\n") != std::string::npos);
}

TEST_CASE("rendering") {
  io::AliasMap none;
  std::map<Weight, LaurentPoly> c{{Weight{0, 0}, 2}, {Weight{1, 0}, LaurentPoly{{1, 1}, {0, 1}}}, {Weight{2, 0}, -1}};
  CHECK(io::render_combination(c, "ch M", none, Weight{1, 0}) ==
        "(t + 1) ch M(g1r0) + 2 ch M(g0r0) - ch M(g2r0)");
  CHECK(io::render_combination({}, "Ind", none) == "0");
  CHECK(io::render_combination({{Weight{0, 0}, LaurentPoly::monomial(-2)}}, "Ind", none) == "t^-2 Ind(g0r0)");
}

TEST_CASE("table cache") {
  const fs::path dir = scratch("cache");
  io::LoadOptions opts;
  opts.cache_dir = dir;
  const io::json g = io::read_json_file(data_dir() / "s3.json");
  auto first = io::load_double_group(g, opts);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  auto second = io::load_double_group(g, opts);
  auto fresh = io::load_double_group(g, {});
  for (const auto& a : fresh->weights()) {
    for (const auto& b : fresh->weights()) CHECK(second->fusion(a, b) == fresh->fusion(a, b));
  }
  CHECK(io::content_hash(g) == io::content_hash(io::read_json_file(data_dir() / "s3.json")));
  CHECK(io::content_hash(g) != io::content_hash(io::read_json_file(data_dir() / "c3.json")));
}

TEST_CASE("cache directory precedence") {
  ::setenv("BGGKIT_CACHE_DIR", "/tmp/from-env", 1);
  CHECK(io::resolve_cache_dir(std::string("/tmp/from-flag")) == fs::path("/tmp/from-flag"));
  CHECK(io::resolve_cache_dir(std::nullopt) == fs::path("/tmp/from-env"));
  ::unsetenv("BGGKIT_CACHE_DIR");
  CHECK_FALSE(io::resolve_cache_dir(std::nullopt).has_value());
}

}
