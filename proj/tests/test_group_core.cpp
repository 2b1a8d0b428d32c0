#include <algorithm>
#include <set>

#include "doctest.h"

#include "bggkit/char_table.hpp"
#include "bggkit/errors.hpp"
#include "bggkit/group.hpp"

using namespace bggkit;

namespace {

FiniteGroup make(int degree, std::vector<std::vector<int>> gens) {
  std::vector<Perm> ps;
  for (auto& g : gens) ps.emplace_back(std::move(g));
  return close_group(degree, ps);
}

// x ~ y iff some z has z x z^-1 = y, scanning all z
std::vector<std::set<int>> brute_classes(const FiniteGroup& g) {
  std::vector<std::set<int>> out;
  std::vector<bool> done(g.order(), false);
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    if (done[static_cast<std::size_t>(a)]) continue;
    std::set<int> cls;
    for (int z = 0; z < static_cast<int>(g.order()); ++z) cls.insert(g.conjugate(a, z));
    for (int x : cls) done[static_cast<std::size_t>(x)] = true;
    out.push_back(cls);
  }
  return out;
}

std::vector<std::int64_t> sorted_degrees(const OrdinaryCharTable& t) {
  auto d = t.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("group_core") {

TEST_CASE("permutations") {
  Perm p({1, 2, 0});
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK((p * Perm({1, 0, 2})) == Perm({2, 1, 0}));
  CHECK_THROWS_AS(Perm({0, 0, 1}), InputError);
  CHECK(Perm({1, 0, 3, 4, 2}).order() == 6);
}

TEST_CASE("closure and element order") {
  FiniteGroup s3 = make(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(s3.element(0).is_identity());
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  CHECK(s3.exponent() == 6);
  CHECK(make(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}).order() == 24);
  CHECK(make(1, {}).order() == 1);
  CHECK_THROWS_AS(make(3, {{1, 0}}), InputError);
  std::vector<Perm> big{Perm({1, 0, 2, 3, 4, 5, 6}), Perm({1, 2, 3, 4, 5, 6, 0})};
  CHECK_THROWS_AS(close_group(7, big, 1000), ResourceError);
}

TEST_CASE("conjugacy classes agree with a full scan") {
  for (const auto& g : {make(3, {{1, 0, 2}, {1, 2, 0}}), make(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}),
                        make(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}), make(5, {{1, 2, 0, 3, 4}, {0, 2, 3, 4, 1}})}) {
    ConjugacyData cd = conjugacy_classes(g);
    auto brute = brute_classes(g);
    REQUIRE(cd.size() == brute.size());
    for (std::size_t c = 0; c < cd.size(); ++c) {
      CHECK(std::set<int>(cd.classes[c].members.begin(), cd.classes[c].members.end()) == brute[c]);
      CHECK(cd.classes[c].representative == *brute[c].begin());
      const int inv = g.inverse(cd.classes[c].representative);
      CHECK(cd.inverse_class[c] == cd.class_of[static_cast<std::size_t>(inv)]);
    }
  }
}

TEST_CASE("centralizers") {
  FiniteGroup s4 = make(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
  FiniteGroup c = centralizer(s4, Perm({1, 0, 2, 3}));
  CHECK(c.order() == 4);
  for (const auto& x : c.elements()) CHECK((x * Perm({1, 0, 2, 3})) == (Perm({1, 0, 2, 3}) * x));
  CHECK(close_group(4, c.generators()).order() == 4);
  CHECK_THROWS_AS(centralizer(s4, Perm({1, 0, 2})), InputError);
}

TEST_CASE("S3 character table matches the textbook table") {
  FiniteGroup s3 = make(3, {{1, 0, 2}, {1, 2, 0}});
  OrdinaryCharTable t = character_table(s3);
  REQUIRE(t.size() == 3);
  // classes: identity, transpositions, 3-cycles
  CHECK(t.classes.class_size(1) == 3);
  CHECK(t.classes.class_size(2) == 2);
  using V = std::vector<Cyclotomic>;
  CHECK(t.rows[0] == V{1, 1, 1});
  CHECK(t.rows[1] == V{1, -1, 1});
  CHECK(t.rows[2] == V{2, 0, -1});
}

TEST_CASE("cyclic tables are ordered by exponent") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
    FiniteGroup g = make(n, {c});
    OrdinaryCharTable t = character_table(g);
    REQUIRE(t.size() == static_cast<std::size_t>(n));
    const int gen = t.classes.class_of[static_cast<std::size_t>(*g.index_of(Perm(c)))];
    for (int s = 0; s < n; ++s) CHECK(t.value(s, gen) == Cyclotomic::root_of_unity(n, s));
  }
}

TEST_CASE("orthogonality and degrees for larger groups") {
  struct Case {
    FiniteGroup g;
    std::vector<std::int64_t> degrees;
  };
  std::vector<Case> cases{
      {make(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}), {1, 1, 2, 3, 3}},
      {make(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}), {1, 1, 1, 1, 2}},
      {make(5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}), {1, 3, 3, 4, 5}},
      // quaternion group in its regular representation
      {make(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}), {1, 1, 1, 1, 2}},
  };
  for (auto& c : cases) {
    OrdinaryCharTable t = character_table(c.g);
    CHECK(sorted_degrees(t) == c.degrees);
    CHECK(check_orthogonality(t));
    CHECK(std::is_sorted(t.degrees.begin(), t.degrees.end()));
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.rows[i][0] == Cyclotomic(t.degrees[i]));
  }
}

TEST_CASE("dixon prime") {
  auto p = detail::dixon_prime(6, 10);
  CHECK(p == 13);
  CHECK(detail::dixon_prime(4, 100) == 101);
}

}
