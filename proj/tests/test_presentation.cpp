#include <cstdlib>

#include "doctest.h"
#include "wedgedeg/catalog.hpp"
#include "wedgedeg/error.hpp"
#include "wedgedeg/presentation.hpp"
#include "wedgedeg/wedge.hpp"

using namespace wedgedeg;

namespace {

// Every relator fixes every coset.
bool relators_act_trivially(const CosetTable& t, const Presentation& p) {
  for (std::size_t c = 0; c < t.coset_count(); ++c)
    for (const Word& r : p.relators())
      if (t.apply(c, r) != static_cast<std::int32_t>(c)) return false;
  return true;
}

// The permutation group generated by the columns of a complete table.
FiniteGroup column_group(const CosetTable& t) {
  std::vector<Permutation> gens;
  for (std::size_t g = 0; g < t.generator_count(); ++g) {
    Permutation p(t.coset_count());
    for (std::size_t c = 0; c < t.coset_count(); ++c)
      p[c] = static_cast<std::uint32_t>(t.entry(c, 2 * g));
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutation_generators(t.coset_count(), gens);
}

const Presentation kS3(2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});

}  // namespace

TEST_CASE("words") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(free_reduce({1, -1}).empty());
  CHECK(inverse_word({1, 2, -3}) == Word{3, -2, -1});
  Presentation p(2, {{1, -1}, {1, 2, -2}});
  CHECK(p.relators().size() == 1);
  CHECK(p.relators()[0] == Word{1});
  CHECK_THROWS_AS(Presentation(1, {{2}}), InputError);
  CHECK_THROWS_AS(Presentation(1, {{0}}), InputError);
}

TEST_CASE("coset enumeration examples") {
  const Presentation c5(1, {{1, 1, 1, 1, 1}});
  SUBCASE("cyclic of order 5") {
    auto t = todd_coxeter(c5, {});
    CHECK(t.complete());
    CHECK(t.coset_count() == 5);
  }
  SUBCASE("whole group as subgroup gives one coset") {
    auto t = todd_coxeter(c5, {{1}});
    CHECK(t.coset_count() == 1);
  }
  SUBCASE("S3 presentation gives 6 cosets isomorphic to S3") {
    auto t = todd_coxeter(kS3, {});
    CHECK(t.coset_count() == 6);
    auto r = coset_action_to_group(t, kS3);
    auto s3 = FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
    // a -> transposition, b -> 3-cycle: ab = (0 1)(0 1 2) has order 2.
    const Element target[] = {1, 2};
    REQUIRE(s3.mul(1, 2) != s3.mul(2, 1));
    CHECK(isomorphism_from_generators(r.group, r.generator_images, s3, target));
  }
  SUBCASE("subgroup of index 3") {
    auto t = todd_coxeter(kS3, {{1}});
    CHECK(t.coset_count() == 3);
    CHECK(relators_act_trivially(t, kS3));
  }
  SUBCASE("zero generators") {
    auto t = todd_coxeter(Presentation(0, {}), {});
    CHECK(t.coset_count() == 1);
    CHECK(t.complete());
  }
  SUBCASE("infinite group hits the limit") {
    CHECK_THROWS_AS(todd_coxeter(Presentation(1, {}), {}, 100), LimitExceeded);
    CHECK_THROWS_AS(todd_coxeter(Presentation(2, {{1, 2, -1, -2}}), {}, 1000),
                    LimitExceeded);
  }
  SUBCASE("limit too small for a finite group") {
    CHECK_THROWS_AS(todd_coxeter(kS3, {}, 3), LimitExceeded);
  }
  SUBCASE("bad subgroup word") {
    CHECK_THROWS_AS(todd_coxeter(kS3, {{3}}), InputError);
  }
}

TEST_CASE("coset action to group") {
  SUBCASE("cyclic of order 5") {
    const Presentation c5(1, {{1, 1, 1, 1, 1}});
    auto r = coset_action_to_group(todd_coxeter(c5, {}), c5);
    CHECK(r.group.order() == 5);
    CHECK(r.group.is_cyclic());
  }
  SUBCASE("generator images of S3 do not commute") {
    auto r = coset_action_to_group(todd_coxeter(kS3, {}), kS3);
    CHECK(r.group.order() == 6);
    CHECK(r.group.mul(r.generator_images[0], r.generator_images[1]) !=
          r.group.mul(r.generator_images[1], r.generator_images[0]));
  }
  SUBCASE("eight cosets of a dihedral presentation match D8") {
    const Presentation p(2, {{1, 1, 1, 1}, {2, 2}, {1, 2, 1, 2}});
    auto t = todd_coxeter(p, {});
    CHECK(t.coset_count() == 8);
    auto r = coset_action_to_group(t, p);
    auto d8 =
        FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
    // The relabeling is fixed by generator words: a -> 4-cycle, b -> reflection.
    Element rot = 0, ref = 0;
    for (Element x = 0; x < d8.order(); ++x) {
      if (d8.element_order(x) == 4 && rot == 0) rot = x;
    }
    for (Element x = 1; x < d8.order(); ++x)
      if (d8.element_order(x) == 2 && d8.mul(rot, x) != d8.mul(x, rot) &&
          d8.element_order(d8.mul(rot, x)) == 2)
        ref = x;
    const Element target[] = {rot, ref};
    auto iso = isomorphism_from_generators(r.group, r.generator_images, d8, target);
    REQUIRE(iso);
    for (Element x = 0; x < 8; ++x)
      for (Element y = 0; y < 8; ++y)
        CHECK((*iso)[r.group.mul(x, y)] == d8.mul((*iso)[x], (*iso)[y]));
  }
  SUBCASE("incomplete table") {
    CosetTable t(1, 2, {1, -1, -1, 0}, false);
    CHECK_THROWS_AS(coset_action_to_group(t, Presentation(1, {})), IncompleteTable);
  }
  SUBCASE("coset tree words reach their cosets") {
    auto t = todd_coxeter(kS3, {});
    auto tree = coset_tree(t);
    for (std::size_t c = 0; c < t.coset_count(); ++c)
      CHECK(t.apply(0, word_for(tree, c)) == static_cast<std::int32_t>(c));
  }
}

TEST_CASE("enumeration invariants") {
  std::vector<Presentation> ps = {
      kS3,
      dihedral_presentation(6),
      quaternion_presentation(3),
      Presentation(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2, 1, 2, 1, 2},
                       {2, 3, 2, 3, 2, 3}, {1, 3, 1, 3}}),  // S4 as a Coxeter group
      build_pair_presentation(cyclic_group(3), PairingMode::exterior),
      build_pair_presentation(dihedral_permutation_model(4), PairingMode::exterior),
  };
  const std::size_t expected[] = {6, 12, 12, 24, 9, 256};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CAPTURE(i);
    EnumerationOptions with, without;
    without.lookahead = false;
    auto a = todd_coxeter(ps[i], {}, with);
    auto b = todd_coxeter(ps[i], {}, without);
    CHECK(a.complete());
    CHECK(a.coset_count() == expected[i]);
    CHECK(b.coset_count() == a.coset_count());
    CHECK(a.action() == b.action());
    CHECK(relators_act_trivially(a, ps[i]));
    CHECK(column_group(a).order() == a.coset_count());
    CHECK(coset_action_to_group(a, ps[i]).group.order() == a.coset_count());
  }
}

TEST_CASE("deterministic numbering") {
  auto a = todd_coxeter(quaternion_presentation(4), {});
  auto b = todd_coxeter(quaternion_presentation(4), {});
  CHECK(a.action() == b.action());
}

TEST_CASE("coset limit from the environment") {
  ::unsetenv("WEDGEDEG_COSET_LIMIT");
  CHECK(coset_limit_from_env() == kDefaultCosetLimit);
  ::setenv("WEDGEDEG_COSET_LIMIT", "5000", 1);
  CHECK(coset_limit_from_env() == 5000);
  ::setenv("WEDGEDEG_COSET_LIMIT", "lots", 1);
  CHECK_THROWS_AS(coset_limit_from_env(), InputError);
  ::setenv("WEDGEDEG_COSET_LIMIT", "0", 1);
  CHECK_THROWS_AS(coset_limit_from_env(), InputError);
  ::unsetenv("WEDGEDEG_COSET_LIMIT");
}
