#include "doctest.h"
#include "support.hpp"
#include "wedgedeg/catalog.hpp"
#include "wedgedeg/error.hpp"
#include "wedgedeg/wedge.hpp"

using namespace wedgedeg;

namespace {

RealizedGroup dihedral_with_generators(std::uint64_t n) {
  const Presentation p = dihedral_presentation(n);
  return coset_action_to_group(todd_coxeter(p, {}), p);
}

FiniteGroup klein() { return parse_group_spec("Z2xZ2"); }

}  // namespace

TEST_CASE("pair presentations") {
  SUBCASE("trivial group") {
    auto s = exterior_square(FiniteGroup());
    CHECK(s.ambient_order() == 1);
    CHECK(s.pairing_group().order() == 1);
  }
  SUBCASE("tau of Z2 has order 4") {
    auto s = exterior_square(cyclic_group(2));
    CHECK(s.ambient_order() == 4);
    CHECK(s.pairing_group().order() == 1);
  }
  SUBCASE("nu of Z2 has order 8") {
    auto s = tensor_square(cyclic_group(2));
    CHECK(s.ambient_order() == 8);
    CHECK(s.pairing_group().order() == 2);
  }
  SUBCASE("generator count and exterior relators") {
    auto g = cyclic_group(3);
    auto t = build_pair_presentation(g, PairingMode::tensor);
    auto e = build_pair_presentation(g, PairingMode::exterior);
    CHECK(t.generator_count() == 6);
    CHECK(e.relators().size() > t.relators().size());
  }
  SUBCASE("size cap") {
    CHECK_THROWS_AS(build_pair_presentation(cyclic_group(40), PairingMode::exterior),
                    GroupTooLarge);
    CHECK_THROWS_AS(exterior_square(cyclic_group(40)), GroupTooLarge);
    PairOptions o;
    o.group_cap = 4;
    CHECK_THROWS_AS(exterior_square(cyclic_group(5), o), GroupTooLarge);
  }
  SUBCASE("coset limit propagates") {
    PairOptions o;
    o.coset_limit = 50;
    CHECK_THROWS_AS(exterior_square(parse_group_spec("D8"), o), LimitExceeded);
  }
}

TEST_CASE("exterior square orders") {
  for (std::uint64_t n = 1; n <= 8; ++n)
    CHECK(exterior_square(cyclic_group(n)).pairing_group().order() == 1);
  auto d8 = exterior_square(parse_group_spec("D8"));
  CHECK(d8.pairing_group().order() == 4);
  CHECK(d8.ambient_order() == 64 * 4);
  CHECK(exterior_square(klein()).pairing_group().order() == 2);
}

TEST_CASE("wedge pairing") {
  SUBCASE("x wedge x is trivial") {
    for (const char* spec : {"D8", "Q8", "Z2xZ2", "A4"}) {
      auto g = parse_group_spec(spec);
      auto s = exterior_square(g);
      for (Element x = 0; x < g.order(); ++x) CHECK(wedge(s, x, x) == 0);
    }
  }
  SUBCASE("in Q8 the wedge vanishes exactly on commuting pairs") {
    auto g = parse_group_spec("Q8");
    auto s = exterior_square(g);
    for (Element x = 0; x < 8; ++x)
      for (Element y = 0; y < 8; ++y)
        CHECK((wedge(s, x, y) == 0) == (g.mul(x, y) == g.mul(y, x)));
  }
  SUBCASE("generators of the Klein group have a nontrivial wedge") {
    auto g = klein();
    auto s = exterior_square(g);
    // Elements 1 and 2 are (0,1) and (1,0) in the product numbering.
    CHECK(wedge(s, 1, 2) != 0);
    CHECK(wedge(s, 2, 1) != 0);
  }
  SUBCASE("wrong mode") {
    auto s = tensor_square(cyclic_group(2));
    CHECK_THROWS_AS(wedge(s, 0, 1), WrongMode);
    CHECK_THROWS_AS(schur_multiplier(s), WrongMode);
    CHECK_THROWS_AS(exterior_center(s), WrongMode);
    CHECK_THROWS_AS(exterior_centralizer(s, 0), WrongMode);
    CHECK_THROWS_AS(nabla_and_j2(exterior_square(cyclic_group(2))), WrongMode);
  }
}

TEST_CASE("schur multiplier") {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    auto s = exterior_square(quaternion_from_presentation(n));
    CHECK(schur_multiplier(s).multiplier_order == 1);
  }
  auto k = schur_multiplier(exterior_square(klein()));
  CHECK(k.multiplier_order == 2);
  CHECK(k.abelian_invariants == std::vector<std::uint64_t>{2});
  CHECK(schur_multiplier(exterior_square(parse_group_spec("D8"))).multiplier_order == 2);
  CHECK(schur_multiplier(exterior_square(parse_group_spec("Z2xZ2xZ2")))
            .abelian_invariants == std::vector<std::uint64_t>{2, 2, 2});
}

TEST_CASE("exterior centralizers of dihedral groups") {
  SUBCASE("rotation in D8") {
    auto r = dihedral_with_generators(4);
    auto s = exterior_square(r.group);
    const Element b = r.generator_images[1];
    const Element gens[] = {b};
    auto c = exterior_centralizer(s, b);
    CHECK(c.size() == 4);
    CHECK(c == generate_subgroup(r.group, gens));
  }
  SUBCASE("every nontrivial rotation, D4 to D16") {
    for (std::uint64_t n = 2; n <= 8; ++n) {
      CAPTURE(n);
      auto r = dihedral_with_generators(n);
      auto s = exterior_square(r.group);
      const Element b = r.generator_images[1];
      const Element gens[] = {b};
      const auto rotations = generate_subgroup(r.group, gens);
      for (Element x = b; x != 0; x = r.group.mul(x, b))
        CHECK(exterior_centralizer(s, x) == rotations);
      CHECK(exterior_centralizer(s, 0) == ElementSet::whole(r.group));
      CHECK(exterior_center(s).is_trivial());
      CHECK(is_capable(s));
    }
  }
}

TEST_CASE("capability") {
  CHECK(is_capable(exterior_square(parse_group_spec("D8"))));
  CHECK(is_capable(exterior_square(klein())));
  CHECK_FALSE(is_capable(exterior_square(parse_group_spec("Q8"))));
  CHECK(exterior_center(exterior_square(parse_group_spec("Q8"))).size() == 2);
  for (std::uint64_t n = 2; n <= 12; ++n)
    CHECK_FALSE(is_capable(exterior_square(cyclic_group(n))));
  CHECK(is_capable(exterior_square(FiniteGroup())));
}

TEST_CASE("nabla and J2") {
  SUBCASE("Z2") {
    auto s = tensor_square(cyclic_group(2));
    auto nj = nabla_and_j2(s);
    CHECK(nj.nabla.size() == 2);
    CHECK(nj.j2.size() == 2);
  }
  SUBCASE("trivial group") {
    auto nj = nabla_and_j2(tensor_square(FiniteGroup()));
    CHECK(nj.nabla.is_trivial());
    CHECK(nj.j2.is_trivial());
  }
  SUBCASE("|J2| = |nabla| |M|") {
    for (const char* spec :
         {"Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z3xZ3", "S3", "D8", "Q8", "D10", "A4"}) {
      CAPTURE(spec);
      auto g = parse_group_spec(spec);
      auto t = tensor_square(g);
      auto e = exterior_square(g);
      auto nj = nabla_and_j2(t);
      CHECK(nj.nabla.is_subset_of(nj.j2));
      CHECK(nj.j2.size() == nj.nabla.size() * schur_multiplier(e).multiplier_order);
      CHECK(t.pairing_group().order() == nj.nabla.size() * e.pairing_group().order());
    }
  }
}

TEST_CASE("ambient group structure") {
  auto g = parse_group_spec("S3");
  auto s = exterior_square(g);
  auto amb = s.ambient_group();
  CHECK(amb.order() == s.ambient_order());
  CHECK(amb.order() == 36 * s.pairing_group().order());
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      const auto l = [&](Element e) { return static_cast<Element>(s.left_embed()[e]); };
      const auto r = [&](Element e) { return static_cast<Element>(s.right_embed()[e]); };
      CHECK(amb.mul(l(x), l(y)) == l(g.mul(x, y)));
      CHECK(amb.mul(r(x), r(y)) == r(g.mul(x, y)));
      CHECK(s.ambient_projection()[l(x)] == x);
      CHECK(s.ambient_projection()[r(x)] == x);
      // [left(x), right(y)] computed in the materialized ambient group.
      const Element c = amb.commutator(l(x), r(y));
      CHECK(static_cast<Element>(s.pairing_in_ambient()[s.pair(x, y)]) == c);
    }
  CHECK_THROWS_AS(exterior_square(parse_group_spec("D8")).ambient_group(100), TooLarge);
}

TEST_CASE("wedge invariants on the catalog") {
  for (const auto& spec : testsupport::catalog_up_to(16)) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    const TensorStructure s = exterior_square(g);
    const FiniteGroup& w = s.pairing_group();
    const SchurData m = schur_multiplier(s);
    const ElementSet z = center(g), zw = exterior_center(s);

    CHECK(w.order() == m.multiplier_order * derived_subgroup(g).size());
    CHECK(zw.is_subset_of(z));
    for (Element x : m.multiplier.elements())
      for (Element p = 0; p < w.order(); ++p)
        CHECK(w.mul(x, p) == w.mul(p, x));

    for (Element x = 0; x < g.order(); ++x) {
      const ElementSet cw = exterior_centralizer(s, x);
      CHECK(cw.is_subgroup());
      CHECK(cw.is_subset_of(centralizer(g, x)));
      if (m.multiplier_order == 1) CHECK(cw == centralizer(g, x));
      for (Element y = 0; y < g.order(); ++y) {
        const Element xy = s.pair(x, y);
        CHECK(s.pair(y, x) == w.inv(xy));
        CHECK(s.project(xy) == g.commutator(x, y));
        CHECK((xy == 0) == cw.contains(y));
        if (g.mul(x, y) == g.mul(y, x)) CHECK(m.multiplier.contains(xy));
      }
    }
    for (Element x = 0; x < g.order(); x += 3)
      for (Element h = 0; h < g.order(); ++h)
        CHECK(exterior_centralizer(s, g.conj(x, h)) ==
              conjugate(exterior_centralizer(s, x), h));
  }
}
