#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "wedgedeg/catalog.hpp"
#include "wedgedeg/error.hpp"
#include "wedgedeg/group.hpp"

using namespace wedgedeg;

namespace {

FiniteGroup s3() {
  return FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
}

FiniteGroup d8() {
  return FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {2, 1, 0, 3}});
}

std::vector<std::vector<Element>> cyclic_table(std::size_t n) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return t;
}

}  // namespace

TEST_CASE("cayley table construction") {
  SUBCASE("one by one table is the trivial group") {
    auto g = FiniteGroup::from_cayley_table({{0}});
    CHECK(g.order() == 1);
  }
  SUBCASE("addition table of Z6") {
    auto g = FiniteGroup::from_cayley_table(cyclic_table(6));
    CHECK(g.order() == 6);
    CHECK(g.is_abelian());
    CHECK(g.is_cyclic());
  }
  SUBCASE("row that is not a permutation") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}), NotAGroup);
  }
  SUBCASE("identity not at index 0 is moved there") {
    // Z3 with 2 as identity.
    auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    CHECK(g.order() == 3);
    CHECK(g.mul(0, 1) == 1);
    g.validate();
  }
  SUBCASE("latin square that is not associative") {
    // A loop of order 5 that is not a group.
    std::vector<std::vector<Element>> t = {{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(t), NotAGroup);
  }
  SUBCASE("no identity") {
    // x * y = -x - y mod 3
    CHECK_THROWS_AS(
        FiniteGroup::from_cayley_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}),
        NotAGroup);
  }
  SUBCASE("entry out of range") {
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 2}, {1, 0}}), NotAGroup);
  }
}

TEST_CASE("permutation closure") {
  SUBCASE("no generators gives the trivial group") {
    auto g = FiniteGroup::from_permutation_generators(3, {});
    CHECK(g.order() == 1);
  }
  SUBCASE("transposition and 3-cycle generate a group of order 6") {
    auto g = s3();
    CHECK(g.order() == 6);
    CHECK(conjugacy_classes(g).count() == 3);
  }
  SUBCASE("4-cycle and a reflection generate D8") {
    auto g = d8();
    CHECK(g.order() == 8);
    CHECK_FALSE(g.is_abelian());
  }
  SUBCASE("closure cap") {
    CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(
                        5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 100),
                    SizeLimitExceeded);
  }
  SUBCASE("invalid permutation") {
    CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(3, {{0, 0, 1}}),
                    InputError);
  }
  SUBCASE("element 0 is the identity") {
    auto g = s3();
    for (Element x = 0; x < g.order(); ++x) {
      CHECK(g.mul(0, x) == x);
      CHECK(g.mul(x, 0) == x);
    }
  }
}

TEST_CASE("conjugacy classes") {
  SUBCASE("abelian groups have singleton classes") {
    auto g = cyclic_group(7);
    auto cc = conjugacy_classes(g);
    CHECK(cc.count() == 7);
    for (auto s : cc.sizes) CHECK(s == 1);
  }
  SUBCASE("S3 has classes of sizes 1, 3, 2") {
    auto cc = conjugacy_classes(s3());
    auto sizes = cc.sizes;
    CHECK(sizes.front() == 1);
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  }
  SUBCASE("D8 has 5 classes") { CHECK(conjugacy_classes(d8()).count() == 5); }
  SUBCASE("representatives are minimal and conjugators map onto members") {
    auto g = symmetric_group(4);
    auto cc = conjugacy_classes(g);
    for (std::size_t k = 0; k < cc.count(); ++k)
      CHECK(cc.class_of[cc.representatives[k]] == k);
    for (Element x = 0; x < g.order(); ++x) {
      const Element r = cc.representatives[cc.class_of[x]];
      CHECK(r <= x);
      CHECK(g.conj(r, cc.conjugator[x]) == x);
    }
  }
}

TEST_CASE("centralizer, center and derived subgroup") {
  auto g = d8();
  CHECK(center(g).size() == 2);
  CHECK(derived_subgroup(g).size() == 2);
  CHECK(center(s3()).is_trivial());
  auto z = cyclic_group(6);
  CHECK(center(z) == ElementSet::whole(z));
  for (Element x = 0; x < g.order(); ++x) {
    auto c = centralizer(g, x);
    CHECK(c.is_subgroup());
    CHECK(c.contains(x));
  }
  CHECK(g.commutator(1, 2) == g.mul(g.mul(1, 2), g.mul(g.inv(1), g.inv(2))));
}

TEST_CASE("quotients, products and primes") {
  auto g = d8();
  SUBCASE("D8 modulo its center is the Klein four-group") {
    auto q = quotient(g, center(g));
    CHECK(q.order() == 4);
    for (Element x = 1; x < q.order(); ++x) CHECK(q.element_order(x) == 2);
    CHECK(is_elementary_abelian_rank2(q, 2));
  }
  SUBCASE("quotient by the whole group is trivial") {
    CHECK(quotient(g, ElementSet::whole(g)).order() == 1);
  }
  SUBCASE("non-normal subgroup") {
    auto h = s3();
    Element t = 0;
    for (Element x = 1; x < h.order(); ++x)
      if (h.element_order(x) == 2) t = x;
    const Element gens[] = {t};
    CHECK_THROWS_AS(quotient(h, generate_subgroup(h, gens)), NotNormal);
  }
  SUBCASE("not a subgroup") {
    const Element one[] = {1};
    CHECK_THROWS_AS(quotient(g, ElementSet::of(g, one)), NotASubgroup);
  }
  SUBCASE("smallest primes") {
    CHECK(smallest_prime_divisor(s3()) == 2);
    CHECK(smallest_prime_divisor(cyclic_group(15)) == 3);
    CHECK_THROWS_AS(smallest_prime_divisor(FiniteGroup()), TrivialGroupHasNoPrime);
  }
  SUBCASE("direct product order") {
    CHECK(direct_product(cyclic_group(3), g).order() == 24);
  }
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(cyclic_group(12)) == std::vector<std::uint64_t>{12});
  CHECK(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(4))) ==
        std::vector<std::uint64_t>{2, 4});
  CHECK(abelian_invariants(direct_product(cyclic_group(6), cyclic_group(4))) ==
        std::vector<std::uint64_t>{2, 12});
  CHECK(abelian_invariants(FiniteGroup()).empty());
  CHECK_THROWS_AS(abelian_invariants(s3()), InputError);
}

TEST_CASE("normal subgroups of D8") {
  auto ns = normal_subgroups(d8());
  CHECK(ns.size() == 6);
  for (const auto& n : ns) CHECK(n.is_normal());
}

TEST_CASE("structural invariants on the catalog") {
  for (const auto& spec : testsupport::catalog()) {
    CAPTURE(spec);
    const FiniteGroup g = parse_group_spec(spec);
    g.validate();
    const auto cc = conjugacy_classes(g);
    std::size_t total = 0, singletons = 0;
    for (auto s : cc.sizes) {
      total += s;
      singletons += s == 1;
    }
    CHECK(total == g.order());
    CHECK(singletons == center(g).size());
    for (Element x = 0; x < g.order(); ++x)
      CHECK(cc.sizes[cc.class_of[x]] * centralizer(g, x).size() == g.order());
    const auto derived = derived_subgroup(g);
    CHECK(derived.is_normal());
    CHECK(quotient(g, derived).is_abelian());
    for (const auto& n : normal_subgroups(g))
      CHECK(quotient(g, n).order() * n.size() == g.order());
    CHECK(direct_product(g, cyclic_group(2)).order() == 2 * g.order());
  }
}
