#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace wedgedeg {

using Element = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

// A permutation of {0..degree-1} given by its image array. Products are
// read left to right: (p*q)[i] = q[p[i]].
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

class ElementSet;

// A finite group stored as a full multiplication table over dense element
// indices. The identity is always index 0. Copies share the table, so
// passing groups by value is cheap.
class FiniteGroup {
 public:
  // The trivial group.
  FiniteGroup();

  // Validates the table (Latin square, identity, inverses, associativity)
  // and relabels so that the identity becomes index 0 by swapping it with
  // the element that held index 0. Throws NotAGroup.
  static FiniteGroup from_cayley_table(
      const std::vector<std::vector<Element>>& table, std::string label = {});

  // Breadth-first closure of the generators under right multiplication.
  // Element 0 is the identity; the rest are numbered in discovery order.
  // Throws SizeLimitExceeded past `cap` elements, InputError on a
  // malformed permutation.
  static FiniteGroup from_permutation_generators(
      std::size_t degree, const std::vector<Permutation>& generators,
      std::size_t cap = kDefaultClosureCap, std::string label = {});

  // Builds from a table known to be a group with identity 0. Only cheap
  // structural checks are made; use validate() for the full battery.
  static FiniteGroup from_trusted_table(std::size_t order,
                                        std::vector<Element> table,
                                        std::string label = {});

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return d_->inverse[a]; }
  // x^g = g^-1 x g
  Element conj(Element x, Element g) const { return mul(mul(inv(g), x), g); }
  // [a,b] = a b a^-1 b^-1
  Element commutator(Element a, Element b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  Element pow(Element x, std::uint64_t k) const;
  std::size_t element_order(Element x) const;

  bool is_abelian() const;
  bool is_cyclic() const;

  // A generating set found greedily (or the given permutation generators).
  const std::vector<Element>& generators() const { return d_->generators; }
  std::span<const Element> row(Element a) const {
    return {table_ + a * order_, order_};
  }

  const std::string& label() const { return d_->label; }
  FiniteGroup with_label(std::string label) const;

  // Full check of the group axioms. Throws NotAGroup naming the witness.
  void validate() const;

  bool same_as(const FiniteGroup& other) const { return d_ == other.d_; }

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<Element> generators;
    std::string label;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d);

  std::shared_ptr<const Data> d_;
  // Cached from *d_ for the hot path.
  std::size_t order_ = 1;
  const Element* table_ = nullptr;
};

// A subset of a group's elements. Carries its parent group by value.
class ElementSet {
 public:
  ElementSet(FiniteGroup parent, Bitset members);
  static ElementSet empty(const FiniteGroup& g);
  static ElementSet whole(const FiniteGroup& g);
  static ElementSet trivial(const FiniteGroup& g);
  static ElementSet of(const FiniteGroup& g, std::span<const Element> elems);

  const FiniteGroup& parent() const { return parent_; }
  const Bitset& bits() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(Element x) const { return members_.test(x); }
  std::vector<Element> elements() const;

  bool is_subgroup() const;
  bool is_normal() const;
  bool is_trivial() const { return size() == 1 && contains(0); }
  bool is_subset_of(const ElementSet& other) const {
    return members_.is_subset_of(other.members_);
  }

  ElementSet operator&(const ElementSet& other) const;
  bool operator==(const ElementSet& other) const {
    return members_ == other.members_;
  }

 private:
  FiniteGroup parent_;
  Bitset members_;
};

struct ConjugacyClasses {
  // Minimal element index of each class, ascending.
  std::vector<Element> representatives;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> sizes;
  // conjugator[x] = g with representatives[class_of[x]]^g = x.
  std::vector<Element> conjugator;

  std::size_t count() const { return representatives.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

ElementSet generate_subgroup(const FiniteGroup& g,
                             std::span<const Element> generators);
ElementSet normal_closure(const FiniteGroup& g, const ElementSet& s);

ElementSet centralizer(const FiniteGroup& g, Element x);
ElementSet center(const FiniteGroup& g);
ElementSet derived_subgroup(const FiniteGroup& g);
// { g^-1 s g : s in s }
ElementSet conjugate(const ElementSet& s, Element g);

// Throws NotASubgroup / NotNormal when `n` is not a normal subgroup.
FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n);
// Element (a, b) has index a * |h| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
std::uint64_t smallest_prime_divisor(const FiniteGroup& g);
std::uint64_t smallest_prime_divisor(std::uint64_t n);

// Every normal subgroup, ordered by size then by bit pattern.
std::vector<ElementSet> normal_subgroups(const FiniteGroup& g);

// Invariant factors d1 | d2 | ... of an abelian group, trivial factors
// dropped. Throws InputError if g is not abelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);
// Same, for the subgroup `s` (which must be an abelian subgroup).
std::vector<std::uint64_t> abelian_invariants(const ElementSet& s);

// |g| = p^2 and every non-identity element has order p.
bool is_elementary_abelian_rank2(const FiniteGroup& g, std::uint64_t p);

// Attempts to extend generator images to an isomorphism g -> h. Returns
// the element map when it is well defined and bijective.
std::optional<std::vector<Element>> isomorphism_from_generators(
    const FiniteGroup& g, std::span<const Element> g_gens,
    const FiniteGroup& h, std::span<const Element> h_gens);

}  // namespace wedgedeg
