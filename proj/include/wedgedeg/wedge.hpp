#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "wedgedeg/group.hpp"
#include "wedgedeg/presentation.hpp"

namespace wedgedeg {

enum class PairingMode { tensor, exterior };

inline constexpr std::size_t kDefaultPairGroupCap = 32;

struct PairOptions {
  std::size_t group_cap = kDefaultPairGroupCap;
  std::size_t coset_limit = kDefaultCosetLimit;
};

// Generator numbering of the pair presentation: the left copy of element x
// is generator x+1, the right copy is generator |G|+x+1.
inline Letter left_letter(Element x) { return static_cast<Letter>(x) + 1; }
inline Letter right_letter(std::size_t order, Element x) {
  return static_cast<Letter>(order + x) + 1;
}

// The group generated by two copies of G subject to the multiplication
// table of each copy and the conjugation compatibility
//   [g, h']^k = [g^k, (h^k)'] = [g, h']^(k')   for all g, h, k,
// plus [g, g'] = 1 in exterior mode. Its subgroup [G, G'] is the tensor
// square (tensor mode) or the exterior square (exterior mode).
// Throws GroupTooLarge when |G| exceeds the cap.
Presentation build_pair_presentation(const FiniteGroup& g, PairingMode mode,
                                     std::size_t cap = kDefaultPairGroupCap);

// The enumerated pair group together with the pairing (x, y) -> [x, y'].
//
// The ambient group can be large (|G|^2 |G wedge G|), so it is kept as the
// regular coset action rather than as a multiplication table. The pairing
// subgroup is small and is realized as its own FiniteGroup; `pair(x, y)` is
// an element of that group.
class TensorStructure {
 public:
  const FiniteGroup& group() const { return d_->group; }
  PairingMode mode() const { return d_->mode; }

  // Regular action of the ambient group; element c is coset c.
  const CosetTable& ambient() const { return d_->ambient; }
  std::size_t ambient_order() const { return d_->ambient.coset_count(); }
  const std::vector<std::int32_t>& left_embed() const { return d_->left; }
  const std::vector<std::int32_t>& right_embed() const { return d_->right; }
  // Image in G of each ambient element under the map sending both copies
  // onto G.
  const std::vector<Element>& ambient_projection() const {
    return d_->ambient_projection;
  }

  // [G, G'] as a concrete group, and the ambient element of each of its
  // elements.
  const FiniteGroup& pairing_group() const { return d_->pairing_group; }
  const std::vector<std::int32_t>& pairing_in_ambient() const {
    return d_->pairing_in_ambient;
  }
  // Image of a pairing element in G' (the commutator map).
  Element project(Element p) const { return d_->pairing_projection[p]; }

  // [left(x), right(y)] as an element of pairing_group().
  Element pair(Element x, Element y) const {
    return d_->pair_table[x * d_->group.order() + y];
  }

  // Materializes the ambient group's multiplication table. Intended for
  // small ambient groups (tests, cross-checks). Throws TooLarge.
  FiniteGroup ambient_group(std::size_t cap = 4096) const;

  // Exterior centralizers of the class representatives of group(),
  // computed once at construction (exterior mode only).
  const ConjugacyClasses& classes() const { return d_->classes; }
  const std::vector<ElementSet>& representative_exterior_centralizers() const {
    return d_->rep_centralizers;
  }

 private:
  friend TensorStructure build_tensor_structure(const FiniteGroup&,
                                                PairingMode, PairOptions);
  struct Data {
    FiniteGroup group;
    PairingMode mode;
    CosetTable ambient;
    Presentation presentation;
    std::vector<std::int32_t> left, right;
    std::vector<Element> ambient_projection;
    FiniteGroup pairing_group;
    std::vector<std::int32_t> pairing_in_ambient;
    std::vector<Element> pairing_projection;
    std::vector<Element> pair_table;
    ConjugacyClasses classes;
    std::vector<ElementSet> rep_centralizers;
  };
  explicit TensorStructure(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

TensorStructure build_tensor_structure(const FiniteGroup& g, PairingMode mode,
                                       PairOptions options = {});
TensorStructure exterior_square(const FiniteGroup& g, PairOptions options = {});
TensorStructure tensor_square(const FiniteGroup& g, PairOptions options = {});

// x wedge y, an element of s.pairing_group(). Throws WrongMode.
Element wedge(const TensorStructure& s, Element x, Element y);

struct SchurData {
  ElementSet multiplier;  // inside s.pairing_group()
  std::size_t multiplier_order;
  std::vector<std::uint64_t> abelian_invariants;
};

// Kernel of the commutator map from the exterior square onto G'.
// Throws WrongMode.
SchurData schur_multiplier(const TensorStructure& s);

// {y : x wedge y = 1}, as a subgroup of G. Throws WrongMode.
ElementSet exterior_centralizer(const TensorStructure& s, Element x);
ElementSet exterior_center(const TensorStructure& s);
// Capable iff the exterior center is trivial.
bool is_capable(const TensorStructure& s);

struct NablaJ2 {
  ElementSet nabla;  // <g (x) g>, inside s.pairing_group()
  ElementSet j2;     // kernel of the commutator map on the tensor square
};
// Throws WrongMode unless s is a tensor square.
NablaJ2 nabla_and_j2(const TensorStructure& s);

}  // namespace wedgedeg
