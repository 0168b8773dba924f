#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wedgedeg/group.hpp"
#include "wedgedeg/presentation.hpp"

namespace wedgedeg {

enum class GroupFamily {
  cyclic,
  dihedral,
  quaternion,
  symmetric,
  alternating,
  file,
  product,
};

// A parsed group spec. `parameter` is n for Zn, Sn and An, half the order
// for dihedral groups and a quarter of the order for quaternion groups.
struct GroupSpec {
  std::string text;
  GroupFamily family;
  std::uint64_t parameter = 0;
  FiniteGroup group;
  std::vector<GroupSpec> factors;  // product only
};

// Grammar: factor ('x' factor)* with factors Zn, D{2n}, Q{4n}, Sn, An, or
// a single @path.json. Throws ParseError, LimitExceeded, SizeLimitExceeded.
GroupSpec describe_group_spec(std::string_view text,
                              std::size_t coset_limit = kDefaultCosetLimit);
FiniteGroup parse_group_spec(std::string_view text,
                             std::size_t coset_limit = kDefaultCosetLimit);

FiniteGroup cyclic_group(std::uint64_t n);
FiniteGroup symmetric_group(std::uint64_t n);
FiniteGroup alternating_group(std::uint64_t n);

// <a, b | a^2, b^n, (ab)^2>, order 2n, n >= 2.
Presentation dihedral_presentation(std::uint64_t n);
FiniteGroup dihedral_from_presentation(std::uint64_t n,
                                       std::size_t coset_limit = kDefaultCosetLimit);
// Rotation and reflection of a regular n-gon.
FiniteGroup dihedral_permutation_model(std::uint64_t n);

// <a, b | a^n = b^2 = (ab)^2>, order 4n, n >= 1.
Presentation quaternion_presentation(std::uint64_t n);
FiniteGroup quaternion_from_presentation(std::uint64_t n,
                                         std::size_t coset_limit = kDefaultCosetLimit);

// Enumerates the presentation over the trivial subgroup.
FiniteGroup group_from_presentation(const Presentation& p, std::string label,
                                    std::size_t coset_limit);

// JSON group files, one of
//   {"type": "cayley", "table": [[...], ...]}
//   {"type": "perm", "degree": d, "generators": [[...], ...]}
//   {"type": "presentation", "generators": k, "relators": [[1, 2, -1], ...]}
// with an optional "label". The presentation form may omit "type".
// Throws ParseError.
FiniteGroup load_group_file(const std::string& path,
                            std::size_t coset_limit = kDefaultCosetLimit);

}  // namespace wedgedeg
