#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wedgedeg/group.hpp"

namespace wedgedeg {

// A letter is a 1-based generator index; negative means the inverse.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kDefaultCosetLimit = std::size_t{1} << 20;

// Cancels adjacent x x^-1 pairs.
Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

class Presentation {
 public:
  // Validates letters and freely reduces every relator. Relators that reduce
  // to the empty word are dropped. Throws InputError on a bad letter.
  Presentation(std::size_t generator_count, std::vector<Word> relators);

  std::size_t generator_count() const { return generator_count_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  std::size_t generator_count_;
  std::vector<Word> relators_;
};

// Column layout: generator i (0-based) acts through column 2i, its inverse
// through column 2i+1.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetTable(std::size_t generator_count, std::size_t coset_count,
             std::vector<std::int32_t> action, bool complete);

  std::size_t coset_count() const { return coset_count_; }
  std::size_t generator_count() const { return generator_count_; }
  std::size_t column_count() const { return 2 * generator_count_; }
  bool complete() const { return complete_; }

  static std::size_t column(Letter l) {
    return 2 * static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1) + (l < 0);
  }
  std::int32_t image(std::size_t coset, Letter l) const {
    return action_[coset * column_count() + column(l)];
  }
  std::int32_t entry(std::size_t coset, std::size_t col) const {
    return action_[coset * column_count() + col];
  }
  // Right action of a word; kUndefined if the walk leaves the table.
  std::int32_t apply(std::size_t coset, const Word& w) const;

  const std::vector<std::int32_t>& action() const { return action_; }

 private:
  std::size_t generator_count_;
  std::size_t coset_count_;
  std::vector<std::int32_t> action_;
  bool complete_;
};

struct EnumerationOptions {
  std::size_t limit = kDefaultCosetLimit;
  // Scan the whole table for deductions when it fills up before giving up.
  bool lookahead = true;
};

// HLT coset enumeration of the cosets of <subgroup> in the presented group.
// Coset 0 is the subgroup; the result is renumbered in breadth-first order
// over the columns. Throws LimitExceeded when more than options.limit
// cosets are live at once.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        EnumerationOptions options = {});
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t limit);

// The regular representation recovered from a table over the trivial
// subgroup: element i is coset i, and generator_images[g] is the element
// of generator g.
struct RealizedGroup {
  FiniteGroup group;
  std::vector<Element> generator_images;
};

// Throws IncompleteTable.
RealizedGroup coset_action_to_group(const CosetTable& t, const Presentation& p);

// A spanning tree of the coset graph rooted at coset 0: every coset c > 0
// is reached as parent[c] * letter[c].
struct CosetTree {
  std::vector<std::int32_t> parent;
  std::vector<Letter> letter;
  std::vector<std::int32_t> bfs_order;
};
CosetTree coset_tree(const CosetTable& t);
Word word_for(const CosetTree& tree, std::size_t coset);

// Environment variable WEDGEDEG_COSET_LIMIT when set, else the default.
std::size_t coset_limit_from_env();

}  // namespace wedgedeg
