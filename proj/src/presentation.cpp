#include "wedgedeg/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "wedgedeg/error.hpp"

namespace wedgedeg {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Presentation::Presentation(std::size_t generator_count,
                           std::vector<Word> relators)
    : generator_count_(generator_count) {
  for (auto& r : relators) {
    for (Letter l : r)
      if (l == 0 || static_cast<std::size_t>(l > 0 ? l : -l) > generator_count)
        throw InputError("relator letter " + std::to_string(l) +
                         " references a missing generator");
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

CosetTable::CosetTable(std::size_t generator_count, std::size_t coset_count,
                       std::vector<std::int32_t> action, bool complete)
    : generator_count_(generator_count),
      coset_count_(coset_count),
      action_(std::move(action)),
      complete_(complete) {
  if (action_.size() != coset_count_ * column_count())
    throw InputError("coset table storage does not match its shape");
}

std::int32_t CosetTable::apply(std::size_t coset, const Word& w) const {
  std::int32_t c = static_cast<std::int32_t>(coset);
  for (Letter l : w) {
    c = image(static_cast<std::size_t>(c), l);
    if (c == kUndefined) return kUndefined;
  }
  return c;
}

namespace {

using Col = std::uint32_t;

class Enumerator {
 public:
  Enumerator(const Presentation& p, EnumerationOptions options)
      : ncols_(2 * p.generator_count()),
        limit_(options.limit),
        lookahead_(options.lookahead) {
    std::vector<Word> rels;
    std::set<Word> seen;
    for (const Word& r : p.relators()) {
      // Cyclic reduction leaves the normal closure unchanged.
      std::size_t lo = 0, hi = r.size();
      while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
      }
      Word w(r.begin() + static_cast<std::ptrdiff_t>(lo),
             r.begin() + static_cast<std::ptrdiff_t>(hi));
      if (!w.empty() && seen.insert(w).second) rels.push_back(std::move(w));
    }
    std::stable_sort(rels.begin(), rels.end(),
                     [](const Word& a, const Word& b) {
                       return a.size() < b.size();
                     });
    for (const Word& w : rels) {
      rel_offsets_.push_back(rel_cols_.size());
      for (Letter l : w)
        rel_cols_.push_back(static_cast<Col>(CosetTable::column(l)));
    }
    rel_offsets_.push_back(rel_cols_.size());
  }

  CosetTable run(const std::vector<Word>& subgroup) {
    if (limit_ < 1) throw LimitExceeded(limit_);
    new_coset();
    std::vector<std::vector<Col>> sub;
    for (const Word& w : subgroup) {
      Word r = free_reduce(w);
      std::vector<Col> cols;
      for (Letter l : r) {
        if (l == 0 || static_cast<std::size_t>(l > 0 ? l : -l) > ncols_ / 2)
          throw InputError("subgroup word references a missing generator");
        cols.push_back(static_cast<Col>(CosetTable::column(l)));
      }
      if (!cols.empty()) sub.push_back(std::move(cols));
    }
    for (std::size_t k = 0; k < sub.size();) {
      try {
        scan_and_fill(0, sub[k].data(), sub[k].size());
        ++k;
      } catch (const TableFull&) {
        make_room();
      }
    }

    cursor_ = 0;
    const std::size_t nrel = rel_offsets_.size() - 1;
    while (cursor_ != kNone) {
      resume_ = kNone;
      try {
        for (std::size_t r = 0; r < nrel && alive_[cursor_]; ++r)
          scan_and_fill(cursor_, rel_cols_.data() + rel_offsets_[r],
                        rel_offsets_[r + 1] - rel_offsets_[r]);
        if (alive_[cursor_])
          for (Col x = 0; x < ncols_; ++x)
            if (at(cursor_, x) < 0) define(cursor_, x);
      } catch (const TableFull&) {
        make_room();
        if (alive_[cursor_]) continue;
      }
      cursor_ = alive_[cursor_] ? next_[cursor_] : resume_;
    }
    return standardize();
  }

 private:
  struct TableFull {};
  static constexpr std::int32_t kNone = -1;

  std::int32_t& at(std::int32_t c, Col x) {
    return table_[static_cast<std::size_t>(c) * ncols_ + x];
  }

  std::int32_t new_coset() {
    if (live_ >= limit_) throw TableFull{};
    std::int32_t c;
    if (!free_.empty()) {
      c = free_.back();
      free_.pop_back();
    } else {
      c = static_cast<std::int32_t>(alive_.size());
      alive_.push_back(0);
      forward_.push_back(c);
      next_.push_back(kNone);
      prev_.push_back(kNone);
      table_.resize(table_.size() + ncols_);
    }
    std::fill_n(table_.begin() + static_cast<std::ptrdiff_t>(c) *
                                     static_cast<std::ptrdiff_t>(ncols_),
                ncols_, kNone);
    alive_[c] = 1;
    forward_[c] = c;
    next_[c] = kNone;
    prev_[c] = tail_;
    if (tail_ != kNone) next_[tail_] = c;
    tail_ = c;
    ++live_;
    return c;
  }

  void define(std::int32_t c, Col x) {
    std::int32_t d = new_coset();
    at(c, x) = d;
    at(d, x ^ 1u) = c;
  }

  void unlink(std::int32_t l) {
    if (l == cursor_ || l == resume_) resume_ = next_[l];
    if (prev_[l] != kNone) next_[prev_[l]] = next_[l];
    if (next_[l] != kNone)
      prev_[next_[l]] = prev_[l];
    else
      tail_ = prev_[l];
    alive_[l] = 0;
    --live_;
  }

  std::int32_t rep(std::int32_t c) {
    while (forward_[c] != c) {
      forward_[c] = forward_[forward_[c]];
      c = forward_[c];
    }
    return c;
  }

  void merge(std::int32_t k, std::int32_t l) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    forward_[l] = k;
    unlink(l);
    queue_.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::int32_t e = queue_[qi];
      for (Col x = 0; x < ncols_; ++x) {
        const std::int32_t f = at(e, x);
        if (f < 0) continue;
        at(f, x ^ 1u) = kNone;
        const std::int32_t e1 = rep(e);
        const std::int32_t f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, x ^ 1u) >= 0) {
          merge(e1, at(f1, x ^ 1u));
        } else {
          at(e1, x) = f1;
          at(f1, x ^ 1u) = e1;
        }
      }
    }
    for (std::int32_t d : queue_) free_.push_back(d);
    queue_.clear();
  }

  // Scans w at coset c, defining new cosets to close gaps when `fill`.
  void scan(std::int32_t c, const Col* w, std::size_t len, bool fill) {
    std::int32_t f = c, b = c;
    std::ptrdiff_t i = 0, j = static_cast<std::ptrdiff_t>(len) - 1;
    for (;;) {
      while (i <= j) {
        std::int32_t y = at(f, w[i]);
        if (y < 0) break;
        f = y;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        std::int32_t y = at(b, w[j] ^ 1u);
        if (y < 0) break;
        b = y;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, w[i] ^ 1u) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::int32_t c, const Col* w, std::size_t len) {
    scan(c, w, len, true);
  }

  // Deduction-only pass over every live coset and relator.
  void lookahead() {
    const std::size_t nrel = rel_offsets_.size() - 1;
    for (std::size_t c = 0; c < alive_.size(); ++c) {
      for (std::size_t r = 0; r < nrel && alive_[c]; ++r)
        scan(static_cast<std::int32_t>(c), rel_cols_.data() + rel_offsets_[r],
             rel_offsets_[r + 1] - rel_offsets_[r], false);
    }
  }

  void make_room() {
    if (lookahead_) lookahead();
    if (live_ >= limit_) throw LimitExceeded(limit_);
  }

  CosetTable standardize() {
    const std::size_t n = live_;
    std::vector<std::int32_t> renum(alive_.size(), kNone), order;
    order.reserve(n);
    renum[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Col x = 0; x < ncols_; ++x) {
        std::int32_t d = at(order[i], x);
        if (d >= 0 && renum[d] == kNone) {
          renum[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    std::vector<std::int32_t> action(order.size() * ncols_, kNone);
    bool complete = order.size() == n;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (Col x = 0; x < ncols_; ++x) {
        std::int32_t d = at(order[i], x);
        if (d < 0)
          complete = false;
        else
          action[i * ncols_ + x] = renum[d];
      }
    return CosetTable(ncols_ / 2, order.size(), std::move(action), complete);
  }

  std::size_t ncols_;
  std::size_t limit_;
  bool lookahead_;
  std::vector<Col> rel_cols_;
  std::vector<std::size_t> rel_offsets_;

  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> forward_, next_, prev_, free_, queue_;
  std::vector<char> alive_;
  std::int32_t tail_ = kNone;
  std::size_t live_ = 0;
  std::int32_t cursor_ = kNone, resume_ = kNone;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        EnumerationOptions options) {
  if (p.generator_count() == 0) {
    // The trivial group: one coset, no columns.
    return CosetTable(0, 1, {}, true);
  }
  Enumerator e(p, options);
  return e.run(subgroup);
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t limit) {
  EnumerationOptions o;
  o.limit = limit;
  return todd_coxeter(p, subgroup, o);
}

CosetTree coset_tree(const CosetTable& t) {
  const std::size_t n = t.coset_count();
  CosetTree tree;
  tree.parent.assign(n, -1);
  tree.letter.assign(n, 0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  tree.bfs_order.push_back(0);
  for (std::size_t i = 0; i < tree.bfs_order.size(); ++i) {
    const auto c = static_cast<std::size_t>(tree.bfs_order[i]);
    for (std::size_t col = 0; col < t.column_count(); ++col) {
      std::int32_t d = t.entry(c, col);
      if (d < 0 || seen[d]) continue;
      seen[d] = 1;
      tree.parent[d] = static_cast<std::int32_t>(c);
      const auto g = static_cast<Letter>(col / 2 + 1);
      tree.letter[d] = (col & 1) ? -g : g;
      tree.bfs_order.push_back(d);
    }
  }
  return tree;
}

Word word_for(const CosetTree& tree, std::size_t coset) {
  Word w;
  for (auto c = static_cast<std::int32_t>(coset); c > 0; c = tree.parent[c])
    w.push_back(tree.letter[c]);
  std::reverse(w.begin(), w.end());
  return w;
}

RealizedGroup coset_action_to_group(const CosetTable& t,
                                    const Presentation& p) {
  if (!t.complete()) throw IncompleteTable();
  if (t.generator_count() != p.generator_count())
    throw InputError("coset table and presentation disagree on generators");
  const std::size_t n = t.coset_count();
  const CosetTree tree = coset_tree(t);
  if (tree.bfs_order.size() != n) throw IncompleteTable();
  // table[a][b] = a * word(b), filled along the tree.
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Element* row = table.data() + a * n;
    row[0] = static_cast<Element>(a);
    for (std::size_t i = 1; i < n; ++i) {
      const auto b = static_cast<std::size_t>(tree.bfs_order[i]);
      row[b] = static_cast<Element>(
          t.image(row[static_cast<std::size_t>(tree.parent[b])], tree.letter[b]));
    }
  }
  RealizedGroup out{FiniteGroup::from_trusted_table(n, std::move(table)), {}};
  for (std::size_t g = 0; g < p.generator_count(); ++g)
    out.generator_images.push_back(
        static_cast<Element>(t.image(0, static_cast<Letter>(g + 1))));
  return out;
}

std::size_t coset_limit_from_env() {
  const char* v = std::getenv("WEDGEDEG_COSET_LIMIT");
  if (v == nullptr || *v == '\0') return kDefaultCosetLimit;
  try {
    std::size_t pos = 0;
    unsigned long long x = std::stoull(v, &pos);
    if (pos != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw InputError(std::string("invalid WEDGEDEG_COSET_LIMIT: ") + v);
  }
}

}  // namespace wedgedeg
