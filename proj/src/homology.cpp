#include "wedgedeg/homology.hpp"

#include <algorithm>

#include "wedgedeg/error.hpp"

namespace wedgedeg {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), rows_(rows) {}

IntegerMatrix IntegerMatrix::from_dense(
    const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  IntegerMatrix out(m.size(), cols);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != cols)
      throw InputError("ragged rows in integer matrix");
    for (std::size_t c = 0; c < cols; ++c)
      if (m[r][c] != 0) out.add(r, c, m[r][c]);
  }
  return out;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const BigInt& v) {
  if (r >= rows_.size() || c >= cols_)
    throw InputError("integer matrix index out of range");
  if (v == 0) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, Entry{static_cast<std::uint32_t>(c), v});
  }
}

BigInt IntegerMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  return it != row.end() && it->first == c ? it->second : BigInt(0);
}

std::size_t IntegerMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Row& r : rows_) n += r.size();
  return n;
}

// Sparse elimination. Pivots are chosen with the smallest absolute value,
// ties broken by the Markowitz product. Once a pivot's column is cleared by
// row operations, the remaining entries of its row are reduced modulo the
// pivot by column operations, which touch no other row. The result is a
// diagonal, normalized into a divisibility chain afterwards.
class SmithReducer {
 public:
  explicit SmithReducer(IntegerMatrix m)
      : cols_(m.cols_),
        rows_(std::move(m.rows_)),
        col_rows_(cols_),
        col_count_(cols_, 0),
        stamp_(rows_.size(), 0) {
    for (std::uint32_t r = 0; r < rows_.size(); ++r) {
      if (rows_[r].empty()) continue;
      active_.push_back(r);
      for (auto& [c, v] : rows_[r]) {
        col_rows_[c].push_back(r);
        ++col_count_[c];
      }
    }
  }

  SmithForm run() {
    std::vector<BigInt> diag;
    std::uint32_t r, c;
    while (find_pivot(r, c)) diag.push_back(eliminate(r, c));

    SmithForm out;
    out.rank = diag.size();
    std::sort(diag.begin(), diag.end());
    auto first_big = std::find_if(diag.begin(), diag.end(),
                                  [](const BigInt& d) { return d != 1; });
    for (auto i = first_big; i != diag.end(); ++i)
      for (auto j = i + 1; j != diag.end(); ++j) {
        if (*j % *i == 0) continue;
        BigInt g = boost::multiprecision::gcd(*i, *j);
        *j = *i / g * *j;
        *i = g;
      }
    out.invariant_factors = std::move(diag);
    const std::size_t full = std::min(rows_.size(), cols_);
    out.invariant_factors.resize(full, BigInt(0));
    return out;
  }

 private:
  using Entry = IntegerMatrix::Entry;
  using Row = IntegerMatrix::Row;

  static bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

  const BigInt* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const Entry& e, std::uint32_t col) { return e.first < col; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  }

  bool find_pivot(std::uint32_t& pr, std::uint32_t& pc) {
    bool found = false;
    bool found_unit = false;
    BigInt best_abs;
    std::uint64_t best_cost = 0;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < active_.size(); ++i) {
      const std::uint32_t r = active_[i];
      const Row& row = rows_[r];
      if (row.empty()) continue;
      active_[keep++] = r;
      if (found_unit && best_cost == 0) continue;
      for (auto& [c, v] : row) {
        const bool unit = is_unit(v);
        if (found_unit && !unit) continue;
        const std::uint64_t cost =
            static_cast<std::uint64_t>(row.size() - 1) * (col_count_[c] - 1);
        bool better;
        if (!found) {
          better = true;
        } else if (unit) {
          better = !found_unit || cost < best_cost;
        } else {
          BigInt a = abs(v);
          better = a < best_abs || (a == best_abs && cost < best_cost);
        }
        if (better) {
          found = true;
          found_unit = unit;
          best_abs = abs(v);
          best_cost = cost;
          pr = r;
          pc = c;
        }
      }
    }
    active_.resize(keep);
    return found;
  }

  // row s -= q * row p.
  void subtract_multiple(std::uint32_t s, const BigInt& q, std::uint32_t p) {
    const Row& a = rows_[s];
    const Row& b = rows_[p];
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, -q * b[j].second);
        ++col_count_[b[j].first];
        col_rows_[b[j].first].push_back(s);
        ++j;
      } else {
        BigInt v = a[i].second - q * b[j].second;
        if (v != 0)
          out.emplace_back(a[i].first, std::move(v));
        else
          --col_count_[a[i].first];
        ++i;
        ++j;
      }
    }
    rows_[s] = std::move(out);
  }

  // Clears column c outside row r, moving the pivot to a smaller remainder
  // when the division is not exact. Returns the final pivot row.
  std::uint32_t clear_column(std::uint32_t r, std::uint32_t c) {
    for (;;) {
      ++epoch_;
      stamp_[r] = epoch_;
      const BigInt a = *find(r, c);
      std::vector<std::uint32_t> rest;
      std::uint32_t smallest = r;
      BigInt smallest_abs;
      const std::vector<std::uint32_t> candidates = std::move(col_rows_[c]);
      col_rows_[c].clear();
      for (std::uint32_t s : candidates) {
        if (stamp_[s] == epoch_) continue;
        stamp_[s] = epoch_;
        const BigInt* v = find(s, c);
        if (v == nullptr) continue;
        const BigInt q = *v / a;
        if (q != 0) subtract_multiple(s, q, r);
        if (const BigInt* left = find(s, c)) {
          rest.push_back(s);
          BigInt m = abs(*left);
          if (smallest == r || m < smallest_abs) {
            smallest = s;
            smallest_abs = std::move(m);
          }
        }
      }
      col_rows_[c] = rest;
      col_rows_[c].push_back(r);
      if (rest.empty()) return r;
      r = smallest;
    }
  }

  BigInt eliminate(std::uint32_t r, std::uint32_t c) {
    for (;;) {
      r = clear_column(r, c);
      Row& row = rows_[r];
      const BigInt a = *find(r, c);
      Row kept;
      std::uint32_t next = c;
      BigInt next_abs;
      for (auto& [col, v] : row) {
        if (col == c) {
          kept.emplace_back(col, v);
          continue;
        }
        BigInt m = v % a;
        if (m == 0) {
          --col_count_[col];
          continue;
        }
        BigInt ma = abs(m);
        if (next == c || ma < next_abs) {
          next = col;
          next_abs = ma;
        }
        kept.emplace_back(col, std::move(m));
      }
      row = std::move(kept);
      if (next == c) {
        row.clear();
        --col_count_[c];
        col_rows_[c].clear();
        return abs(a);
      }
      c = next;
    }
  }

  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> active_;
};

SmithForm smith_normal_form(IntegerMatrix m) {
  return SmithReducer(std::move(m)).run();
}

IntegerMatrix bar_boundary2(const FiniteGroup& g) {
  const std::size_t n = g.order();
  IntegerMatrix m(n * n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const std::size_t r = a * n + b;
      m.add(r, b, 1);
      m.add(r, g.mul(a, b), -1);
      m.add(r, a, 1);
    }
  return m;
}

IntegerMatrix bar_boundary3(const FiniteGroup& g) {
  const std::size_t n = g.order();
  IntegerMatrix m(n * n * n, n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        const std::size_t r = (a * n + b) * n + c;
        m.add(r, b * n + c, 1);
        m.add(r, g.mul(a, b) * n + c, -1);
        m.add(r, a * n + g.mul(b, c), 1);
        m.add(r, a * n + b, -1);
      }
  return m;
}

namespace {

void check_cap(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) throw GroupTooLarge(g.order(), cap);
}

std::vector<std::uint64_t> nontrivial(const std::vector<BigInt>& factors) {
  std::vector<std::uint64_t> out;
  for (const BigInt& d : factors)
    if (d != 1) out.push_back(d.convert_to<std::uint64_t>());
  return out;
}

}  // namespace

std::vector<std::uint64_t> bar_h2(const FiniteGroup& g, std::size_t cap) {
  check_cap(g, cap);
  // The cycles are a direct summand of the 2-chains, so H_2 is the torsion
  // of the cokernel of the third boundary.
  const SmithForm f = smith_normal_form(bar_boundary3(g));
  std::vector<BigInt> torsion;
  for (const BigInt& d : f.invariant_factors)
    if (d != 0) torsion.push_back(d);
  return nontrivial(torsion);
}

std::vector<std::uint64_t> bar_h1(const FiniteGroup& g, std::size_t cap) {
  check_cap(g, cap);
  // With trivial coefficients the first boundary vanishes, so H_1 is the
  // cokernel of the second boundary. A free part shows up as zero factors.
  const SmithForm f = smith_normal_form(bar_boundary2(g));
  std::vector<std::uint64_t> out = nontrivial(
      std::vector<BigInt>(f.invariant_factors.begin(),
                          f.invariant_factors.begin() +
                              static_cast<std::ptrdiff_t>(f.rank)));
  for (std::size_t i = f.rank; i < g.order(); ++i) out.push_back(0);
  return out;
}

}  // namespace wedgedeg
