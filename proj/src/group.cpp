#include "wedgedeg/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wedgedeg/error.hpp"

namespace wedgedeg {

namespace {

std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

// Greedy generating set: walk elements in index order, adding any element
// not yet reached by right multiplication from the identity.
std::vector<Element> greedy_generators(std::size_t n, const Element* table) {
  std::vector<Element> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  for (Element x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    // Re-close from scratch: the reached set only grows.
    std::vector<Element> queue;
    for (Element y = 0; y < n; ++y)
      if (reached[y]) queue.push_back(y);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Element y = queue[i];
      for (Element s : gens) {
        Element z = table[y * n + s];
        if (!reached[z]) {
          reached[z] = 1;
          queue.push_back(z);
        }
      }
    }
  }
  return gens;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Invariant factors of the abelian group formed by `elems` inside `g`.
std::vector<std::uint64_t> invariants_of(const FiniteGroup& g,
                                         const std::vector<Element>& elems) {
  for (Element a : elems)
    for (Element b : elems)
      if (g.mul(a, b) != g.mul(b, a))
        throw InputError("abelian invariants requested for a non-abelian group");
  const std::uint64_t n = elems.size();
  std::vector<std::size_t> orders;
  orders.reserve(elems.size());
  for (Element x : elems) orders.push_back(g.element_order(x));

  // For each prime, exponents of the cyclic primary factors.
  std::vector<std::vector<unsigned>> primary;
  for (std::uint64_t p : prime_factors(n)) {
    // count_k = #{x : x^(p^k) = 1} = p^(sum_i min(e_i, k))
    std::vector<unsigned> log_counts{0};
    for (unsigned k = 1;; ++k) {
      std::uint64_t pk = ipow(p, k);
      std::uint64_t c = 0;
      for (auto o : orders)
        if (pk % o == 0) ++c;
      unsigned lc = 0;
      while (c > 1) {
        c /= p;
        ++lc;
      }
      log_counts.push_back(lc);
      if (lc == log_counts[k - 1]) break;
    }
    // r_k = number of factors with exponent >= k
    std::vector<unsigned> exps;
    const std::size_t kmax = log_counts.size() - 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      unsigned rk = log_counts[k] - log_counts[k - 1];
      unsigned rk1 = k + 1 <= kmax ? log_counts[k + 1] - log_counts[k] : 0;
      for (unsigned i = 0; i < rk - rk1; ++i) exps.push_back(k);
    }
    std::vector<unsigned> powers;
    for (unsigned e : exps) powers.push_back(static_cast<unsigned>(ipow(p, e)));
    std::sort(powers.begin(), powers.end(), std::greater<>());
    primary.emplace_back(powers.begin(), powers.end());
  }
  std::size_t width = 0;
  for (auto& v : primary) width = std::max(width, v.size());
  // Largest invariant factor collects the largest prime power of each prime.
  std::vector<std::uint64_t> factors(width, 1);
  for (auto& v : primary)
    for (std::size_t i = 0; i < v.size(); ++i) factors[i] *= v[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace

FiniteGroup::FiniteGroup()
    : FiniteGroup(std::make_shared<const Data>(Data{1, {0}, {0}, {}, "1"})) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> d)
    : d_(std::move(d)), order_(d_->order), table_(d_->table.data()) {}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order,
                                            std::vector<Element> table,
                                            std::string label) {
  if (order == 0 || table.size() != order * order)
    throw NotAGroup("table size does not match order");
  Data d;
  d.order = order;
  d.table = std::move(table);
  d.inverse.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    const Element* row = d.table.data() + a * order;
    auto it = std::find(row, row + order, Element{0});
    if (it == row + order)
      throw NotAGroup("element " + std::to_string(a) + " has no inverse");
    d.inverse[a] = static_cast<Element>(it - row);
  }
  d.generators = greedy_generators(order, d.table.data());
  d.label = std::move(label);
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::from_cayley_table(
    const std::vector<std::vector<Element>>& table, std::string label) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty table");
  for (auto& row : table) {
    if (row.size() != n) throw NotAGroup("table is not square");
    for (Element v : row)
      if (v >= n) throw NotAGroup("table entry out of range");
  }
  // Latin square
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++)
        throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
      if (seen_col[table[j][i]]++)
        throw NotAGroup("column " + std::to_string(i) +
                        " is not a permutation");
    }
  }
  std::optional<Element> e;
  for (Element c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Element j = 0; j < n && ok; ++j)
      ok = table[c][j] == j && table[j][c] == j;
    if (ok) e = c;
  }
  if (!e) throw NotAGroup("no identity element");

  // Swap labels 0 and *e.
  auto relabel = [&](Element x) -> Element {
    if (x == *e) return 0;
    if (x == 0) return *e;
    return x;
  };
  std::vector<Element> flat(n * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      flat[relabel(i) * n + relabel(j)] = relabel(table[i][j]);
  FiniteGroup g = from_trusted_table(n, std::move(flat), std::move(label));
  g.validate();
  return g;
}

FiniteGroup FiniteGroup::from_permutation_generators(
    std::size_t degree, const std::vector<Permutation>& generators,
    std::size_t cap, std::string label) {
  for (auto& p : generators) {
    if (p.size() != degree)
      throw InputError("permutation has wrong degree");
    std::vector<char> seen(degree, 0);
    for (auto v : p) {
      if (v >= degree || seen[v]++)
        throw InputError("generator is not a permutation");
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);

  struct PermHash {
    std::size_t operator()(const Permutation& p) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : p) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };
  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, Element, PermHash> index{{id, 0}};
  const std::size_t k = generators.size();
  // right[x * k + s] = x * gen_s
  std::vector<Element> right;
  std::vector<Element> parent{0}, parent_gen{0};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation prod(degree);
      for (std::size_t j = 0; j < degree; ++j)
        prod[j] = generators[s][elems[i][j]];
      auto [it, fresh] =
          index.try_emplace(std::move(prod), static_cast<Element>(elems.size()));
      if (fresh) {
        if (elems.size() >= cap) throw SizeLimitExceeded(cap);
        elems.push_back(it->first);
        parent.push_back(static_cast<Element>(i));
        parent_gen.push_back(static_cast<Element>(s));
      }
      right.push_back(it->second);
    }
  }
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a) {
    Element* row = table.data() + a * n;
    row[0] = a;
    for (Element j = 1; j < n; ++j)
      row[j] = right[row[parent[j]] * k + parent_gen[j]];
  }
  Data d;
  d.order = n;
  d.table = std::move(table);
  d.inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    const Element* row = d.table.data() + a * n;
    d.inverse[a] = static_cast<Element>(std::find(row, row + n, 0u) - row);
  }
  std::vector<Element> gens;
  for (std::size_t s = 0; s < k; ++s) {
    Element g = index.at(generators[s]);
    if (g != 0 && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }
  d.generators = std::move(gens);
  d.label = std::move(label);
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

void FiniteGroup::validate() const {
  const std::size_t n = order_;
  for (Element i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (Element j = 0; j < n; ++j) {
      if (seen_row[mul(i, j)]++)
        throw NotAGroup("row " + std::to_string(i) + " is not a permutation");
      if (seen_col[mul(j, i)]++)
        throw NotAGroup("column " + std::to_string(i) +
                        " is not a permutation");
    }
    if (mul(0, i) != i || mul(i, 0) != i)
      throw NotAGroup("index 0 is not the identity");
    if (mul(i, inv(i)) != 0)
      throw NotAGroup("bad inverse for " + std::to_string(i));
  }
  // Light's test: associativity against a generating set suffices, since
  // the set of z with (xy)z = x(yz) for all x, y is closed under products.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element xy = mul(x, y);
      for (Element s : generators())
        if (mul(xy, s) != mul(x, mul(y, s)))
          throw NotAGroup("associativity fails at " + triple_text(x, y, s));
    }
}

Element FiniteGroup::pow(Element x, std::uint64_t k) const {
  Element r = 0;
  Element b = x;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::size_t FiniteGroup::element_order(Element x) const {
  std::size_t k = 1;
  for (Element y = x; y != 0; y = mul(y, x)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a : generators())
    for (Element b : generators())
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (Element x = 0; x < order_; ++x)
    if (element_order(x) == order_) return true;
  return false;
}

// ElementSet

ElementSet::ElementSet(FiniteGroup parent, Bitset members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (members_.size() != parent_.order())
    throw InputError("element set size does not match parent order");
}

ElementSet ElementSet::empty(const FiniteGroup& g) {
  return {g, Bitset(g.order())};
}

ElementSet ElementSet::whole(const FiniteGroup& g) {
  Bitset b(g.order());
  b.set();
  return {g, std::move(b)};
}

ElementSet ElementSet::trivial(const FiniteGroup& g) {
  Bitset b(g.order());
  b.set(0);
  return {g, std::move(b)};
}

ElementSet ElementSet::of(const FiniteGroup& g, std::span<const Element> elems) {
  Bitset b(g.order());
  for (Element x : elems) b.set(x);
  return {g, std::move(b)};
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (auto i = members_.find_first(); i != Bitset::npos;
       i = members_.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

bool ElementSet::is_subgroup() const {
  if (!contains(0)) return false;
  auto elems = elements();
  for (Element a : elems) {
    if (!contains(parent_.inv(a))) return false;
    for (Element b : elems)
      if (!contains(parent_.mul(a, b))) return false;
  }
  return true;
}

bool ElementSet::is_normal() const {
  if (!is_subgroup()) return false;
  for (Element s : parent_.generators())
    for (auto i = members_.find_first(); i != Bitset::npos;
         i = members_.find_next(i))
      if (!contains(parent_.conj(static_cast<Element>(i), s))) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  return {parent_, members_ & other.members_};
}

// Free functions

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ConjugacyClasses cc;
  cc.class_of.assign(n, kUnassigned);
  cc.conjugator.assign(n, 0);
  for (Element x = 0; x < n; ++x) {
    if (cc.class_of[x] != kUnassigned) continue;
    const std::size_t k = cc.representatives.size();
    cc.representatives.push_back(x);
    cc.class_of[x] = k;
    std::vector<Element> orbit{x};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      Element y = orbit[i];
      for (Element s : g.generators()) {
        Element z = g.conj(y, s);
        if (cc.class_of[z] == kUnassigned) {
          cc.class_of[z] = k;
          cc.conjugator[z] = g.mul(cc.conjugator[y], s);
          orbit.push_back(z);
        }
      }
    }
    cc.sizes.push_back(orbit.size());
  }
  return cc;
}

ElementSet generate_subgroup(const FiniteGroup& g,
                             std::span<const Element> generators) {
  Bitset b(g.order());
  b.set(0);
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Element s : generators) {
      Element z = g.mul(queue[i], s);
      if (!b.test(z)) {
        b.set(z);
        queue.push_back(z);
      }
    }
  return {g, std::move(b)};
}

ElementSet normal_closure(const FiniteGroup& g, const ElementSet& s) {
  std::vector<Element> gens;
  Bitset seen(g.order());
  for (Element x : s.elements()) {
    std::vector<Element> orbit{x};
    seen.set(x);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Element t : g.generators()) {
        Element z = g.conj(orbit[i], t);
        if (!seen.test(z)) {
          seen.set(z);
          orbit.push_back(z);
        }
      }
  }
  for (auto i = seen.find_first(); i != Bitset::npos; i = seen.find_next(i))
    gens.push_back(static_cast<Element>(i));
  return generate_subgroup(g, gens);
}

ElementSet centralizer(const FiniteGroup& g, Element x) {
  Bitset b(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) b.set(y);
  return {g, std::move(b)};
}

ElementSet center(const FiniteGroup& g) {
  Bitset b(g.order());
  for (Element z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Element s : g.generators())
      if (g.mul(z, s) != g.mul(s, z)) {
        central = false;
        break;
      }
    if (central) b.set(z);
  }
  return {g, std::move(b)};
}

ElementSet derived_subgroup(const FiniteGroup& g) {
  Bitset comms(g.order());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) comms.set(g.commutator(a, b));
  std::vector<Element> gens;
  for (auto i = comms.find_first(); i != Bitset::npos; i = comms.find_next(i))
    if (i != 0) gens.push_back(static_cast<Element>(i));
  return generate_subgroup(g, gens);
}

ElementSet conjugate(const ElementSet& s, Element x) {
  const FiniteGroup& g = s.parent();
  Bitset b(g.order());
  for (Element y : s.elements()) b.set(g.conj(y, x));
  return {g, std::move(b)};
}

FiniteGroup quotient(const FiniteGroup& g, const ElementSet& n) {
  if (!n.is_subgroup()) throw NotASubgroup("quotient by a non-subgroup");
  if (!n.is_normal()) throw NotNormal("quotient by a non-normal subgroup");
  const std::size_t order = g.order();
  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> coset_of(order, kNone);
  std::vector<Element> reps;
  const auto members = n.elements();
  for (Element x = 0; x < order; ++x) {
    if (coset_of[x] != kNone) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element m : members) coset_of[g.mul(x, m)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<Element> table(q * q);
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b)
      table[a * q + b] = coset_of[g.mul(reps[a], reps[b])];
  return FiniteGroup::from_trusted_table(
      q, std::move(table), g.label().empty() ? "" : g.label() + "/N");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[a * n + b] = static_cast<Element>(
          g.mul(a / k, b / k) * k + h.mul(a % k, b % k));
  std::string label;
  if (!g.label().empty() && !h.label().empty())
    label = g.label() + "x" + h.label();
  return FiniteGroup::from_trusted_table(n, std::move(table), label);
}

std::uint64_t smallest_prime_divisor(std::uint64_t n) {
  if (n < 2) throw TrivialGroupHasNoPrime();
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

std::uint64_t smallest_prime_divisor(const FiniteGroup& g) {
  return smallest_prime_divisor(static_cast<std::uint64_t>(g.order()));
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup& g) {
  const auto cc = conjugacy_classes(g);
  // Normal closure of each class.
  std::vector<ElementSet> class_closures;
  for (Element r : cc.representatives) {
    std::array<Element, 1> one{r};
    class_closures.push_back(normal_closure(g, ElementSet::of(g, one)));
  }
  std::vector<ElementSet> found{ElementSet::trivial(g)};
  std::unordered_set<Bitset> seen{found[0].bits()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto& cl : class_closures) {
      if (cl.is_subset_of(found[i])) continue;
      Bitset joined = found[i].bits() | cl.bits();
      if (seen.count(joined)) continue;
      ElementSet gen_set{g, joined};
      auto elems = gen_set.elements();
      ElementSet m = generate_subgroup(g, elems);
      if (seen.insert(m.bits()).second) found.push_back(m);
      seen.insert(joined);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const ElementSet& a, const ElementSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.bits() < b.bits();
            });
  return found;
}

std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return invariants_of(g, all);
}

std::vector<std::uint64_t> abelian_invariants(const ElementSet& s) {
  return invariants_of(s.parent(), s.elements());
}

bool is_elementary_abelian_rank2(const FiniteGroup& g, std::uint64_t p) {
  if (g.order() != p * p) return false;
  for (Element x = 1; x < g.order(); ++x)
    if (g.element_order(x) != p) return false;
  return true;
}

std::optional<std::vector<Element>> isomorphism_from_generators(
    const FiniteGroup& g, std::span<const Element> g_gens,
    const FiniteGroup& h, std::span<const Element> h_gens) {
  if (g.order() != h.order() || g_gens.size() != h_gens.size())
    return std::nullopt;
  constexpr Element kNone = static_cast<Element>(-1);
  std::vector<Element> map(g.order(), kNone);
  map[0] = 0;
  std::vector<Element> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t s = 0; s < g_gens.size(); ++s) {
      Element x = g.mul(queue[i], g_gens[s]);
      Element y = h.mul(map[queue[i]], h_gens[s]);
      if (map[x] == kNone) {
        map[x] = y;
        queue.push_back(x);
      } else if (map[x] != y) {
        return std::nullopt;
      }
    }
  if (queue.size() != g.order()) return std::nullopt;
  std::vector<char> hit(h.order(), 0);
  for (Element y : map)
    if (hit[y]++) return std::nullopt;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return std::nullopt;
  return map;
}

}  // namespace wedgedeg
