#include "wedgedeg/degrees.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "wedgedeg/error.hpp"

namespace wedgedeg {

namespace {

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.same_as(b)) return true;
  if (a.order() != b.order()) return false;
  for (Element x = 0; x < a.order(); ++x) {
    auto ra = a.row(x), rb = b.row(x);
    if (!std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

void require_exterior_over(const FiniteGroup& g, const TensorStructure* s) {
  if (s == nullptr || s->mode() != PairingMode::exterior ||
      !same_group(s->group(), g))
    throw MissingExteriorStructure();
}

BigRational ratio(const BigInt& count, std::size_t order, unsigned n) {
  BigInt den = 1;
  for (unsigned i = 0; i <= n; ++i) den *= order;
  return BigRational(count, den);
}

BigRational pow_int(std::uint64_t p, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= p;
  return BigRational(r, 1);
}

}  // namespace

RelationGraph::RelationGraph(FiniteGroup parent, RelationKind kind,
                             std::vector<Bitset> rows)
    : parent_(std::move(parent)), kind_(kind), rows_(std::move(rows)) {
  if (rows_.size() != parent_.order())
    throw InputError("relation graph needs one row per element");
}

RelationGraph relation_graph(const FiniteGroup& g, RelationKind kind,
                             const TensorStructure* s) {
  if (kind == RelationKind::wedge_trivial) require_exterior_over(g, s);
  const auto cc = conjugacy_classes(g);
  std::vector<Bitset> rep_rows;
  for (std::size_t k = 0; k < cc.count(); ++k) {
    const Element r = cc.representatives[k];
    if (kind == RelationKind::commuting)
      rep_rows.push_back(centralizer(g, r).bits());
    else
      rep_rows.push_back(s->representative_exterior_centralizers()[k].bits());
  }
  std::vector<Bitset> rows(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t k = cc.class_of[x];
    if (x == cc.representatives[k]) {
      rows[x] = rep_rows[k];
      continue;
    }
    const Element c = cc.conjugator[x];
    Bitset b(g.order());
    const Bitset& base = rep_rows[k];
    for (auto i = base.find_first(); i != Bitset::npos; i = base.find_next(i))
      b.set(g.conj(static_cast<Element>(i), c));
    rows[x] = std::move(b);
  }
  return RelationGraph(g, kind, std::move(rows));
}

BigInt TupleCounter::count(const Bitset& subset, unsigned n) {
  if (n == 0) return BigInt(subset.count());
  if (n == 1) {
    std::uint64_t total = 0;
    for (auto i = subset.find_first(); i != Bitset::npos;
         i = subset.find_next(i))
      total += (subset & graph_->row(static_cast<Element>(i))).count();
    return BigInt(total);
  }
  Key key{subset, n};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  BigInt total = 0;
  for (auto i = subset.find_first(); i != Bitset::npos; i = subset.find_next(i))
    total += count(subset & graph_->row(static_cast<Element>(i)), n - 1);
  memo_.emplace(std::move(key), total);
  return total;
}

BigInt tuple_count(const RelationGraph& r, const Bitset& subset, unsigned n) {
  TupleCounter c(r);
  return c.count(subset, n);
}

BigRational relation_degree(const RelationGraph& r, const ConjugacyClasses& cc,
                            TupleCounter& counter, unsigned n,
                            const DegreeOptions& options) {
  if (n == 0) return BigRational(1);
  const FiniteGroup& g = r.parent();
  BigInt total = 0;
  if (options.class_reduction) {
    // Related tuples starting with x are tuples from row(x); rows of
    // conjugate elements are conjugate, so each class contributes
    // |class| * count_{n-1}(row(rep)).
    std::vector<std::size_t> order(cc.count());
    std::iota(order.begin(), order.end(), 0);
    if (options.shuffle_seed) {
      std::mt19937_64 rng(*options.shuffle_seed);
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (std::size_t k : order)
      total += BigInt(cc.sizes[k]) *
               counter.count(r.row(cc.representatives[k]), n - 1);
  } else {
    Bitset all(g.order());
    all.set();
    total = counter.count(all, n);
  }
  return ratio(total, g.order(), n);
}

BigRational commutativity_degree_n(const FiniteGroup& g, unsigned n,
                                   const DegreeOptions& options) {
  if (n == 0) return BigRational(1);
  RelationGraph r = relation_graph(g, RelationKind::commuting);
  TupleCounter counter(r);
  return relation_degree(r, conjugacy_classes(g), counter, n, options);
}

BigRational exterior_degree_n(const FiniteGroup& g, const TensorStructure& s,
                              unsigned n, const DegreeOptions& options) {
  require_exterior_over(g, &s);
  if (n == 0) return BigRational(1);
  RelationGraph r = relation_graph(g, RelationKind::wedge_trivial, &s);
  TupleCounter counter(r);
  return relation_degree(r, s.classes(), counter, n, options);
}

BigRational brute_force_degree(const FiniteGroup& g, unsigned n,
                               RelationKind kind, const TensorStructure* s,
                               std::uint64_t cap) {
  if (kind == RelationKind::wedge_trivial) require_exterior_over(g, s);
  const std::size_t order = g.order();
  {
    BigInt tuples = 1;
    for (unsigned i = 0; i <= n; ++i) tuples *= order;
    if (tuples > cap)
      throw TooLarge("brute force over " + tuples.str() + " tuples exceeds " +
                     std::to_string(cap));
  }
  auto related = [&](Element x, Element y) {
    if (kind == RelationKind::commuting) return g.mul(x, y) == g.mul(y, x);
    return s->pair(x, y) == 0;
  };
  std::vector<Element> t(n + 1, 0);
  std::uint64_t hits = 0;
  for (;;) {
    bool ok = true;
    for (std::size_t i = 0; i <= n && ok; ++i)
      for (std::size_t j = 0; j <= n && ok; ++j)
        if (i != j) ok = related(t[i], t[j]);
    if (ok) ++hits;
    std::size_t pos = 0;
    while (pos <= n && ++t[pos] == order) t[pos++] = 0;
    if (pos > n) break;
  }
  return ratio(BigInt(hits), order, n);
}

BigRational dihedral_closed_form(std::uint64_t n, unsigned m) {
  if (n < 2 || m < 1)
    throw InputError("dihedral closed form needs n >= 2 and m >= 1");
  BigInt num = 0, den = 2;
  BigInt nm = 1, twon_m = 1, two_m1 = 2;
  for (unsigned i = 0; i < m; ++i) {
    nm *= n;
    twon_m *= 2 * n;
    two_m1 *= 2;
  }
  num = nm + two_m1 - 1;
  den *= twon_m;
  return BigRational(num, den);
}

BigRational quaternion_closed_form(std::uint64_t n, unsigned m) {
  if (n < 1 || m < 1)
    throw InputError("quaternion closed form needs n >= 1 and m >= 1");
  BigInt nm = 1, twon_m = 1, two_m1 = 2;
  for (unsigned i = 0; i < m; ++i) {
    nm *= n;
    twon_m *= 2 * n;
    two_m1 *= 2;
  }
  return BigRational(nm + two_m1 - 1, 2 * twon_m);
}

// DegreeContext

DegreeContext::DegreeContext(FiniteGroup g, TensorStructure s)
    : g_(std::move(g)),
      s_(std::move(s)),
      classes_(conjugacy_classes(g_)),
      center_(wedgedeg::center(g_)),
      exterior_center_(
          (require_exterior_over(g_, &s_), wedgedeg::exterior_center(s_))),
      derived_(derived_subgroup(g_)),
      abelian_(g_.is_abelian()),
      cyclic_(g_.is_cyclic()),
      commuting_(relation_graph(g_, RelationKind::commuting)),
      wedge_(relation_graph(g_, RelationKind::wedge_trivial, &s_)),
      commuting_counter_(commuting_),
      wedge_counter_(wedge_),
      d_{BigRational(1)},
      dwedge_{BigRational(1)} {}

const BigRational& DegreeContext::d(unsigned n) {
  while (d_.size() <= n)
    d_.push_back(relation_degree(commuting_, classes_, commuting_counter_,
                                 static_cast<unsigned>(d_.size())));
  return d_[n];
}

const BigRational& DegreeContext::dwedge(unsigned n) {
  while (dwedge_.size() <= n)
    dwedge_.push_back(relation_degree(wedge_, classes_, wedge_counter_,
                                      static_cast<unsigned>(dwedge_.size())));
  return dwedge_[n];
}

// Theorem checks

bool TheoremEntry::ok() const {
  if (!applicable) return true;
  if (!holds) return false;
  switch (claim) {
    case EqualityClaim::none:
      return true;
    case EqualityClaim::if_condition:
      return !equality_condition_met.value_or(false) || equality;
    case EqualityClaim::iff_condition:
      return equality == equality_condition_met.value_or(false);
  }
  return false;
}

bool TheoremReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const TheoremEntry& e) { return e.ok(); });
}

const TheoremEntry* TheoremReport::find(const std::string& id,
                                        unsigned n) const {
  for (auto& e : entries)
    if (e.id == id && e.n == n) return &e;
  return nullptr;
}

namespace {

TheoremEntry make_entry(std::string id, unsigned n, bool applicable,
                        BigRational lhs, BigRational rhs,
                        EqualityClaim claim = EqualityClaim::none,
                        std::optional<bool> condition = std::nullopt,
                        std::string note = {}) {
  TheoremEntry e;
  e.id = std::move(id);
  e.n = n;
  e.applicable = applicable;
  e.holds = lhs <= rhs;
  e.equality = lhs == rhs;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.claim = claim;
  e.equality_condition_met = condition;
  e.note = std::move(note);
  return e;
}

TheoremEntry not_applicable(std::string id, unsigned n, std::string note) {
  TheoremEntry e;
  e.id = std::move(id);
  e.n = n;
  e.applicable = false;
  e.note = std::move(note);
  return e;
}

}  // namespace

TheoremReport verify_bounds(DegreeContext& ctx, unsigned n) {
  if (n == 0) throw InputError("bounds are stated for n >= 1");
  const FiniteGroup& g = ctx.group();
  const std::size_t order = g.order();
  const BigRational dn = ctx.d(n);
  const BigRational wn = ctx.dwedge(n);
  const BigRational wprev = ctx.dwedge(n - 1);
  const BigRational d1 = ctx.d(1);
  const std::size_t z = ctx.center().size();
  const std::size_t zw = ctx.exterior_center().size();
  const bool abelian = ctx.abelian(), cyclic = ctx.cyclic();
  const bool zw_proper = zw < z;
  const bool capable = zw == 1;

  TheoremReport rep;
  auto& out = rep.entries;

  out.push_back(make_entry("abelian_iff_commuting_degree_one", n, true, dn, 1,
                           EqualityClaim::iff_condition, abelian));
  out.push_back(make_entry("cyclic_iff_wedge_degree_one", n, true, wn, 1,
                           EqualityClaim::iff_condition, cyclic));
  if (n >= 2)
    out.push_back(make_entry("wedge_degree_descending", n, true, wn, wprev));
  else
    out.push_back(not_applicable("wedge_degree_descending", n,
                                 "compares consecutive n >= 1"));
  {
    const bool unidegree = d1 == ctx.dwedge(1);
    out.push_back(make_entry("wedge_degree_below_commuting", n, true, wn, dn,
                             EqualityClaim::if_condition, unidegree,
                             "equality expected for unidegree groups"));
  }

  if (order < 2) {
    for (const char* id :
         {"commuting_degree_nonabelian_bound", "commuting_degree_trivial_center_derived_bound",
          "exterior_degree_center_gap", "exterior_degree_noncyclic_bound",
          "exterior_degree_proper_exterior_center_bound",
          "wedge_degree_recursive_bound", "wedge_degree_noncyclic_bound",
          "wedge_degree_proper_exterior_center_bound",
          "wedge_degree_capable_bound"})
      out.push_back(not_applicable(id, n, "trivial group has no prime"));
  } else {
    const std::uint64_t p = smallest_prime_divisor(g);
    const BigRational pr(static_cast<std::int64_t>(p));
    const BigRational go(static_cast<std::int64_t>(order));
    const BigRational zr(static_cast<std::int64_t>(z));
    const BigRational zwr(static_cast<std::int64_t>(zw));

    // (p^(n+1) + p^n - 1) / p^(2n+1)
    const BigRational pair_bound =
        (pow_int(p, n + 1) + pow_int(p, n) - 1) / pow_int(p, 2 * n + 1);

    if (!abelian) {
      const bool cond = is_elementary_abelian_rank2(
          quotient(g, ctx.center()), p);
      out.push_back(make_entry("commuting_degree_nonabelian_bound", n, true, dn,
                               pair_bound, EqualityClaim::iff_condition, cond,
                               "equality iff G/Z(G) is Z_p x Z_p"));
    } else {
      out.push_back(not_applicable("commuting_degree_nonabelian_bound", n,
                                   "G is abelian"));
    }

    const bool z_meets_derived = !(ctx.center() & ctx.derived()).is_trivial();
    if (!abelian && !z_meets_derived)
      out.push_back(make_entry("commuting_degree_trivial_center_derived_bound",
                               n, true, dn, BigRational(1) / pow_int(p, n)));
    else
      out.push_back(not_applicable(
          "commuting_degree_trivial_center_derived_bound", n,
          abelian ? "G is abelian" : "Z(G) meets G' nontrivially"));

    if (n == 1) {
      const BigRational gap = d1 - (pr - 1) / pr * (zr - zwr) / go;
      out.push_back(
          make_entry("exterior_degree_center_gap", n, true, wn, gap));
      const bool noncyclic_case = (!cyclic && abelian) || !abelian;
      if (noncyclic_case)
        out.push_back(make_entry(
            "exterior_degree_noncyclic_bound", n, true, wn,
            (pr * pr + pr - 1) / (pr * pr * pr)));
      else
        out.push_back(not_applicable("exterior_degree_noncyclic_bound", n,
                                     "G is cyclic"));
      if (!abelian && zw_proper)
        out.push_back(make_entry(
            "exterior_degree_proper_exterior_center_bound", n, true, wn,
            (pr * pr * pr + pr - 1) / (pr * pr * pr * pr)));
      else
        out.push_back(not_applicable(
            "exterior_degree_proper_exterior_center_bound", n,
            abelian ? "G is abelian" : "exterior center equals the center"));
    } else {
      for (const char* id : {"exterior_degree_center_gap",
                             "exterior_degree_noncyclic_bound",
                             "exterior_degree_proper_exterior_center_bound"})
        out.push_back(not_applicable(id, n, "stated for n = 1"));
    }

    {
      // d/p^(n-1) + ((1-p)|Z| - (1 - p^n D_{n-1}) |Z^wedge|) / (p^n |G|)
      const BigRational pn = pow_int(p, n);
      const BigRational rhs =
          d1 / pow_int(p, n - 1) +
          ((1 - pr) * zr - (1 - pn * wprev) * zwr) / (pn * go);
      out.push_back(make_entry("wedge_degree_recursive_bound", n, true, wn, rhs));
    }

    if (!cyclic) {
      const bool cond =
          is_elementary_abelian_rank2(quotient(g, ctx.exterior_center()), p);
      out.push_back(make_entry("wedge_degree_noncyclic_bound", n, true, wn,
                               pair_bound, EqualityClaim::iff_condition, cond,
                               "equality iff G/Z^wedge(G) is Z_p x Z_p"));
    } else {
      out.push_back(
          not_applicable("wedge_degree_noncyclic_bound", n, "G is cyclic"));
    }

    if (!abelian && zw_proper) {
      // (p^(2n+1)(p+1) + p^(2n) - 1) / (p^(3n+1)(p+1))
      const BigRational rhs =
          (pow_int(p, 2 * n + 1) * (pr + 1) + pow_int(p, 2 * n) - 1) /
          (pow_int(p, 3 * n + 1) * (pr + 1));
      out.push_back(make_entry("wedge_degree_proper_exterior_center_bound", n,
                               true, wn, rhs));
    } else {
      out.push_back(not_applicable(
          "wedge_degree_proper_exterior_center_bound", n,
          abelian ? "G is abelian" : "exterior center equals the center"));
    }

    if (!abelian && capable)
      out.push_back(make_entry("wedge_degree_capable_bound", n, true, wn,
                               BigRational(1) / pow_int(p, n)));
    else
      out.push_back(not_applicable("wedge_degree_capable_bound", n,
                                   abelian ? "G is abelian"
                                           : "G is not capable"));
  }

  // Quotients by every normal subgroup.
  for (const ElementSet& nsub : normal_subgroups(g)) {
    const FiniteGroup q = quotient(g, nsub);
    const BigRational dq = commutativity_degree_n(q, n);
    const bool cond = (nsub & ctx.derived()).is_trivial();
    out.push_back(make_entry("quotient_monotonicity", n, true, dn, dq,
                             EqualityClaim::if_condition, cond,
                             "|N| = " + std::to_string(nsub.size())));
  }
  return rep;
}

TheoremReport verify_bounds(const FiniteGroup& g, const TensorStructure& s,
                            unsigned n) {
  DegreeContext ctx(g, s);
  return verify_bounds(ctx, n);
}

std::vector<QuotientCheck> verify_quotient_monotonicity(const FiniteGroup& g,
                                                        const ElementSet& n,
                                                        unsigned max_n) {
  const FiniteGroup q = quotient(g, n);
  const bool expected = (n & derived_subgroup(g)).is_trivial();
  RelationGraph rg = relation_graph(g, RelationKind::commuting);
  RelationGraph rq = relation_graph(q, RelationKind::commuting);
  TupleCounter cg(rg), cq(rq);
  const auto ccg = conjugacy_classes(g), ccq = conjugacy_classes(q);
  std::vector<QuotientCheck> out;
  for (unsigned k = 1; k <= max_n; ++k) {
    QuotientCheck c{k, relation_degree(rg, ccg, cg, k),
                    relation_degree(rq, ccq, cq, k), false, expected, false};
    c.holds = c.group_degree <= c.quotient_degree;
    c.equality = c.group_degree == c.quotient_degree;
    out.push_back(std::move(c));
  }
  return out;
}

CoprimeCheck verify_coprime_multiplicativity(const FiniteGroup& g,
                                             const FiniteGroup& h, unsigned n,
                                             PairOptions options) {
  if (std::gcd(g.order(), h.order()) != 1)
    throw NotCoprime("orders " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()) + " are not coprime");
  const FiniteGroup gh = direct_product(g, h);
  const TensorStructure sg = exterior_square(g, options);
  const TensorStructure sh = exterior_square(h, options);
  const TensorStructure sgh = exterior_square(gh, options);
  CoprimeCheck c{n, exterior_degree_n(gh, sgh, n),
                 exterior_degree_n(g, sg, n) * exterior_degree_n(h, sh, n),
                 false};
  c.holds = c.product_degree == c.factor_product;
  return c;
}

UnidegreeFlags unidegree_flags(DegreeContext& ctx, unsigned max_n) {
  if (max_n < 1) throw InputError("max_n must be at least 1");
  UnidegreeFlags f{};
  f.unicentral = ctx.center() == ctx.exterior_center();
  f.unidegree = ctx.d(1) == ctx.dwedge(1);
  f.multiple_unidegree = true;
  for (unsigned k = 1; k <= max_n; ++k)
    if (ctx.d(k) != ctx.dwedge(k)) f.multiple_unidegree = false;
  return f;
}

UnidegreeFlags unidegree_flags(const FiniteGroup& g, const TensorStructure& s,
                               unsigned max_n) {
  DegreeContext ctx(g, s);
  return unidegree_flags(ctx, max_n);
}

}  // namespace wedgedeg
