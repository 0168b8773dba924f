#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wedgedeg/group.hpp"
#include "wedgedeg/rational.hpp"
#include "wedgedeg/wedge.hpp"

namespace wedgedeg {

enum class RelationKind { commuting, wedge_trivial };

// Row x holds every y related to x: xy = yx, or x wedge y = 1. The wedge
// relation is always the one of the ambient group's exterior square, also
// when counting inside a subgroup.
class RelationGraph {
 public:
  RelationGraph(FiniteGroup parent, RelationKind kind, std::vector<Bitset> rows);

  const FiniteGroup& parent() const { return parent_; }
  RelationKind kind() const { return kind_; }
  const Bitset& row(Element x) const { return rows_[x]; }
  bool related(Element x, Element y) const { return rows_[x].test(y); }

 private:
  FiniteGroup parent_;
  RelationKind kind_;
  std::vector<Bitset> rows_;
};

// Rows are computed for class representatives and conjugated to the rest
// of each class. Throws MissingExteriorStructure for the wedge kind without
// an exterior square over g.
RelationGraph relation_graph(const FiniteGroup& g, RelationKind kind,
                             const TensorStructure* s = nullptr);

// Counts tuples (x_0..x_n) from a subset whose entries are pairwise related:
//   count_0(S) = |S|,  count_n(S) = sum_{x in S} count_{n-1}(S & row(x)).
// Results are memoized per (subset, n) for the lifetime of the counter.
class TupleCounter {
 public:
  explicit TupleCounter(const RelationGraph& graph) : graph_(&graph) {}
  BigInt count(const Bitset& subset, unsigned n);
  const RelationGraph& graph() const { return *graph_; }

 private:
  struct Key {
    Bitset bits;
    unsigned n;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<Bitset>{}(k.bits) * 31 + k.n;
    }
  };
  const RelationGraph* graph_;
  std::unordered_map<Key, BigInt, KeyHash> memo_;
};

BigInt tuple_count(const RelationGraph& r, const Bitset& subset, unsigned n);

struct DegreeOptions {
  // Sum over conjugacy class representatives weighted by class size.
  bool class_reduction = true;
  // Process representatives in a shuffled order (results must not change).
  std::optional<std::uint64_t> shuffle_seed;
};

// Probability that n+1 uniform elements are pairwise related.
BigRational relation_degree(const RelationGraph& r, const ConjugacyClasses& cc,
                            TupleCounter& counter, unsigned n,
                            const DegreeOptions& options = {});

BigRational commutativity_degree_n(const FiniteGroup& g, unsigned n,
                                   const DegreeOptions& options = {});
// Throws MissingExteriorStructure unless s is an exterior square over g.
BigRational exterior_degree_n(const FiniteGroup& g, const TensorStructure& s,
                              unsigned n, const DegreeOptions& options = {});

inline constexpr std::uint64_t kDefaultBruteForceCap = 10'000'000;

// Direct count over all (n+1)-tuples; only meant as an oracle. Throws
// TooLarge when |G|^(n+1) exceeds the cap.
BigRational brute_force_degree(const FiniteGroup& g, unsigned n,
                               RelationKind kind,
                               const TensorStructure* s = nullptr,
                               std::uint64_t cap = kDefaultBruteForceCap);

// (n^m + 2^(m+1) - 1) / (2 (2n)^m) for the dihedral group of order 2n.
BigRational dihedral_closed_form(std::uint64_t n, unsigned m);
// The same expression, for the generalized quaternion group of order 4n.
BigRational quaternion_closed_form(std::uint64_t n, unsigned m);

// Everything the bound checks need about one group, computed once.
class DegreeContext {
 public:
  DegreeContext(FiniteGroup g, TensorStructure s);
  DegreeContext(const DegreeContext&) = delete;
  DegreeContext& operator=(const DegreeContext&) = delete;

  const FiniteGroup& group() const { return g_; }
  const TensorStructure& exterior() const { return s_; }
  const ConjugacyClasses& classes() const { return classes_; }
  const ElementSet& center() const { return center_; }
  const ElementSet& exterior_center() const { return exterior_center_; }
  const ElementSet& derived() const { return derived_; }
  bool abelian() const { return abelian_; }
  bool cyclic() const { return cyclic_; }

  // d_n(G) and D^wedge_n(G), cached.
  const BigRational& d(unsigned n);
  const BigRational& dwedge(unsigned n);

 private:
  FiniteGroup g_;
  TensorStructure s_;
  ConjugacyClasses classes_;
  ElementSet center_, exterior_center_, derived_;
  bool abelian_, cyclic_;
  RelationGraph commuting_, wedge_;
  TupleCounter commuting_counter_, wedge_counter_;
  std::vector<BigRational> d_, dwedge_;
};

// What a theorem says about equality in its bound.
enum class EqualityClaim {
  none,
  // equality holds whenever the condition holds
  if_condition,
  // equality holds exactly when the condition holds
  iff_condition,
};

struct TheoremEntry {
  std::string id;
  unsigned n = 0;
  bool applicable = false;
  BigRational lhs, rhs;
  bool holds = false;     // lhs <= rhs
  bool equality = false;  // lhs == rhs
  EqualityClaim claim = EqualityClaim::none;
  std::optional<bool> equality_condition_met;
  std::string note;

  // Inapplicable entries are always ok; applicable ones need the bound and
  // any claimed equality behaviour.
  bool ok() const;
};

struct TheoremReport {
  std::vector<TheoremEntry> entries;
  bool all_ok() const;
  const TheoremEntry* find(const std::string& id, unsigned n) const;
};

// Evaluates every bound at a single n >= 1. Throws InputError for n = 0.
TheoremReport verify_bounds(DegreeContext& ctx, unsigned n);
TheoremReport verify_bounds(const FiniteGroup& g, const TensorStructure& s,
                            unsigned n);

struct QuotientCheck {
  unsigned n;
  BigRational group_degree, quotient_degree;
  bool holds;              // d_n(G) <= d_n(G/N)
  bool equality_expected;  // N meets G' trivially
  bool equality;
  bool ok() const { return holds && (!equality_expected || equality); }
};

// d_n(G) <= d_n(G/N) for n = 1..max_n. Throws NotNormal.
std::vector<QuotientCheck> verify_quotient_monotonicity(const FiniteGroup& g,
                                                        const ElementSet& n,
                                                        unsigned max_n);

struct CoprimeCheck {
  unsigned n;
  BigRational product_degree;  // D^wedge_n(G x H), computed directly
  BigRational factor_product;  // D^wedge_n(G) * D^wedge_n(H)
  bool holds;
};

// Builds G x H and all three exterior squares. Throws NotCoprime.
CoprimeCheck verify_coprime_multiplicativity(const FiniteGroup& g,
                                             const FiniteGroup& h, unsigned n,
                                             PairOptions options = {});

struct UnidegreeFlags {
  bool unicentral;           // Z(G) = Z^wedge(G)
  bool unidegree;            // d(G) = d^wedge(G)
  bool multiple_unidegree;   // d_n = D^wedge_n for n <= max_n
};

UnidegreeFlags unidegree_flags(DegreeContext& ctx, unsigned max_n);
UnidegreeFlags unidegree_flags(const FiniteGroup& g, const TensorStructure& s,
                               unsigned max_n);

}  // namespace wedgedeg
