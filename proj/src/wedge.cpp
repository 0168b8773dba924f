#include "wedgedeg/wedge.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "wedgedeg/error.hpp"

namespace wedgedeg {

namespace {

// Letters for an element of one copy; the identity is left out because
// both identity generators are killed by the multiplication-table relators.
void push_letter(Word& w, Element x, Letter l) {
  if (x != 0) w.push_back(l);
}

void push_commutator(Word& w, std::size_t n, Element g, Element h) {
  push_letter(w, g, left_letter(g));
  push_letter(w, h, right_letter(n, h));
  push_letter(w, g, -left_letter(g));
  push_letter(w, h, -right_letter(n, h));
}

Word commutator_word(std::size_t n, Element x, Element y) {
  return {left_letter(x), right_letter(n, y), -left_letter(x),
          -right_letter(n, y)};
}

}  // namespace

Presentation build_pair_presentation(const FiniteGroup& g, PairingMode mode,
                                     std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap) throw GroupTooLarge(n, cap);
  std::vector<Word> rels;
  rels.reserve(2 * n * n + 2 * n * n * n + n);
  // Multiplication table of each copy: x y (xy)^-1.
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = g.mul(x, y);
      rels.push_back({left_letter(x), left_letter(y), -left_letter(xy)});
      rels.push_back({right_letter(n, x), right_letter(n, y),
                      -right_letter(n, xy)});
    }
  // [g, h']^k [g^k, (h^k)']^-1 and the same with k' conjugating.
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element k = 0; k < n; ++k) {
        const Element ak = g.conj(a, k), bk = g.conj(b, k);
        for (int copy = 0; copy < 2; ++copy) {
          const Letter kl = copy == 0 ? left_letter(k) : right_letter(n, k);
          Word w;
          push_letter(w, k, -kl);
          push_commutator(w, n, a, b);
          push_letter(w, k, kl);
          // inverse of [ak, bk']: bk' ak bk'^-1 ak^-1
          push_letter(w, bk, right_letter(n, bk));
          push_letter(w, ak, left_letter(ak));
          push_letter(w, bk, -right_letter(n, bk));
          push_letter(w, ak, -left_letter(ak));
          rels.push_back(std::move(w));
        }
      }
  if (mode == PairingMode::exterior)
    for (Element x = 0; x < n; ++x) {
      Word w;
      push_commutator(w, n, x, x);
      rels.push_back(std::move(w));
    }
  return Presentation(2 * n, std::move(rels));
}

TensorStructure build_tensor_structure(const FiniteGroup& g, PairingMode mode,
                                       PairOptions options) {
  const std::size_t n = g.order();
  Presentation pres = build_pair_presentation(g, mode, options.group_cap);
  CosetTable table = todd_coxeter(pres, {}, options.coset_limit);

  auto d = std::make_shared<TensorStructure::Data>(TensorStructure::Data{
      g, mode, table, pres, {}, {}, {}, FiniteGroup(), {}, {}, {}, {}, {}});

  for (Element x = 0; x < n; ++x) {
    d->left.push_back(table.image(0, left_letter(x)));
    d->right.push_back(table.image(0, right_letter(n, x)));
  }

  // Projection onto G along a spanning tree, then checked on every edge so
  // that it is a well-defined homomorphism.
  const std::size_t m = table.coset_count();
  const CosetTree tree = coset_tree(table);
  auto letter_image = [&](Letter l) -> Element {
    const auto gen = static_cast<Element>((l > 0 ? l : -l) - 1);
    const Element x = gen < n ? gen : static_cast<Element>(gen - n);
    return l > 0 ? x : g.inv(x);
  };
  d->ambient_projection.assign(m, 0);
  for (std::size_t i = 1; i < tree.bfs_order.size(); ++i) {
    const auto c = static_cast<std::size_t>(tree.bfs_order[i]);
    d->ambient_projection[c] = g.mul(
        d->ambient_projection[static_cast<std::size_t>(tree.parent[c])],
        letter_image(tree.letter[c]));
  }
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t col = 0; col < table.column_count(); ++col) {
      const auto gen = static_cast<Letter>(col / 2 + 1);
      const Letter l = (col & 1) ? -gen : gen;
      if (d->ambient_projection[static_cast<std::size_t>(table.entry(c, col))] !=
          g.mul(d->ambient_projection[c], letter_image(l)))
        throw std::logic_error("projection onto G is not a homomorphism");
    }
  for (const Word& r : pres.relators()) {
    Element v = 0;
    for (Letter l : r) v = g.mul(v, letter_image(l));
    if (v != 0) throw std::logic_error("relator does not project to 1");
  }

  // Pairing elements [left(x), right(y)] as ambient elements.
  std::vector<std::int32_t> pair_coset(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      pair_coset[x * n + y] = table.apply(0, commutator_word(n, x, y));

  // One generating word per distinct pairing element.
  std::vector<Word> gen_words;
  {
    std::vector<char> taken(m, 0);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const auto c = static_cast<std::size_t>(pair_coset[x * n + y]);
        if (c != 0 && !taken[c]) {
          taken[c] = 1;
          gen_words.push_back(commutator_word(n, x, y));
        }
      }
  }

  // Closure of the pairing elements inside the regular action.
  std::vector<std::int32_t> local_of(m, -1);
  std::vector<std::int32_t>& elems = d->pairing_in_ambient;
  std::vector<std::size_t> parent{0}, parent_gen{0};
  elems.push_back(0);
  local_of[0] = 0;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t s = 0; s < gen_words.size(); ++s) {
      const std::int32_t c =
          table.apply(static_cast<std::size_t>(elems[i]), gen_words[s]);
      if (local_of[c] < 0) {
        local_of[c] = static_cast<std::int32_t>(elems.size());
        elems.push_back(c);
        parent.push_back(i);
        parent_gen.push_back(s);
      }
    }
  const std::size_t k = elems.size();
  std::vector<Element> ptable(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    Element* row = ptable.data() + a * k;
    row[0] = static_cast<Element>(a);
    for (std::size_t b = 1; b < k; ++b) {
      const auto prev = static_cast<std::size_t>(elems[row[parent[b]]]);
      row[b] = static_cast<Element>(
          local_of[table.apply(prev, gen_words[parent_gen[b]])]);
    }
  }
  d->pairing_group = FiniteGroup::from_trusted_table(k, std::move(ptable));
  for (std::int32_t c : elems)
    d->pairing_projection.push_back(
        d->ambient_projection[static_cast<std::size_t>(c)]);
  d->pair_table.resize(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    d->pair_table[i] = static_cast<Element>(local_of[pair_coset[i]]);

  d->classes = conjugacy_classes(g);
  if (mode == PairingMode::exterior) {
    for (Element r : d->classes.representatives) {
      Bitset b(n);
      for (Element y = 0; y < n; ++y)
        if (d->pair_table[r * n + y] == 0) b.set(y);
      d->rep_centralizers.emplace_back(g, std::move(b));
    }
  }
  return TensorStructure(std::move(d));
}

TensorStructure exterior_square(const FiniteGroup& g, PairOptions options) {
  return build_tensor_structure(g, PairingMode::exterior, options);
}

TensorStructure tensor_square(const FiniteGroup& g, PairOptions options) {
  return build_tensor_structure(g, PairingMode::tensor, options);
}

FiniteGroup TensorStructure::ambient_group(std::size_t cap) const {
  if (ambient_order() > cap)
    throw TooLarge("ambient group of order " + std::to_string(ambient_order()) +
                   " exceeds " + std::to_string(cap));
  return coset_action_to_group(d_->ambient, d_->presentation).group;
}

Element wedge(const TensorStructure& s, Element x, Element y) {
  if (s.mode() != PairingMode::exterior)
    throw WrongMode("wedge needs an exterior square");
  return s.pair(x, y);
}

SchurData schur_multiplier(const TensorStructure& s) {
  if (s.mode() != PairingMode::exterior)
    throw WrongMode("the Schur multiplier is read off the exterior square");
  const FiniteGroup& w = s.pairing_group();
  Bitset b(w.order());
  for (Element p = 0; p < w.order(); ++p)
    if (s.project(p) == 0) b.set(p);
  ElementSet m(w, std::move(b));
  auto inv = abelian_invariants(m);
  const std::size_t order = m.size();
  return SchurData{std::move(m), order, std::move(inv)};
}

ElementSet exterior_centralizer(const TensorStructure& s, Element x) {
  if (s.mode() != PairingMode::exterior)
    throw WrongMode("exterior centralizers need an exterior square");
  const auto& cc = s.classes();
  const std::size_t k = cc.class_of[x];
  const ElementSet& base = s.representative_exterior_centralizers()[k];
  // x = rep^g, so C(x) = C(rep)^g.
  return conjugate(base, cc.conjugator[x]);
}

ElementSet exterior_center(const TensorStructure& s) {
  if (s.mode() != PairingMode::exterior)
    throw WrongMode("the exterior center needs an exterior square");
  const FiniteGroup& g = s.group();
  Bitset b(g.order());
  b.set();
  for (Element x = 0; x < g.order(); ++x)
    b &= exterior_centralizer(s, x).bits();
  return {g, std::move(b)};
}

bool is_capable(const TensorStructure& s) {
  return exterior_center(s).is_trivial();
}

NablaJ2 nabla_and_j2(const TensorStructure& s) {
  if (s.mode() != PairingMode::tensor)
    throw WrongMode("nabla and J2 live in the tensor square");
  const FiniteGroup& t = s.pairing_group();
  std::vector<Element> diag;
  for (Element x = 0; x < s.group().order(); ++x) diag.push_back(s.pair(x, x));
  ElementSet nabla = generate_subgroup(t, diag);
  Bitset b(t.order());
  for (Element p = 0; p < t.order(); ++p)
    if (s.project(p) == 0) b.set(p);
  return {std::move(nabla), ElementSet(t, std::move(b))};
}

}  // namespace wedgedeg
