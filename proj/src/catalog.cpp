#include "wedgedeg/catalog.hpp"

#include <charconv>
#include <fstream>

#include "json.hpp"

#include "wedgedeg/error.hpp"

namespace wedgedeg {

namespace {

std::uint64_t parse_count(std::string_view digits, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size())
    throw ParseError("bad group spec: " + std::string(whole));
  return v;
}

Word repeat(Letter l, std::uint64_t times) { return Word(times, l); }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GroupSpec parse_factor(std::string_view f, std::size_t coset_limit) {
  if (f.size() < 2)
    throw ParseError("bad group spec: " + std::string(f));
  const char kind = f.front();
  const std::uint64_t n = parse_count(f.substr(1), f);
  GroupSpec spec{std::string(f), GroupFamily::cyclic, n, {}, {}};
  switch (kind) {
    case 'Z':
      if (n < 1) throw ParseError("cyclic order must be positive: " + spec.text);
      spec.group = cyclic_group(n);
      break;
    case 'D':
      if (n < 4 || n % 2 != 0)
        throw ParseError("dihedral order must be even and at least 4: " +
                         spec.text);
      spec.family = GroupFamily::dihedral;
      spec.parameter = n / 2;
      spec.group = dihedral_from_presentation(n / 2, coset_limit);
      break;
    case 'Q':
      if (n < 4 || n % 4 != 0)
        throw ParseError("quaternion order must be a positive multiple of 4: " +
                         spec.text);
      spec.family = GroupFamily::quaternion;
      spec.parameter = n / 4;
      spec.group = quaternion_from_presentation(n / 4, coset_limit);
      break;
    case 'S':
      if (n < 1) throw ParseError("bad symmetric degree: " + spec.text);
      spec.family = GroupFamily::symmetric;
      spec.group = symmetric_group(n);
      break;
    case 'A':
      if (n < 1) throw ParseError("bad alternating degree: " + spec.text);
      spec.family = GroupFamily::alternating;
      spec.group = alternating_group(n);
      break;
    default:
      throw ParseError("unknown group family in spec: " + spec.text);
  }
  return spec;
}

}  // namespace

FiniteGroup cyclic_group(std::uint64_t n) {
  if (n < 1) throw InputError("cyclic order must be positive");
  std::vector<Element> table(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      table[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteGroup::from_trusted_table(n, std::move(table),
                                         "Z" + std::to_string(n));
}

FiniteGroup symmetric_group(std::uint64_t n) {
  if (n < 1) throw InputError("symmetric degree must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation cycle(n), swap(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
      swap[i] = i;
    }
    std::swap(swap[0], swap[1]);
    gens = {cycle, swap};
  }
  return FiniteGroup::from_permutation_generators(n, gens, kDefaultClosureCap,
                                                  "S" + std::to_string(n));
}

FiniteGroup alternating_group(std::uint64_t n) {
  if (n < 1) throw InputError("alternating degree must be positive");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    Permutation p(n);
    for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
    p[0] = 1;
    p[1] = k;
    p[k] = 0;
    gens.push_back(std::move(p));
  }
  return FiniteGroup::from_permutation_generators(n, gens, kDefaultClosureCap,
                                                  "A" + std::to_string(n));
}

Presentation dihedral_presentation(std::uint64_t n) {
  if (n < 2) throw InputError("dihedral parameter must be at least 2");
  return Presentation(2, {repeat(1, 2), repeat(2, n), {1, 2, 1, 2}});
}

FiniteGroup group_from_presentation(const Presentation& p, std::string label,
                                    std::size_t coset_limit) {
  const CosetTable t = todd_coxeter(p, {}, coset_limit);
  return coset_action_to_group(t, p).group.with_label(std::move(label));
}

FiniteGroup dihedral_from_presentation(std::uint64_t n,
                                       std::size_t coset_limit) {
  return group_from_presentation(dihedral_presentation(n),
                                 "D" + std::to_string(2 * n), coset_limit);
}

FiniteGroup dihedral_permutation_model(std::uint64_t n) {
  if (n < 2) throw InputError("dihedral parameter must be at least 2");
  // n = 2 acts on 4 points: the Klein four-group is not faithful on 2.
  const std::uint64_t deg = n == 2 ? 4 : n;
  Permutation rot(deg), ref(deg);
  if (n == 2) {
    rot = {1, 0, 3, 2};
    ref = {2, 3, 0, 1};
  } else {
    for (std::uint32_t i = 0; i < n; ++i) {
      rot[i] = static_cast<std::uint32_t>((i + 1) % n);
      ref[i] = static_cast<std::uint32_t>((n - i) % n);
    }
  }
  return FiniteGroup::from_permutation_generators(
      deg, {rot, ref}, kDefaultClosureCap, "D" + std::to_string(2 * n));
}

Presentation quaternion_presentation(std::uint64_t n) {
  if (n < 1) throw InputError("quaternion parameter must be positive");
  const Word an = repeat(1, n);
  return Presentation(2, {concat(an, {-2, -2}), concat(an, {-2, -1, -2, -1})});
}

FiniteGroup quaternion_from_presentation(std::uint64_t n,
                                         std::size_t coset_limit) {
  return group_from_presentation(quaternion_presentation(n),
                                 "Q" + std::to_string(4 * n), coset_limit);
}

FiniteGroup load_group_file(const std::string& path, std::size_t coset_limit) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  try {
    const std::string label = j.value("label", std::string());
    // A bare {"generators", "relators"} object is a presentation.
    const std::string type =
        j.contains("type") ? j.at("type").get<std::string>()
        : j.contains("relators") ? "presentation"
                                 : "";
    if (type == "cayley")
      return FiniteGroup::from_cayley_table(
          j.at("table").get<std::vector<std::vector<Element>>>(), label);
    if (type == "perm")
      return FiniteGroup::from_permutation_generators(
          j.at("degree").get<std::size_t>(),
          j.at("generators").get<std::vector<Permutation>>(),
          kDefaultClosureCap, label);
    if (type == "presentation") {
      Presentation pres(j.at("generators").get<std::size_t>(),
                        j.at("relators").get<std::vector<Word>>());
      return group_from_presentation(pres, label, coset_limit);
    }
    throw ParseError("unknown group file type \"" + type + "\" in " + path);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed group file " + path + ": " + e.what());
  }
}

GroupSpec describe_group_spec(std::string_view text, std::size_t coset_limit) {
  if (text.empty()) throw ParseError("empty group spec");
  if (text.front() == '@') {
    GroupSpec spec{std::string(text), GroupFamily::file, 0, {}, {}};
    spec.group = load_group_file(std::string(text.substr(1)), coset_limit);
    if (spec.group.label().empty())
      spec.group = spec.group.with_label(spec.text);
    return spec;
  }
  std::vector<GroupSpec> factors;
  std::size_t start = 0;
  for (;;) {
    const std::size_t x = text.find('x', start);
    factors.push_back(parse_factor(
        text.substr(start, x == std::string_view::npos ? x : x - start),
        coset_limit));
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  if (factors.size() == 1) return std::move(factors.front());
  GroupSpec spec{std::string(text), GroupFamily::product, 0, {}, {}};
  spec.group = factors.front().group;
  for (std::size_t i = 1; i < factors.size(); ++i)
    spec.group = direct_product(spec.group, factors[i].group);
  spec.factors = std::move(factors);
  return spec;
}

FiniteGroup parse_group_spec(std::string_view text, std::size_t coset_limit) {
  return describe_group_spec(text, coset_limit).group;
}

}  // namespace wedgedeg
