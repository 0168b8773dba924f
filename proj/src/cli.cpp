#include "wedgedeg/cli.hpp"

#include <atomic>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "wedgedeg/degrees.hpp"
#include "wedgedeg/error.hpp"
#include "wedgedeg/homology.hpp"

namespace wedgedeg {

namespace {

using nlohmann::json;

const char* claim_name(EqualityClaim c) {
  switch (c) {
    case EqualityClaim::none: return "none";
    case EqualityClaim::if_condition: return "if";
    case EqualityClaim::iff_condition: return "iff";
  }
  return "none";
}

json entry_json(const TheoremEntry& e) {
  json j{{"id", e.id}, {"n", e.n}, {"applicable", e.applicable}};
  if (e.applicable) {
    j["lhs"] = e.lhs.to_string();
    j["rhs"] = e.rhs.to_string();
    j["holds"] = e.holds;
    j["equality"] = e.equality;
    j["equality_claim"] = claim_name(e.claim);
    if (e.equality_condition_met)
      j["equality_condition"] = *e.equality_condition_met;
  }
  j["ok"] = e.ok();
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int exit_for(const std::exception_ptr& p, std::string& message) {
  try {
    std::rethrow_exception(p);
  } catch (const InputError& e) {
    message = e.what();
    return kExitInputError;
  } catch (const ResourceError& e) {
    message = e.what();
    return kExitResourceError;
  } catch (const std::exception& e) {
    message = std::string("internal error: ") + e.what();
    return kExitViolation;
  }
}

class Checker {
 public:
  explicit Checker(VerifyOutcome& out) : out_(out) {}
  void expect(bool ok, const std::string& what) {
    ++out_.checks;
    if (!ok) out_.failures.push_back(what);
  }

 private:
  VerifyOutcome& out_;
};

// D^wedge_n of a group for n = 1..max_n.
std::vector<BigRational> wedge_degrees(const FiniteGroup& g, unsigned max_n,
                                       const PairOptions& options) {
  DegreeContext ctx(g, exterior_square(g, options));
  std::vector<BigRational> out;
  for (unsigned n = 1; n <= max_n; ++n) out.push_back(ctx.dwedge(n));
  return out;
}

void run_oracles(const GroupSpec& spec, DegreeContext& ctx,
                 const VerifyOptions& options, Checker& check) {
  const FiniteGroup& g = ctx.group();
  const TensorStructure& s = ctx.exterior();
  const unsigned max_n = options.max_n;

  for (unsigned n = 1; n <= max_n; ++n) {
    BigInt tuples = 1;
    for (unsigned i = 0; i <= n; ++i) tuples *= g.order();
    if (tuples > kDefaultBruteForceCap) continue;
    const BigRational bd = brute_force_degree(g, n, RelationKind::commuting);
    const BigRational bw =
        brute_force_degree(g, n, RelationKind::wedge_trivial, &s);
    check.expect(bd == ctx.d(n), "d_" + std::to_string(n) + " = " +
                                     ctx.d(n).to_string() +
                                     " but brute force gives " + bd.to_string());
    check.expect(bw == ctx.dwedge(n),
                 "D^wedge_" + std::to_string(n) + " = " +
                     ctx.dwedge(n).to_string() + " but brute force gives " +
                     bw.to_string());
  }

  for (unsigned n = 1; n <= max_n; ++n) {
    DegreeOptions full;
    full.class_reduction = false;
    DegreeOptions shuffled;
    shuffled.shuffle_seed = 0x5eed + n;
    check.expect(commutativity_degree_n(g, n, full) == ctx.d(n) &&
                     commutativity_degree_n(g, n, shuffled) == ctx.d(n),
                 "class-reduced d_" + std::to_string(n) +
                     " differs from the unreduced count");
    check.expect(exterior_degree_n(g, s, n, full) == ctx.dwedge(n) &&
                     exterior_degree_n(g, s, n, shuffled) == ctx.dwedge(n),
                 "class-reduced D^wedge_" + std::to_string(n) +
                     " differs from the unreduced count");
  }

  const SchurData schur = schur_multiplier(s);
  check.expect(s.pairing_group().order() ==
                   schur.multiplier_order * ctx.derived().size(),
               "|G^G| = " + std::to_string(s.pairing_group().order()) +
                   " but |M(G)||G'| = " +
                   std::to_string(schur.multiplier_order * ctx.derived().size()));
  if (g.order() <= kDefaultHomologyCap) {
    const auto h2 = bar_h2(g);
    check.expect(h2 == schur.abelian_invariants,
                 "multiplier invariants " + join(schur.abelian_invariants) +
                     " but bar H2 gives " + join(h2));
    const auto h1 = bar_h1(g);
    const auto ab = abelian_invariants(quotient(g, ctx.derived()));
    check.expect(h1 == ab, "abelianization " + join(ab) +
                               " but bar H1 gives " + join(h1));
  }

  if (spec.family == GroupFamily::dihedral ||
      spec.family == GroupFamily::quaternion) {
    for (unsigned m = 1; m <= max_n; ++m) {
      const BigRational cf = spec.family == GroupFamily::dihedral
                                 ? dihedral_closed_form(spec.parameter, m)
                                 : quaternion_closed_form(spec.parameter, m);
      check.expect(ctx.dwedge(m) == cf,
                   "D^wedge_" + std::to_string(m) + " = " +
                       ctx.dwedge(m).to_string() + " but the closed form is " +
                       cf.to_string());
    }
  }
  if (spec.family == GroupFamily::quaternion) {
    for (unsigned n = 1; n <= max_n; ++n)
      check.expect(ctx.d(n) == ctx.dwedge(n),
                   "quaternion group is not unidegree at n = " +
                       std::to_string(n));
  }
  if (spec.family == GroupFamily::dihedral) {
    const FiniteGroup perm = dihedral_permutation_model(spec.parameter);
    DegreeContext pctx(perm, exterior_square(perm, options.pair));
    for (unsigned n = 1; n <= max_n; ++n)
      check.expect(pctx.d(n) == ctx.d(n) && pctx.dwedge(n) == ctx.dwedge(n),
                   "presentation and permutation model disagree at n = " +
                       std::to_string(n));
  }

  if (spec.family == GroupFamily::product) {
    // Split off the first factor; compare with the rest when coprime.
    FiniteGroup rest = spec.factors[1].group;
    for (std::size_t i = 2; i < spec.factors.size(); ++i)
      rest = direct_product(rest, spec.factors[i].group);
    const FiniteGroup& first = spec.factors[0].group;
    if (std::gcd(first.order(), rest.order()) == 1) {
      const auto a = wedge_degrees(first, max_n, options.pair);
      const auto b = wedge_degrees(rest, max_n, options.pair);
      for (unsigned n = 1; n <= max_n; ++n)
        check.expect(ctx.dwedge(n) == a[n - 1] * b[n - 1],
                     "D^wedge_" + std::to_string(n) +
                         " of the coprime product is " +
                         ctx.dwedge(n).to_string() + ", factors give " +
                         (a[n - 1] * b[n - 1]).to_string());
    }
  }
}

}  // namespace

json group_report(const GroupSpec& spec, unsigned max_n,
                  const PairOptions& options) {
  if (max_n < 1) throw InputError("--max-n must be at least 1");
  const FiniteGroup& g = spec.group;
  DegreeContext ctx(g, exterior_square(g, options));
  const TensorStructure& s = ctx.exterior();
  const SchurData schur = schur_multiplier(s);
  const UnidegreeFlags flags = unidegree_flags(ctx, max_n);

  json j;
  j["group"] = g.label().empty() ? spec.text : g.label();
  j["order"] = g.order();
  if (spec.family == GroupFamily::dihedral ||
      spec.family == GroupFamily::quaternion)
    j["parameter_n"] = spec.parameter;
  j["max_n"] = max_n;
  j["classes"] = ctx.classes().count();
  j["center_order"] = ctx.center().size();
  j["exterior_center_order"] = ctx.exterior_center().size();
  j["derived_order"] = ctx.derived().size();
  j["multiplier_order"] = schur.multiplier_order;
  j["multiplier_invariants"] = schur.abelian_invariants;
  j["exterior_square_order"] = s.pairing_group().order();
  j["capable"] = ctx.exterior_center().is_trivial();
  j["flags"] = {{"abelian", ctx.abelian()},
                {"cyclic", ctx.cyclic()},
                {"unicentral", flags.unicentral},
                {"unidegree", flags.unidegree},
                {"multiple_unidegree", flags.multiple_unidegree}};
  json d = json::array(), w = json::array(), theorems = json::array();
  bool all_ok = true;
  for (unsigned n = 1; n <= max_n; ++n) {
    d.push_back(ctx.d(n).to_string());
    w.push_back(ctx.dwedge(n).to_string());
    const TheoremReport rep = verify_bounds(ctx, n);
    all_ok = all_ok && rep.all_ok();
    for (const auto& e : rep.entries) theorems.push_back(entry_json(e));
  }
  j["degrees"] = {{"d", d}, {"Dwedge", w}};
  j["theorems"] = theorems;
  j["all_bounds_hold"] = all_ok;
  return j;
}

VerifyOutcome verify_group(const GroupSpec& spec, DegreeContext& ctx,
                           const VerifyOptions& options) {
  VerifyOutcome out;
  out.spec = spec.text;
  try {
    if (options.max_n < 1) throw InputError("--max-n must be at least 1");
    Checker check(out);
    for (unsigned n = 1; n <= options.max_n; ++n)
      for (const TheoremEntry& e : verify_bounds(ctx, n).entries) {
        if (!e.applicable) continue;
        check.expect(e.ok(), e.id + " n=" + std::to_string(n) + ": " +
                                 e.lhs.to_string() + " vs " +
                                 e.rhs.to_string() +
                                 (e.note.empty() ? "" : " (" + e.note + ")"));
      }
    if (options.oracle) run_oracles(spec, ctx, options, check);
    out.exit_code = out.failures.empty() ? kExitOk : kExitViolation;
  } catch (...) {
    out.exit_code = exit_for(std::current_exception(), out.error);
  }
  return out;
}

VerifyOutcome verify_spec(const std::string& text,
                          const VerifyOptions& options) {
  try {
    if (options.max_n < 1) throw InputError("--max-n must be at least 1");
    const GroupSpec spec =
        describe_group_spec(text, options.pair.coset_limit);
    DegreeContext ctx(spec.group, exterior_square(spec.group, options.pair));
    return verify_group(spec, ctx, options);
  } catch (...) {
    VerifyOutcome out;
    out.spec = text;
    out.exit_code = exit_for(std::current_exception(), out.error);
    return out;
  }
}

std::vector<TableRow> closed_form_table(TableFamily family, std::uint64_t lo,
                                        std::uint64_t hi, unsigned max_m,
                                        const PairOptions& options) {
  if (lo > hi) throw InputError("empty range");
  if (max_m < 1) throw InputError("--m must be at least 1");
  const std::uint64_t step = family == TableFamily::dihedral ? 2 : 4;
  const std::uint64_t first_order = family == TableFamily::dihedral ? 4 : 4;
  std::vector<TableRow> rows;
  for (std::uint64_t order = std::max(lo, first_order); order <= hi; ++order) {
    if (order % step != 0) continue;
    const std::uint64_t param = order / step;
    const FiniteGroup g =
        family == TableFamily::dihedral
            ? dihedral_from_presentation(param, options.coset_limit)
            : quaternion_from_presentation(param, options.coset_limit);
    DegreeContext ctx(g, exterior_square(g, options));
    for (unsigned m = 1; m <= max_m; ++m) {
      TableRow r{family, param, m, ctx.dwedge(m),
                 family == TableFamily::dihedral
                     ? dihedral_closed_form(param, m)
                     : quaternion_closed_form(param, m),
                 false};
      r.match = r.computed == r.closed_form;
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) throw InputError("no group of the family in that range");
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "family,param,m,computed,closed_form,match\n";
  for (const auto& r : rows)
    os << (r.family == TableFamily::dihedral ? "dihedral" : "quaternion")
       << ',' << r.param << ',' << r.m << ',' << r.computed << ','
       << r.closed_form << ',' << (r.match ? "true" : "false") << '\n';
  return os.str();
}

namespace {

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) throw std::invalid_argument(s);
    std::size_t p1 = 0, p2 = 0;
    const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    const auto lo = std::stoull(a, &p1);
    const auto hi = std::stoull(b, &p2);
    if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::exception&) {
    throw ParseError("range must look like lo..hi: " + s);
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exterior and commutativity degrees of finite groups"};
  app.require_subcommand(1);
  std::optional<std::size_t> coset_limit;
  app.add_option("--coset-limit", coset_limit,
                 "Coset enumeration cap (overrides WEDGEDEG_COSET_LIMIT)");

  std::string report_spec, report_json;
  unsigned report_max_n = 4;
  auto* report = app.add_subcommand("report", "Degrees and invariants as JSON");
  report->add_option("spec", report_spec, "Group spec")->required();
  report->add_option("--max-n", report_max_n, "Largest n");
  report->add_option("--json", report_json, "Write the JSON to this file");

  std::vector<std::string> verify_specs;
  unsigned verify_max_n = 3, jobs = 1;
  std::string oracle = "on";
  auto* verify = app.add_subcommand("verify", "Check bounds and oracles");
  verify->add_option("spec", verify_specs, "Group specs")->required();
  verify->add_option("--max-n", verify_max_n, "Largest n");
  verify->add_option("--oracle", oracle, "Cross-checks")
      ->check(CLI::IsMember({"on", "off"}));
  verify->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u));

  std::string family, range, csv;
  unsigned max_m = 3;
  auto* table = app.add_subcommand("table", "Closed form comparison as CSV");
  table->add_option("family", family, "dihedral or quaternion")
      ->required()
      ->check(CLI::IsMember({"dihedral", "quaternion"}));
  table->add_option("range", range, "Group orders lo..hi")->required();
  table->add_option("--m", max_m, "Largest m");
  table->add_option("--csv", csv, "Write the CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    PairOptions pair;
    pair.coset_limit = coset_limit ? *coset_limit : coset_limit_from_env();
    if (pair.coset_limit == 0) throw InputError("--coset-limit must be positive");

    if (*report) {
      const GroupSpec spec = describe_group_spec(report_spec, pair.coset_limit);
      const json j = group_report(spec, report_max_n, pair);
      if (report_json.empty()) {
        out << j.dump(2) << '\n';
      } else {
        write_file(report_json, j.dump(2) + "\n");
        out << "wrote " << report_json << '\n';
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions vo;
      vo.max_n = verify_max_n;
      vo.oracle = oracle == "on";
      vo.pair = pair;
      std::vector<VerifyOutcome> results(verify_specs.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < verify_specs.size();)
          results[i] = verify_spec(verify_specs[i], vo);
      };
      std::vector<std::thread> pool;
      const unsigned threads =
          std::min<unsigned>(jobs, static_cast<unsigned>(verify_specs.size()));
      for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
      worker();
      for (auto& t : pool) t.join();

      bool input = false, resource = false, violation = false;
      for (const auto& r : results) {
        switch (r.exit_code) {
          case kExitOk:
            out << r.spec << ": ok (" << r.checks << " checks)\n";
            break;
          case kExitViolation:
            violation = true;
            out << r.spec << ": FAILED " << r.failures.size() << " of "
                << r.checks << " checks\n";
            for (const auto& f : r.failures) out << "  " << f << '\n';
            if (!r.error.empty()) out << "  " << r.error << '\n';
            break;
          case kExitInputError:
            input = true;
            err << r.spec << ": input error: " << r.error << '\n';
            break;
          default:
            resource = true;
            err << r.spec << ": resource limit: " << r.error << '\n';
            break;
        }
      }
      if (input) return kExitInputError;
      if (resource) return kExitResourceError;
      return violation ? kExitViolation : kExitOk;
    }

    const auto [lo, hi] = parse_range(range);
    const auto rows = closed_form_table(
        family == "dihedral" ? TableFamily::dihedral : TableFamily::quaternion,
        lo, hi, max_m, pair);
    const std::string text = table_csv(rows);
    if (csv.empty())
      out << text;
    else
      write_file(csv, text);
    const bool all = std::all_of(rows.begin(), rows.end(),
                                 [](const TableRow& r) { return r.match; });
    if (!csv.empty())
      out << "wrote " << rows.size() << " rows to " << csv
          << (all ? "" : " (mismatches present)") << '\n';
    return all ? kExitOk : kExitViolation;
  } catch (...) {
    std::string message;
    const int code = exit_for(std::current_exception(), message);
    err << "error: " << message << '\n';
    return code;
  }
}

}  // namespace wedgedeg
