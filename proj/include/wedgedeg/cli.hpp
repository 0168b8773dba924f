#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wedgedeg/catalog.hpp"
#include "wedgedeg/degrees.hpp"
#include "wedgedeg/rational.hpp"
#include "wedgedeg/wedge.hpp"

namespace wedgedeg {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitInputError = 2,
  kExitResourceError = 3,
};

// Everything `report` prints for one group, degrees for n = 1..max_n.
nlohmann::json group_report(const GroupSpec& spec, unsigned max_n,
                            const PairOptions& options = {});

struct VerifyOptions {
  unsigned max_n = 3;
  bool oracle = true;
  PairOptions pair;
};

struct VerifyOutcome {
  std::string spec;
  int exit_code = kExitOk;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string error;  // set for input and resource errors
};

// Bound checks plus, with the oracle on, brute force, homology, closed form
// and product cross-checks. Never throws for input or resource errors; they
// are reported through the exit code.
VerifyOutcome verify_spec(const std::string& spec, const VerifyOptions& options);
// The same checks against an already built context for spec.group.
VerifyOutcome verify_group(const GroupSpec& spec, DegreeContext& ctx,
                           const VerifyOptions& options);

enum class TableFamily { dihedral, quaternion };

struct TableRow {
  TableFamily family;
  std::uint64_t param;  // n in D_{2n} or Q_{4n}
  unsigned m;
  BigRational computed, closed_form;
  bool match;
};

// Rows for every group order in [lo, hi] belonging to the family and every
// m in 1..max_m. The exterior degree is computed from the group itself.
std::vector<TableRow> closed_form_table(TableFamily family, std::uint64_t lo,
                                        std::uint64_t hi, unsigned max_m,
                                        const PairOptions& options = {});
std::string table_csv(const std::vector<TableRow>& rows);

// Full command line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace wedgedeg
