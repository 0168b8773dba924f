#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "wedgedeg/catalog.hpp"
#include "wedgedeg/cli.hpp"
#include "wedgedeg/error.hpp"
#include "wedgedeg/wedge.hpp"

using namespace wedgedeg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wedgedeg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("wedgedeg_test_" + name);
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_CASE("group specs") {
  SUBCASE("D8") {
    auto s = describe_group_spec("D8");
    CHECK(s.family == GroupFamily::dihedral);
    CHECK(s.parameter == 4);
    CHECK(s.group.order() == 8);
    CHECK(conjugacy_classes(s.group).count() == 5);
  }
  SUBCASE("Q8 has a unique involution") {
    auto g = parse_group_spec("Q8");
    CHECK_FALSE(g.is_abelian());
    int involutions = 0;
    for (Element x = 0; x < g.order(); ++x) involutions += g.element_order(x) == 2;
    CHECK(involutions == 1);
  }
  SUBCASE("products") {
    auto s = describe_group_spec("Z3xD8");
    CHECK(s.family == GroupFamily::product);
    CHECK(s.factors.size() == 2);
    CHECK(s.group.order() == 24);
    CHECK(parse_group_spec("Z2xZ2xZ2").order() == 8);
  }
  SUBCASE("other families") {
    CHECK(parse_group_spec("S4").order() == 24);
    CHECK(parse_group_spec("A4").order() == 12);
    CHECK(parse_group_spec("Q4").is_cyclic());
    CHECK(parse_group_spec("Z1").order() == 1);
  }
  SUBCASE("malformed specs") {
    for (const char* bad : {"D5", "D2", "Q6", "Z0", "Y3", "Z", "", "D8x", "xZ2", "Z-3",
                            "Z99999999999999999999999"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_group_spec(bad), ParseError);
    }
  }
}

TEST_CASE("dihedral presentation and permutation model agree") {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const FiniteGroup a = dihedral_from_presentation(n);
    const FiniteGroup b = dihedral_permutation_model(n);
    CHECK(a.order() == 2 * n);
    CHECK(b.order() == 2 * n);
    DegreeContext ca(a, exterior_square(a)), cb(b, exterior_square(b));
    for (unsigned m = 1; m <= 3; ++m) {
      CHECK(ca.d(m) == cb.d(m));
      CHECK(ca.dwedge(m) == cb.dwedge(m));
    }
  }
}

TEST_CASE("group files") {
  SUBCASE("cayley table") {
    auto p = temp_file("cayley.json",
                       R"({"type": "cayley", "table": [[0,1,2],[1,2,0],[2,0,1]]})");
    auto g = load_group_file(p.string());
    CHECK(g.order() == 3);
    CHECK(describe_group_spec("@" + p.string()).family == GroupFamily::file);
    fs::remove(p);
  }
  SUBCASE("permutations") {
    auto p = temp_file("perm.json", R"({"type": "perm", "degree": 4, "label": "D8",
                                         "generators": [[1,2,3,0],[2,1,0,3]]})");
    auto g = load_group_file(p.string());
    CHECK(g.order() == 8);
    CHECK(g.label() == "D8");
    fs::remove(p);
  }
  SUBCASE("presentation with and without type") {
    auto p = temp_file("pres.json", R"({"type": "presentation", "generators": 2,
                                         "relators": [[1,1],[2,2,2],[1,2,1,2]]})");
    auto q = temp_file("bare.json", R"({"generators": 2,
                                         "relators": [[1,1],[2,2,2],[1,2,1,2]]})");
    CHECK(load_group_file(p.string()).order() == 6);
    CHECK(load_group_file(q.string()).order() == 6);
    fs::remove(p);
    fs::remove(q);
  }
  SUBCASE("errors") {
    auto bad_json = temp_file("bad.json", "{not json");
    auto bad_type = temp_file("type.json", R"({"type": "matrix"})");
    auto not_group = temp_file("ng.json", R"({"type": "cayley", "table": [[0,1],[1,1]]})");
    CHECK_THROWS_AS(load_group_file(bad_json.string()), ParseError);
    CHECK_THROWS_AS(load_group_file(bad_type.string()), ParseError);
    CHECK_THROWS_AS(load_group_file(not_group.string()), InputError);
    CHECK_THROWS_AS(load_group_file("/nonexistent/group.json"), ParseError);
    fs::remove(bad_json);
    fs::remove(bad_type);
    fs::remove(not_group);
  }
}

TEST_CASE("report") {
  auto j = group_report(describe_group_spec("D8"), 3);
  CHECK(j["order"] == 8);
  CHECK(j["classes"] == 5);
  CHECK(j["multiplier_order"] == 2);
  CHECK(j["capable"] == true);
  CHECK(j["degrees"]["d"][0] == "5/8");
  CHECK(j["degrees"]["d"][1] == "11/32");
  CHECK(j["degrees"]["Dwedge"][0] == "7/16");
  CHECK(j["degrees"]["Dwedge"][1] == "23/128");
  CHECK(j["all_bounds_hold"] == true);

  auto q = group_report(describe_group_spec("Q8"), 2);
  CHECK(q["flags"]["multiple_unidegree"] == true);
  CHECK(q["capable"] == false);
}

TEST_CASE("command line") {
  SUBCASE("verify succeeds") {
    auto r = run({"verify", "D8", "--max-n", "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("D8: ok") != std::string::npos);
    CHECK(run({"verify", "Q8", "Z2xZ2", "S3"}).code == kExitOk);
  }
  SUBCASE("report prints json") {
    auto r = run({"report", "D8", "--max-n", "2"});
    REQUIRE(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["degrees"]["Dwedge"][1] == "23/128");
  }
  SUBCASE("report writes a file") {
    const fs::path p = fs::temp_directory_path() / "wedgedeg_test_report.json";
    fs::remove(p);
    CHECK(run({"report", "S3", "--json", p.string()}).code == kExitOk);
    std::ifstream in(p);
    auto j = nlohmann::json::parse(in);
    CHECK(j["degrees"]["d"][1] == "2/9");
    CHECK(j["max_n"] == 4);
    fs::remove(p);
  }
  SUBCASE("table") {
    auto r = run({"table", "dihedral", "4..16"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("family,param,m,computed,closed_form,match\n", 0) == 0);
    CHECK(r.out.find(",false") == std::string::npos);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 1 + 7 * 3);
    auto q = run({"table", "quaternion", "4..12", "--m", "2"});
    CHECK(q.code == kExitOk);
    CHECK(q.out.find(",false") == std::string::npos);
  }
  SUBCASE("input errors") {
    CHECK(run({"verify", "D5"}).code == kExitInputError);
    CHECK(run({"verify", "D8", "--bogus"}).code == kExitInputError);
    CHECK(run({"table", "cyclic", "4..8"}).code == kExitInputError);
    CHECK(run({"table", "dihedral", "8..4"}).code == kExitInputError);
    CHECK(run({}).code == kExitInputError);
    auto r = run({"verify", "D8", "Y3"});
    CHECK(r.code == kExitInputError);
    CHECK(r.err.find("Y3") != std::string::npos);
  }
  SUBCASE("resource errors") {
    CHECK(run({"--coset-limit", "10", "verify", "D8"}).code == kExitResourceError);
    CHECK(run({"verify", "Z40"}).code == kExitResourceError);
  }
  SUBCASE("coset limit from the environment") {
    ::setenv("WEDGEDEG_COSET_LIMIT", "abc", 1);
    CHECK(run({"verify", "Z2"}).code == kExitInputError);
    ::setenv("WEDGEDEG_COSET_LIMIT", "10", 1);
    CHECK(run({"verify", "D8"}).code == kExitResourceError);
    CHECK(run({"--coset-limit", "100000", "verify", "D8"}).code == kExitOk);
    ::unsetenv("WEDGEDEG_COSET_LIMIT");
  }
  SUBCASE("help") { CHECK(run({"--help"}).code == kExitOk); }
  SUBCASE("parallel output matches sequential output") {
    const std::vector<std::string> specs = {"Z6", "D8", "Q8", "S3", "A4", "D10"};
    std::vector<std::string> one = {"verify"}, four = {"verify"};
    one.insert(one.end(), specs.begin(), specs.end());
    four.insert(four.end(), specs.begin(), specs.end());
    one.insert(one.end(), {"--jobs", "1"});
    four.insert(four.end(), {"--jobs", "4"});
    auto a = run(one), b = run(four);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify outcome") {
  VerifyOptions o;
  o.max_n = 2;
  auto ok = verify_spec("D10", o);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.failures.empty());
  CHECK(ok.checks > 0);
  auto bad = verify_spec("Q6", o);
  CHECK(bad.exit_code == kExitInputError);
  CHECK_FALSE(bad.error.empty());
}
