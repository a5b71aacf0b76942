#include "fekete/asym.hpp"
#include "fekete/cli.hpp"

#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fekete");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = fekete::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    v.push_back(line);
  }
  return v;
}

}  // namespace

TEST_CASE("range parsing") {
  using fekete::cli::parse_range;
  CHECK(parse_range("2..4") == std::vector<int>{2, 3, 4});
  CHECK(parse_range("20,40,80") == std::vector<int>{20, 40, 80});
  CHECK(parse_range("2..3,10") == std::vector<int>{2, 3, 10});
  CHECK_THROWS_AS(parse_range(""), fekete::cli::UsageError);
  CHECK_THROWS_AS(parse_range("5..2"), fekete::cli::UsageError);
  CHECK_THROWS_AS(parse_range("1,,2"), fekete::cli::UsageError);
  CHECK_THROWS_AS(parse_range("x"), fekete::cli::UsageError);
  CHECK_THROWS_AS(parse_range("3,"), fekete::cli::UsageError);
}

TEST_CASE("exact command") {
  const auto r = run({"exact", "--N", "2..4", "--kind", "interval"});
  REQUIRE(r.code == 0);
  const auto l = lines(r.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "N,a,b,E0,log_Delta");
  CHECK(l[1].rfind("2,-1,1,-1.3862943611198906,", 0) == 0);
  CHECK(l[2].rfind("3,-1,1,-1.3862943611198906,", 0) == 0);

  const auto pot = run({"exact", "--n", "1", "--p", "1", "--q", "1"});
  REQUIRE(pot.code == 0);
  CHECK(lines(pot.out)[0] == "n,p,q,potential,elliptic_E0,log_Delta_pq");
  CHECK(lines(pot.out)[1] == "1,1,1,0,,0");

  CHECK(run({"exact", "--n", ""}).code == 2);
  CHECK(run({"exact"}).code == 2);
  CHECK(run({"exact", "--n", "3", "--kind", "nonsense"}).code == 2);
  CHECK(run({"exact", "--n", "3", "--p", "1", "--alpha", "0"}).code == 2);
  CHECK(run({"exact", "--n", "3", "--alpha", "-1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"exact", "--N", "1", "--kind", "interval"}).code == 2);
}

TEST_CASE("coeffs command") {
  const auto r = run({"coeffs", "--kind", "interval", "--M", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto e = fekete::expansion_from_json<double>(r.out);
  CHECK(e.tail[0] == 0.25);
  CHECK(e.kind == fekete::ExpansionKind::interval_E0);
  const auto direct = fekete::interval_energy_expansion<double>(2);
  CHECK(e.leading.constant == direct.leading.constant);
  for (const char* key : {"\"n2\"", "\"nlogn\"", "\"n\"", "\"logn\"", "\"const\"", "\"tail\""}) {
    CHECK(r.out.find(key) != std::string::npos);
  }

  const auto pot = run({"coeffs", "--kind", "potential", "--p", "1", "--q", "1", "--M", "3", "--format", "json"});
  const auto sym = fekete::expansion_from_json<double>(pot.out);
  CHECK(sym.leading.logn == -2.25);
  CHECK(fekete::expansion_to_json(sym) ==
        fekete::expansion_to_json(fekete::symmetric_potential_energy_expansion(1.0, 3)));

  const auto ext = run({"coeffs", "--kind", "D", "--alpha", "0.4", "--beta", "1.6", "--M", "12",
                        "--precision", "ext", "--format", "json"});
  REQUIRE(ext.code == 0);
  const auto eq = fekete::expansion_from_json<fekete::quad>(ext.out);
  CHECK(fekete::expansion_to_json(eq) + "\n" == ext.out);

  CHECK(run({"coeffs", "--kind", "interval", "--M", "11"}).code == 2);
  CHECK(run({"coeffs", "--kind", "interval", "--M", "16", "--precision", "ext"}).code == 0);
  CHECK(run({"coeffs", "--kind", "D", "--M", "0"}).code == 2);
  const auto csv = run({"coeffs", "--kind", "lambda", "--M", "1"});
  CHECK(lines(csv.out)[0] == "term,value");
}

TEST_CASE("table, zeros and minimize commands") {
  const auto t = run({"table", "--kind", "interval", "--N", "10,20", "--M", "1"});
  REQUIRE(t.code == 0);
  const auto tl = lines(t.out);
  CHECK(tl[0] == "n,M_prime,exact,truncated,error");
  CHECK(tl.size() == 5);

  const auto z = run({"zeros", "--n", "2", "--alpha", "1", "--beta", "1"});
  REQUIRE(z.code == 0);
  const auto zl = lines(z.out);
  CHECK(zl[0] == "n,alpha,beta,k,x");
  CHECK(zl[2] == "2,1,1,2,0.44721359549995793");

  const auto m = run({"minimize", "--kind", "fekete", "--N", "3"});
  REQUIRE(m.code == 0);
  CHECK(lines(m.out).size() == 4);
  CHECK(run({"minimize", "--n", "2", "--kind", "other"}).code == 2);
  CHECK(run({"minimize", "--n", "2", "--tol", "0"}).code == 2);
}

TEST_CASE("verify command") {
  const auto r = run({"verify", "--kind", "interval", "--N", "20,40,80,160", "--M", "2"});
  CHECK(r.code == 0);
  int slopes = 0;
  for (const auto& line : lines(r.out)) {
    if (line.rfind("slope,", 0) == 0) {
      ++slopes;
      CHECK(line.substr(line.size() - 4) == "pass");
    }
  }
  CHECK(slopes == 3);

  const auto pot = run({"verify", "--kind", "potential", "--p", "0.7", "--q", "1.3", "--n",
                        "20,40,80,160,320", "--M", "2"});
  CHECK(pot.code == 0);

  const auto mini = run({"verify", "--kind", "minimize", "--n", "2..20"});
  CHECK(mini.code == 0);

  // an impossible tolerance is a verification failure, not a usage error
  const auto strict = run({"verify", "--kind", "interval", "--N", "20,40,80", "--M", "1", "--slope-tol", "1e-9"});
  CHECK(strict.code == 1);
  CHECK(strict.out.find(",fail") != std::string::npos);
}

TEST_CASE("output options, precision override and determinism") {
  const auto a = run({"exact", "--n", "1..12", "--p", "0.7", "--q", "1.3", "--format", "json"});
  const auto b = run({"exact", "--n", "1..12", "--p", "0.7", "--q", "1.3", "--format", "json"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"elliptic_E0\": null") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "fekete_cli_test.csv";
  const auto f = run({"exact", "--N", "2..5", "--kind", "interval", "--out", path.string()});
  REQUIRE(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == run({"exact", "--N", "2..5", "--kind", "interval"}).out);
  std::filesystem::remove(path);

  ::setenv("FEKETE_PRECISION", "ext", 1);
  const auto ext = run({"zeros", "--n", "2", "--p", "1", "--q", "1"});
  ::setenv("FEKETE_PRECISION", "bogus", 1);
  const auto bad = run({"zeros", "--n", "2"});
  const auto flag = run({"zeros", "--n", "2", "--precision", "std"});
  ::unsetenv("FEKETE_PRECISION");
  CHECK(lines(ext.out)[2] == "2,1,1,2,0.447213595499957939281834733746255216");
  CHECK(bad.code == 2);
  CHECK(flag.code == 0);

  CHECK(run({"--help"}).code == 0);
  CHECK(run({"exact", "--n", "2", "--format", "xml"}).code == 2);
}
