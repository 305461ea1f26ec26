#include <doctest.h>

#include <fstream>
#include <sstream>

#include "starcrit/cli.hpp"
#include "test_util.hpp"

using namespace starcrit;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string &name) {
  std::ifstream in(test::golden_dir() / name);
  REQUIRE_MESSAGE(in.good(), ("missing golden file " + name).c_str());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string fixtures() { return (test::data_dir() / "fixtures").string(); }

}  // namespace

TEST_CASE("compute star worked example prints the exact group") {
  CliResult r = run_cli({"compute", "--star", "2,3,4,4,6,9,9,10,15,18,18"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z/6 x Z/6 x Z/6 x Z/18 x Z/18\n");
}

TEST_CASE("compute rejects non-structures with the exact rational sum") {
  CliResult r = run_cli({"compute", "--star", "2,3,5"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("sum = 31/30") != std::string::npos);
}

TEST_CASE("compute oracle mode prints both paths") {
  CliResult r = run_cli({"compute", "--star", "2,4,6,12", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "fast-formula: Z/2 x Z/2\nsnf-oracle: Z/2 x Z/2\n");
}

TEST_CASE("compute complete graph") {
  CliResult r = run_cli({"compute", "--complete", "1,3,5,11"});
  CHECK(r.code == 0);
  CHECK(r.out == "Z/2 x Z/2\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({"compute"}).code == 2);
  CHECK(run_cli({"compute", "--star", "2,2", "--complete", "1,1"}).code == 2);
  CHECK(run_cli({"nonsense"}).code == 2);
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"enumerate"}).code == 2);  // --n required
}

TEST_CASE("enumerate jsonl matches its golden file") {
  CliResult r = run_cli({"enumerate", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("enumerate_n3.jsonl"));
}

TEST_CASE("enumerate csv and count-only") {
  CliResult r = run_cli({"--format", "csv", "enumerate", "--n", "3", "--d0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,6,2,3,6\n1,4,2,4,4\n1,3,3,3,3\n");

  CliResult c = run_cli({"enumerate", "--n", "4", "--d0", "1", "--count-only"});
  CHECK(c.out == "14\n");

  CliResult capped = run_cli({"enumerate", "--n", "5", "--max", "2"});
  CHECK(capped.out.find("\n") != std::string::npos);
}

TEST_CASE("compute json output matches its golden files") {
  CliResult r = run_cli({"--format", "json", "compute", "--star", "2,3,6", "--oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == golden("compute_star_236.json"));

  CliResult k = run_cli({"--format", "json", "compute", "--complete", "1,3,5,11"});
  CHECK(k.code == 0);
  CHECK(k.out == golden("compute_complete_k4.json"));
}

TEST_CASE("construct subcommands") {
  CliResult sylv = run_cli({"construct", "sylvester", "--n", "4"});
  CHECK(sylv.code == 0);
  CHECK(sylv.out == "dhat: 2,3,7,42\nd0: 1\nr0: 42\ngroup: trivial\n");

  CliResult da = run_cli({"construct", "da", "--base", "2,3,11,15,110", "--a", "5"});
  CHECK(da.code == 0);
  CHECK(da.out.find("dhat: 2,3,11,15,115,2530\n") != std::string::npos);
  CHECK(da.out.find("group: Z/5\n") != std::string::npos);
  CHECK(da.out.find("law_holds: true") != std::string::npos);

  CliResult concat = run_cli({"construct", "concat", "--left", "3,3,7,7,21",
                              "--right", "2,5,5,10"});
  CHECK(concat.out.find("group: Z/105\n") != std::string::npos);

  CliResult dbl = run_cli({"construct", "double", "--base", "2,3,6"});
  CHECK(dbl.out.find("dhat: 2,4,6,12\n") != std::string::npos);
  CHECK(dbl.out.find("group: Z/2 x Z/2\n") != std::string::npos);

  CliResult embed = run_cli({"construct", "embed", "--group", "10,10,25,3"});
  CHECK(embed.out.find("d0: 1\n") != std::string::npos);
  CHECK(embed.out.find("ell: 62") != std::string::npos);

  CliResult ext = run_cli({"--format", "json", "construct", "extremal", "--n", "6"});
  CHECK(ext.code == 0);
  CHECK(ext.out == golden("construct_extremal_n6.json"));

  CliResult bad = run_cli({"construct", "da", "--base", "2,3,6", "--a", "4"});
  CHECK(bad.code == 1);
}

TEST_CASE("verify appendix output") {
  CliResult r = run_cli({"verify", "appendix", "--n", "4", "--fixtures", fixtures()});
  CHECK(r.code == 0);
  CHECK(r.out == "10/10 groups matched\n");
}

TEST_CASE("verify subcommands run clean at small n") {
  CHECK(run_cli({"verify", "oracle", "--n", "3"}).code == 0);
  CHECK(run_cli({"verify", "lemmas", "--n", "2"}).code == 0);
  CHECK(run_cli({"verify", "order", "--n", "4"}).code == 0);
  CHECK(run_cli({"verify", "starcomplete", "--n", "3"}).code == 0);
  CHECK(run_cli({"verify", "doubling", "--n", "4"}).code == 0);
  CliResult all = run_cli({"verify", "all", "--n", "3", "--fixtures", fixtures()});
  CHECK(all.code == 0);
  CHECK(all.out.find("formula vs oracle: 5/5 ok") != std::string::npos);
}

TEST_CASE("identical invocations are byte-identical") {
  CliResult a = run_cli({"--format", "json", "compute", "--star", "2,4,6,12"});
  CliResult b = run_cli({"--format", "json", "compute", "--star", "2,4,6,12"});
  CHECK(a.out == b.out);
}
