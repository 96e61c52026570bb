#include <doctest.h>

#include <fstream>
#include <sstream>

#include "semiconj/cli.hpp"
#include "semiconj/constructors.hpp"
#include "semiconj/io.hpp"

using namespace semiconj;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(std::string const& name) {
  std::ifstream f(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("cli: fixture outputs byte-match the golden files") {
  CHECK(cli({"conjugacy", "--fixture", "F7_542155", "--psets"}).out
        == golden("conjugacy_F7_542155.txt"));
  CHECK(cli({"conjugacy", "--fixture", "F7_E2B"}).out
        == golden("conjugacy_F7_E2B.txt"));
  CHECK(cli({"conjugacy", "--fixture", "F6_414_S"}).out
        == golden("conjugacy_F6_414_S.txt"));
  CHECK(cli({"green", "--fixture", "F7_E2B"}).out == golden("green_F7_E2B.txt"));
  CHECK(cli({"suite", "--fixture", "F4_113"}).out == golden("suite_F4_113.txt"));
  CHECK(cli({"table1", "--max", "4"}).out == golden("table1_max4.txt"));
}

TEST_CASE("cli: single-relation output is the bare partition") {
  Run r = cli({"conjugacy", "--fixture", "F7_542155", "--relation", "c"});
  CHECK(r.code == 0);
  CHECK(r.out == "{0,1,2,3,6} {4} {5}\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli({"validate", "--fixture", "F2_LZ"}).code == 0);

  Run usage = cli({"frobnicate"});
  CHECK(usage.code == 2);

  Run missing = cli({"validate"});
  CHECK(missing.code == 1);  // no input source

  Run conflict = cli({"validate", "--file", "x", "--fixture", "F2_LZ"});
  CHECK(conflict.code == 2);  // mutually exclusive sources

  Run badfix = cli({"validate", "--fixture", "NOPE"});
  CHECK(badfix.code == 1);
  CHECK(badfix.err.find("unknown fixture") != std::string::npos);
}

TEST_CASE("cli: construct output round-trips, including --json") {
  Run text = cli({"construct", "cyclic", "4"});
  CHECK(parse_table(text.out) == cyclic_group(4));

  Run js = cli({"--json", "construct", "cyclic", "4"});
  CHECK(parse_table(js.out) == cyclic_group(4));

  Run rees_run = cli({"construct", "--rees-group", "cyclic 2", "--i", "2",
                      "--lambda", "2", "--p", "0,z;0,1"});
  Semigroup s = parse_table(rees_run.out);
  CHECK(s.size() == 9);
  CHECK(s.zero() == 8);
}

TEST_CASE("cli: make specs feed any command") {
  Run r = cli({"conjugacy", "--make", "rect 2 3", "--relation", "p"});
  CHECK(r.code == 0);
  // universal on 6 elements: 15 pairs
  int pairs = 0;
  for (char ch : r.out) pairs += ch == '(';
  CHECK(pairs == 15);

  Run inv = cli({"pinj", "--n", "3"});
  CHECK(inv.out.find("elements=34") != std::string::npos);
}

TEST_CASE("cli: variant command") {
  Run v = cli({"variant", "--fixture", "F6_414_S", "--at", "1"});
  Semigroup t = parse_table(v.out);
  CHECK(t == variant(fixture("F6_414_S"), 1));

  Run chk = cli({"variant", "--make", "chain 2", "--at", "0", "--check"});
  CHECK(chk.out.find("star_matches=1") != std::string::npos);
  CHECK(chk.out.find("variant_in_W=1") != std::string::npos);
}

TEST_CASE("cli: enumerate") {
  Run r = cli({"enumerate", "--order", "3"});
  CHECK(r.out == "count=18\n");
  Run lab = cli({"enumerate", "--order", "3", "--dedupe", "labeled"});
  CHECK(lab.out == "count=113\n");
  Run big = cli({"enumerate", "--order", "6"});
  CHECK(big.code == 1);
}

TEST_CASE("cli: symbolic relations") {
  Run r = cli({"symbolic", "--t1", "cycles{2:1;0} upsilon=1", "--t2",
               "cycles{1:2;0} upsilon=1"});
  CHECK(r.out.find("c_conjugate: no") != std::string::npos);
  CHECK(r.out.find("gamma: p=0 c=0 j=1") != std::string::npos);

  Run one = cli({"symbolic", "--t1", "chains{2:1;0}"});
  CHECK(one.out.find("kappa=2") != std::string::npos);
}
