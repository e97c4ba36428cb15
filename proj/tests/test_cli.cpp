#include <gtest/gtest.h>

#include "process.hpp"

namespace {

const std::string kCli = process::quote(HYPOLY_CLI);
const std::string kData = std::string(HYPOLY_TEST_DATA) + "/";

process::Result cli(const std::string& args) { return process::run(kCli + " " + args); }

std::string input(const char* name) { return "--input " + process::quote(kData + name); }

}  // namespace

TEST(Cli, ComputeExamples) {
  auto xi = cli("compute " + input("k2.json") + " --poly xi --algo subset");
  EXPECT_EQ(xi.exit_code, 0);
  EXPECT_EQ(xi.out, "x^2 + x*y*t{a} + z*t{a}\n");

  auto proper = cli("compute " + input("k3.json") +
                    " --poly chromatic --uniform-t --subst p=3 --subst q=3 --subst t=0");
  EXPECT_EQ(proper.exit_code, 0);
  EXPECT_EQ(proper.out, "6\n");

  auto tutte = cli("compute " + input("k3.json") + " --poly tutte");
  EXPECT_EQ(tutte.exit_code, 0);
  EXPECT_EQ(tutte.out, "x^2 + x + y\n");
}

TEST(Cli, AlgorithmsAgree) {
  const auto reference = cli("compute " + input("path.json") + " --poly chromatic").out;
  for (const char* algo : {"subset", "recursive", "mobius", "sections", "bridge"}) {
    EXPECT_EQ(cli("compute " + input("path.json") + " --poly chromatic --algo " + algo).out,
              reference)
        << algo;
  }
  EXPECT_EQ(cli("compute " + input("k3.json") + " --poly xi --algo recursive").out,
            cli("compute " + input("k3.json") + " --poly xi --algo subset").out);
  EXPECT_EQ(cli("compute " + input("k3.json") + " --poly matching --algo bridge").out,
            cli("compute " + input("k3.json") + " --poly matching").out);
}

TEST(Cli, OracleAndRationals) {
  auto oracle = cli("compute " + input("k2.json") + " --poly chromatic --algo oracle --subst p=1 --subst q=2");
  EXPECT_EQ(oracle.out, "t{a} + 3\n");
  auto value = cli("compute " + input("k2.json") +
                   " --poly xi --subst x=1/2 --subst y=1 --subst z=0 --subst 't{a}=2'");
  EXPECT_EQ(value.out, "5/4\n");
  auto json = cli("compute " + input("k2.json") + " --poly chromatic --format json");
  EXPECT_EQ(json.out,
            R"([{"coeff":"1","vars":{"q":2}},{"coeff":"1","vars":{"p":1,"t{a}":1}},{"coeff":"-1","vars":{"p":1}}])"
            "\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").exit_code, 2);
  EXPECT_EQ(cli("compute " + input("k2.json") + " --poly tutte --algo mobius").exit_code, 2);
  EXPECT_EQ(cli("compute " + input("k2.json") + " --subst w=1").exit_code, 2);
  EXPECT_EQ(cli("compute " + input("k2.json") + " --subst 'x=1/2'").exit_code, 2);
  EXPECT_EQ(cli("compute --input /nonexistent.json").exit_code, 2);
  EXPECT_EQ(cli("compute " + input("empty_edge.json")).exit_code, 3);
  EXPECT_EQ(cli("compute " + input("malformed.json")).exit_code, 3);
  EXPECT_EQ(cli("compute " + input("triple.json") + " --poly tutte").exit_code, 3);
  EXPECT_EQ(cli("compute " + input("wide.json") + " --poly chromatic --algo mobius").exit_code, 4);
  EXPECT_EQ(cli("family --family cycle -m 2 -r 3").exit_code, 3);
  EXPECT_EQ(cli("compute " + input("k3.json") +
                " --poly chromatic --algo mobius --max-lattice-vertices 2").exit_code,
            4);
  EXPECT_EQ(cli("compute " + input("k3.json") +
                " --poly chromatic --algo oracle --subst p=1 --subst q=3 --max-colorings 5")
                .exit_code,
            4);
}

TEST(Cli, Verify) {
  auto one = cli("verify " + input("k3.json"));
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_NE(one.out.find("ALL PASS"), std::string::npos);
  EXPECT_EQ(one.out.find("FAIL "), std::string::npos);

  auto families = cli("verify --suite families");
  EXPECT_EQ(families.exit_code, 0);

  auto a = cli("verify --suite random --seed 7 --max-n 6 --max-m 5");
  auto b = cli("verify --suite random --seed 7 --max-n 6 --max-m 5");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Family) {
  auto path = cli("family --family path -m 2 -r 2 --emit poly");
  EXPECT_EQ(path.out, "x^3 + 2*x^2*y + x*y^2 + 2*x*z + y*z\n");
  auto star = cli("family --family hyperstar -n 4 -r 3 --emit hypergraph");
  EXPECT_EQ(star.exit_code, 0);
  EXPECT_EQ(star.out,
            R"({"edges":[{"id":"e1.2.4","vertices":["1","2","4"]},{"id":"e1.3.4","vertices":["1","3","4"]},{"id":"e2.3.4","vertices":["2","3","4"]}],"vertices":["1","2","3","4"]})"
            "\n");
  auto uniform = cli("family --family hyperstar -n 4 -r 3 --emit poly --uniform-t");
  EXPECT_EQ(uniform.out, "q^4 + 3*p*q*t - 3*p*q + p*t^3 - 3*p*t + 2*p\n");
  auto flower = cli("family --family sunflower --petals 1,2 -s 2 --emit hypergraph");
  EXPECT_EQ(flower.exit_code, 0);
}
