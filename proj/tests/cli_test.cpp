#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qdc/cli.hpp"

namespace qdc {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

// Runs the installed binary through the shell and returns its exit status.
int binary_exit(const std::string& args) {
  const std::string cmd = std::string(QDC_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, DimsCsv) {
  const CliRun r = run({"dims", "--n", "1", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,r,epsilon,dim\n0,0,1,1\n1,1,2,4\n2,2,1,3\n2,0,3,3\n3,1,2,4\n4,0,1,1\n");
}

TEST(Cli, DimsVerify) {
  EXPECT_EQ(run({"dims", "--n", "2", "--verify"}).code, 0);
}

TEST(Cli, EllipticityN2) {
  const CliRun r = run({"ellipticity", "--n", "2", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "k0,k,r,exact,predicted,match");
  EXPECT_NE(r.out.find("\n2,4,0,0,0,1\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n1,3,1,0,0,1\n"), std::string::npos);
  EXPECT_EQ(r.out.find(",0\n"), std::string::npos);
}

TEST(Cli, EllipticityBadCovector) {
  EXPECT_EQ(run({"ellipticity", "--n", "1", "--xi", "1,0"}).code, 2);
  EXPECT_EQ(run({"ellipticity", "--n", "1", "--xi", "0,0,0,0"}).code, 2);
  EXPECT_EQ(run({"ellipticity", "--n", "1", "--xi", "0,1/2,0,3"}).code, 0);
}

TEST(Cli, QholoCheck) {
  const std::string constant =
      temp_file("constant.json", R"({"n":1,"components":[[{"exps":[0,0,0,0],"c":"5"}],[],[],[]]})");
  EXPECT_EQ(run({"qholo", "--check", constant}).code, 0);
  const CliRun identity = run({"qholo", "--check", "-", "--json"},
                           R"({"n":1,"components":[[{"exps":[1,0,0,0],"c":"1"}],[{"exps":[0,1,0,0],"c":"1"}],)"
                           R"([{"exps":[0,0,1,0],"c":"1"}],[{"exps":[0,0,0,1],"c":"1"}]]})");
  EXPECT_EQ(identity.code, 1);
  EXPECT_NE(identity.out.find("\"c\": \"-2\""), std::string::npos);
}

TEST(Cli, QholoReport) {
  EXPECT_EQ(run({"qholo", "--n", "1"}).code, 0);
}

TEST(Cli, ProjectAndAct) {
  const std::string f =
      temp_file("e10.json", R"({"n":1,"k":2,"terms":[{"idx":[1,0],"coeff":[{"exps":[0,0,0,0],"c":"1"}]}]})");
  const CliRun p = run({"project", "--form", f, "--r", "0", "--json"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("\"c\": \"-1/2\""), std::string::npos);
  EXPECT_EQ(run({"project", "--form", f, "--r", "1"}).code, 2);
  const CliRun c = run({"act", "--form", f, "--generator", "C"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(run({"act", "--form", f, "--generator", "L"}).code, 2);
}

TEST(Cli, ComplexCheckIsDeterministic) {
  const std::vector<std::string> args = {"complex-check", "--n", "1", "--max-degree", "2", "--trials", "3",
                                         "--seed", "17", "--json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(run({"complex-check", "--n", "1", "--trials", "3", "--seed", "18", "--json"}).out, a.out);
}

TEST(Cli, Cohomology) {
  const CliRun r = run({"cohomology", "--n", "1", "--k", "1", "--r", "1", "--max-degree", "2", "--csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "k,r,kernel,image,cohomology");
  EXPECT_EQ(run({"cohomology", "--n", "1", "--k", "1", "--r", "0"}).code, 2);
  EXPECT_EQ(run({"cohomology", "--n", "1", "--k", "1"}).code, 2);
}

TEST(Cli, Bonan) {
  const std::string f = temp_file(
      "omega.json", R"({"n":2,"k":2,"terms":[{"idx":[0,1],"coeff":[{"exps":[0,0,0,0,0,0,0,0],"c":"1"}]}]})");
  EXPECT_EQ(run({"bonan", "--n", "2", "--form", f, "--json"}).code, 0);
  EXPECT_EQ(run({"bonan", "--n", "1", "--form", f}).code, 2);
}

TEST(Cli, RealDolbeault) {
  const CliRun r = run({"real-dolbeault", "--report"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS\n"), std::string::npos);
  EXPECT_EQ(run({"real-dolbeault", "--trials", "2", "--json"}).code, 0);
}

TEST(Cli, BadInputs) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"dims", "--n", "zero"}).code, 2);
  EXPECT_EQ(run({"dims", "--n", "1", "--json", "--csv"}).code, 2);
  EXPECT_EQ(run({"act", "--form", "-"}, "{\"n\":").code, 2);
  const CliRun missing = run({"act", "--form", "/nonexistent.json"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
  EXPECT_EQ(run({"dims", "--help"}).code, 0);
}

TEST(Cli, BinaryExitCodes) {
  const std::string constant =
      temp_file("c.json", R"({"n":1,"components":[[{"exps":[0,0,0,0],"c":"1"}],[],[],[]]})");
  const std::string q = temp_file(
      "q.json", R"({"n":1,"components":[[{"exps":[0,1,0,0],"c":"1"}],[{"exps":[1,0,0,0],"c":"1"}],[],[]]})");
  EXPECT_EQ(binary_exit("dims --n 1 --csv"), 0);
  EXPECT_EQ(binary_exit("qholo --check " + constant), 0);
  EXPECT_EQ(binary_exit("qholo --check " + q), 1);
  EXPECT_EQ(binary_exit("dims --n -3"), 2);
  EXPECT_EQ(binary_exit("nope"), 2);
}

}  // namespace
}  // namespace qdc
