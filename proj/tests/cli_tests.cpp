// End-to-end checks of the mexlab binary: output bytes and exit codes.
// Usage: mexlab_cli_tests <path-to-mexlab>

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "json.hpp"

namespace {

int g_failures = 0;
std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " '" + g_binary + "' " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::cerr << "popen failed for: " << cmd << "\n";
    ++g_failures;
    return result;
  }
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

void expect_eq(const std::string& got, const std::string& want, const std::string& what) {
  if (got != want) {
    std::cerr << "FAIL: " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
    ++g_failures;
  }
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mexlab_cli_tests <path-to-mexlab>\n";
    return 2;
  }
  g_binary = argv[1];

  // stats
  RunResult stats2 = run("stats --parts 7,4,4,4,3,1,1 --r 2");
  expect(stats2.exit_code == 0, "stats exits 0");
  expect(contains(stats2.out, "chain mex (r=2): 5"), "2-chain mex of the worked example is 5");
  RunResult stats3 = run("stats --parts 7,4,4,4,3,1,1 --r 3");
  expect(contains(stats3.out, "chain mex (r=3): 8"), "3-chain mex of the worked example is 8");
  RunResult statsc = run("stats --parts 4,3,1");
  expect(contains(statsc.out, "conjugate: 3,2,2,1"), "conjugate of 4,3,1");
  RunResult statsbad = run("stats --parts 4,0,1");
  expect(statsbad.exit_code == 2, "nonpositive part is a usage error");
  RunResult statsneg = run("stats --parts 4,x");
  expect(statsneg.exit_code == 2, "unparsable part is a usage error");

  // seq
  expect_eq(run("seq p --max-n 3").out, "1,1,2,3\n", "seq p human format");
  expect_eq(run("seq sigma-rc-mex --r 1 --max-n 3 --format bfile").out, "0 1\n1 2\n2 3\n3 6\n",
            "sigma-mex bfile");
  expect_eq(run("seq sigma-rc-mex --r 2 --max-n 2").out, "1,2,5\n", "sigma 2c-mex values");
  expect_eq(run("seq d2 --max-n 3").out, "1,2,3,6\n", "d2 series route");
  expect_eq(run("seq d2 --max-n 12 --oracle").out, run("seq d2 --max-n 12").out,
            "d2 oracle route agrees with the series route");
  expect_eq(run("seq sigma-rc-mex --r 3 --max-n 14 --oracle").out,
            run("seq sigma-rc-mex --r 3 --max-n 14").out,
            "sigma rc-mex oracle route agrees with the series route");
  expect_eq(run("seq p-colored --m 3 --j 1 --max-n 2").out, "1,2,4\n", "p-colored series");
  expect_eq(run("seq p-colored --m 3 --j 1 --max-n 10 --oracle").out,
            run("seq p-colored --m 3 --j 1 --max-n 10").out, "p-colored routes agree");
  expect_eq(run("seq q-count --r 2 --j 2 --max-n 7 --oracle").out,
            run("seq q-count --r 2 --j 2 --max-n 7").out, "q-count routes agree");
  expect(run("seq p --max-n 200 --oracle").exit_code == 3, "oracle beyond the ceiling exits 3");
  expect(run("seq nonsense --max-n 3").exit_code == 2, "unknown sequence exits 2");

  // gf
  expect_eq(run("gf euler-product --order 5").out, "1,-1,-1,0,0,1\n", "euler product");
  expect_eq(run("gf sigma-rc-mex --r 1 --order 3").out, "1,2,3,6\n", "sigma rc-mex gf");
  expect_eq(run("gf partition --order 3").out, "1,1,2,3\n", "partition gf");
  expect_eq(run("gf partition --order 3 --format csv").out, "n,value\n0,1\n1,1\n2,2\n3,3\n",
            "csv format");
  expect(run("gf nonsense --order 3").exit_code == 2, "unknown builder exits 2");
  expect(run("gf partition --order 50000").exit_code == 3, "order beyond the series cap exits 3");

  // table
  RunResult alpha0 = run("table alpha --n 0");
  expect(contains(alpha0.out, "j = 0: 1"), "alpha table at n = 0");
  RunResult t7 = run("table three-way --n 7 --r 2 --j 2 --list-partitions --format json");
  expect(t7.exit_code == 0, "three-way json exits 0");
  {
    auto parsed = nlohmann::json::parse(t7.out);
    auto cell = parsed["cells"][0];
    expect(cell["j"] == 2, "three-way cell j");
    expect(cell["beyond_chain_mex"] == 3 && cell["multiples"] == 3 &&
               cell["largest_repeating"] == 3,
           "three-way counts (3,3,3)");
    expect(cell["partitions_beyond_chain_mex"].size() == 3, "three partitions listed");
  }
  expect(run("table nonsense --n 3").exit_code == 2, "unknown table kind exits 2");
  expect(run("table three-way --n 200 --r 2").exit_code == 3, "table beyond the ceiling exits 3");

  // verify
  expect(run("verify thm-3way --max-n 7 --r 2,3").exit_code == 0, "thm-3way passes");
  expect(run("verify no-such-id --max-n 5").exit_code == 2, "unknown identity exits 2");
  expect(run("verify --max-n 5").exit_code == 2, "verify without ids exits 2");
  RunResult vlist = run("verify --list");
  expect(vlist.exit_code == 0 && contains(vlist.out, "thm-3way"), "verify --list names ids");
  RunResult corrupted =
      run("verify gfn-sigma-rc-mex --max-n 10 --r 2 --self-test-corrupt --format json");
  expect(corrupted.exit_code == 1, "corrupted builder exits 1");
  {
    auto parsed = nlohmann::json::parse(corrupted.out);
    expect(parsed[0]["status"] == "fail", "corrupted status is fail");
    expect(!parsed[0]["witness"].is_null(), "corrupted report has a witness");
    expect(parsed[0]["witness"]["n"] == 5, "witness at n = 5");
  }
  expect(run("verify euler --max-n 10", "MEXLAB_MAX_N=5").exit_code == 3,
         "env ceiling exits 3");
  expect(run("verify euler --max-n 10 --override-ceiling", "MEXLAB_MAX_N=5").exit_code == 0,
         "override flag bypasses the ceiling");

  // byte determinism
  expect_eq(run("verify thm-3way --max-n 10 --format json").out,
            run("verify thm-3way --max-n 10 --format json").out, "verify output is byte-stable");
  expect_eq(run("gf sigma-rc-mex --r 2 --order 60").out, run("gf sigma-rc-mex --r 2 --order 60").out,
            "gf output is byte-stable");

  if (g_failures == 0) {
    std::cout << "cli tests: all passed\n";
    return 0;
  }
  std::cerr << "cli tests: " << g_failures << " failure(s)\n";
  return 1;
}
