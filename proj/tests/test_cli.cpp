// Runs the coto binary and compares its output with the files in golden/.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef COTO_CLI
#error "COTO_CLI must name the coto binary"
#endif
#ifndef COTO_GOLDEN_DIR
#error "COTO_GOLDEN_DIR must name the golden directory"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(COTO_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string golden_path(const std::string& name) { return std::string(COTO_GOLDEN_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("coto_cli_" + name)).string();
}

void check_golden(const std::string& args, const std::string& golden) {
  const Run r = run(args);
  CHECK(r.status == 0);
  CHECK(r.out == slurp(golden_path(golden)));
}

}  // namespace

TEST_CASE("golden outputs") {
  check_golden("solve --c 8", "solve_8.txt");
  check_golden("solve --c 10", "solve_10.txt");
  check_golden("solve --c 30 --format json", "solve_30.json");
  check_golden("goldbach --k 10", "goldbach_10.txt");
  check_golden("goldbach --k 5", "goldbach_5.txt");
  check_golden("scan --from 2 --to 60", "scan_2_60.csv");
  check_golden("classify --c 30", "classify_30.csv");
  check_golden("partition --t 7 2 3 5 7", "partition_2357.txt");
  check_golden("config " + golden_path("cycle_config.json"), "config_cycle.txt");
}

TEST_CASE("scan writes files and is worker-independent") {
  const std::string one = temp_file("scan1.csv"), four = temp_file("scan4.csv");
  const std::string sols = temp_file("sols.txt"), summary = temp_file("summary.json");
  REQUIRE(run("scan --from 2 --to 60 --out " + one + " --solutions " + sols + " --summary " + summary).status == 0);
  CHECK(slurp(one) == slurp(golden_path("scan_2_60.csv")));
  CHECK(slurp(sols) == slurp(golden_path("scan_2_60_solutions.txt")));
  CHECK(slurp(summary).find("\"blocks\"") != std::string::npos);

  REQUIRE(run("scan --from 2 --to 3000 --workers 1 --out " + one).status == 0);
  REQUIRE(run("scan --from 2 --to 3000 --workers 4 --out " + four).status == 0);
  CHECK(slurp(one) == slurp(four));
  for (const auto& f : {one, four, sols, summary}) std::filesystem::remove(f);
}

TEST_CASE("exit codes") {
  CHECK(run("").status == 2);
  CHECK(run("solve").status == 2);
  CHECK(run("solve --c 1").status == 2);
  CHECK(run("solve --c abc").status == 2);
  CHECK(run("goldbach --k 1").status == 2);
  CHECK(run("scan --from 5 --to 2").status == 2);
  CHECK(run("scan --from 2 --to 100001").status == 2);
  CHECK(run("partition --t 4 5").status == 2);
  CHECK(run("config /nonexistent.json").status == 2);
  CHECK(run("diff --f nope --c 8 --n-max 10").status == 2);
  CHECK(run("verify --criterion 9").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("config assertions") {
  const std::string cyc = golden_path("cycle_config.json");
  const Run plain = run("config " + cyc);
  CHECK(plain.status == 0);
  CHECK(plain.out.find("\ncycle L2[6,4] -> P2(3,4) -> ") != std::string::npos);
  CHECK(run("config --assert-forest " + cyc).status == 1);
  CHECK(run("config --assert-prime " + cyc).status == 1);

  const std::string gen = temp_file("gen.json");
  REQUIRE(run("gen-config --seed 5 --size 30 --out " + gen).status == 0);
  const Run prime = run("config --assert-forest --assert-prime --assert-bound --classes " + gen);
  CHECK(prime.status == 0);
  CHECK(prime.out.find("cycle none") != std::string::npos);
  CHECK(run("gen-config --seed 5 --size 30").out == slurp(gen));
  std::filesystem::remove(gen);
}

TEST_CASE("diff pipeline") {
  const std::string out = temp_file("diff.json");
  const Run r = run("diff --f id --g phi --c 8 --n-max 100 --config-out " + out);
  CHECK(r.status == 0);
  CHECK(r.out.find("solutions 12 14 16\n") != std::string::npos);
  CHECK(r.out.find("embed n 14 a 2 b 7 point (2,1) line (7,6)") != std::string::npos);
  CHECK(run("config --assert-prime " + out).status == 1);  // (4,2) shares 2 with c = 8
  CHECK(run("config --assert-forest --assert-bound " + out).status == 0);
  std::filesystem::remove(out);

  const Run tau = run("diff --f tau --g id --c 1 --n-max 50");
  CHECK(tau.status == 0);
  CHECK(tau.out.find("condition_i fails witness 2") != std::string::npos);
  CHECK(tau.out.find("construction skipped") != std::string::npos);

  const Run rules = run("diff --f file:" + golden_path("sigma2.rules") + " --g sigma --c 2 --n-max 100");
  CHECK(rules.status == 0);
  CHECK(rules.out.find("solutions 2\n") != std::string::npos);

  const Run tight = run("diff --f id --g phi --c 8 --n-max 100 --t 7");
  CHECK(tight.status == 2);
}

TEST_CASE("verify subcommand") {
  const Run r = run("verify --criterion 7 --workers 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("[PASS] C7") != std::string::npos);
}
