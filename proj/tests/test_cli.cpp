#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

// Black-box tests against the built binary (path injected as MEGKIT_BIN).

namespace {

struct RunResult {
  int exit_code;
  std::string out;  // stdout and stderr interleaved
};

RunResult run_cmd(const std::string& shell_command) {
  std::string cmd = shell_command + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

RunResult run(const std::string& args) {
  return run_cmd(std::string(MEGKIT_BIN) + " " + args);
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "megkit_cli_tests";
  std::filesystem::create_directories(dir);
  auto p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char kP3[] = "3 2\n0 1\n1 2\n";
const char kC5[] = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const char kK4[] = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const char kP3Dimacs[] = "p edge 3 2\ne 1 2\ne 2 3\n";

std::string strip_elapsed(const std::string& text) {
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(pos, nl - pos);
    if (line.find("elapsed_ms") == std::string::npos) {
      out += line;
      out += '\n';
    }
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("mandatory output") {
  std::string p3 = write_temp("p3.txt", kP3);
  RunResult r = run("mandatory " + p3);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "mandatory vertices (2 of 3): {0, 2}\n");
  CHECK(run("mandatory " + p3 + " --naive").out == r.out);

  std::string c5 = write_temp("c5.txt", kC5);
  RunResult rc = run("mandatory " + c5);
  CHECK(rc.exit_code == 0);
  CHECK(rc.out == "mandatory vertices (0 of 5): {}\n");
}

TEST_CASE("dimacs labels flow through") {
  std::string dim = write_temp("p3.col", kP3Dimacs);
  RunResult r = run("mandatory " + dim);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "mandatory vertices (2 of 3): {1, 3}\n");

  CHECK(run("verify " + dim + " --set 1,3").exit_code == 0);
  RunResult bad = run("verify " + dim + " --set 0,2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("unknown vertex '0'") != std::string::npos);
}

TEST_CASE("verify verdicts and exit codes") {
  std::string p3 = write_temp("p3.txt", kP3);
  std::string c5 = write_temp("c5.txt", kC5);
  std::string k4 = write_temp("k4.txt", kK4);

  RunResult good = run("verify " + p3 + " --set 0,2");
  CHECK(good.exit_code == 0);
  CHECK(good.out == "meg-set (2/2 edges monitored)\n");

  RunResult bad = run("verify " + c5 + " --set 0,1");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == "not a meg-set (1/5 edges monitored)\n");

  CHECK(run("verify " + k4 + " --set 0,1,2,3").exit_code == 0);

  RunResult empty = run("verify " + p3 + " --set ''");
  CHECK(empty.exit_code == 1);
  CHECK(empty.out == "not a meg-set (0/2 edges monitored)\n");
}

TEST_CASE("chordal certificates") {
  std::string p3 = write_temp("p3.txt", kP3);
  RunResult yes = run("chordal " + p3);
  CHECK(yes.exit_code == 0);
  CHECK(yes.out == "chordal\npeo: 2 1 0\n");

  std::string c5 = write_temp("c5.txt", kC5);
  RunResult no = run("chordal " + c5);
  CHECK(no.exit_code == 1);
  CHECK(no.out == "not chordal\nhole 0-1-2-3-4\n");
}

TEST_CASE("minmeg output") {
  std::string c5 = write_temp("c5.txt", kC5);
  RunResult r = run("minmeg " + c5);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "minimum meg-set (size 3): {0, 1, 3}\n"
        "unique minimum: no\n"
        "enumerated 20 candidate sets\n");

  RunResult skip = run("minmeg " + c5 + " --skip-unique");
  CHECK(skip.out.find("unique minimum: not checked") != std::string::npos);

  RunResult capped = run("minmeg " + c5 + " --max-size 2");
  CHECK(capped.exit_code == 1);
  CHECK(capped.out.find("SizeCapExceeded") != std::string::npos);

  std::string p3 = write_temp("p3.txt", kP3);
  RunResult noprune = run("minmeg " + p3 + " --no-prune");
  CHECK(noprune.exit_code == 0);
  CHECK(noprune.out.find("minimum meg-set (size 2): {0, 2}") !=
        std::string::npos);
}

TEST_CASE("monitor output") {
  std::string p3 = write_temp("p3.txt", kP3);
  RunResult r = run("monitor " + p3 + " --pair 0,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "pair {0, 2} monitors 2/2 edges (0,1) (1,2)\n");
  CHECK(run("monitor " + p3 + " --pair 2,0").out == r.out);

  RunResult same = run("monitor " + p3 + " --pair 0,0");
  CHECK(same.exit_code == 2);

  std::string c5 = write_temp("c5.txt", kC5);
  RunResult none = run("monitor " + c5 + " --pair 0,2");
  CHECK(none.exit_code == 0);
  CHECK(none.out == "pair {0, 2} monitors 2/5 edges (0,1) (1,2)\n");
}

TEST_CASE("gen is deterministic and round-trips") {
  RunResult r = run("gen --n 6 --attach 2 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "# gen n=6 attach=2 seed=7\n"
        "6 9\n0 1\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 5\n2 4\n");
  CHECK(run("gen --n 6 --attach 2 --seed 7").out == r.out);
  CHECK(run("gen --n 6 --attach 2 --seed 8").out != r.out);

  std::string gen_path = write_temp("gen6.txt", r.out);
  CHECK(run("chordal " + gen_path).exit_code == 0);

  RunResult dim = run("gen --n 5 --attach 3 --seed 11 --format dimacs");
  CHECK(dim.exit_code == 0);
  CHECK(dim.out.rfind("c gen n=5 attach=3 seed=11\np edge 5 ", 0) == 0);
  std::string dim_path = write_temp("gen5.col", dim.out);
  CHECK(run("chordal " + dim_path).exit_code == 0);

  CHECK(run("gen --n 0 --attach 2 --seed 1").exit_code == 2);
  CHECK(run("gen --n 5 --attach 2 --seed 1 --format yaml").exit_code == 2);
}

TEST_CASE("json reports are deterministic") {
  std::string c5 = write_temp("c5.txt", kC5);
  for (const std::string& sub :
       {std::string("mandatory "), std::string("chordal "),
        std::string("minmeg "), std::string("verify --set 0,1,3 "),
        std::string("monitor --pair 0,2 ")}) {
    std::string args;
    std::size_t space = sub.find(' ');
    std::string name = sub.substr(0, space);
    std::string flags = sub.substr(space);
    args = name + " " + c5 + flags + " --json";
    RunResult a = run(args);
    RunResult b = run(args);
    CAPTURE(args);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
    CHECK(a.out.find("\"command\": \"" + name + "\"") != std::string::npos);
    CHECK(a.out.find("\"digest\"") != std::string::npos);
    CHECK(a.out.find("\"elapsed_ms\"") != std::string::npos);
  }

  RunResult chord = run("chordal " + c5 + " --json");
  CHECK(chord.exit_code == 1);
  CHECK(chord.out.find("\"chordal\": false") != std::string::npos);
  CHECK(chord.out.find("\"type\": \"hole\"") != std::string::npos);

  RunResult ver = run("verify " + c5 + " --set 0,1 --json");
  CHECK(ver.exit_code == 1);
  CHECK(ver.out.find("\"is_meg_set\": false") != std::string::npos);
  CHECK(ver.out.find("\"unmonitored\"") != std::string::npos);
}

TEST_CASE("usage and input failures") {
  std::string p3 = write_temp("p3.txt", kP3);

  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify " + p3).exit_code == 2);         // --set missing
  CHECK(run("verify " + p3 + " --set 0,9").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("--help").out.find("minmeg") != std::string::npos);

  RunResult gone = run("mandatory /nonexistent/graph.txt");
  CHECK(gone.exit_code == 3);
  CHECK(gone.out.find("error:") != std::string::npos);

  std::string bad = write_temp("bad.txt", "2 2\n0 1\n0 1\n");
  RunResult dup = run("chordal " + bad);
  CHECK(dup.exit_code == 3);
  CHECK(dup.out.find("DuplicateEdge") != std::string::npos);
  CHECK(dup.out.find("line 3") != std::string::npos);

  RunResult env = run_cmd("MEGKIT_THREADS=abc " + std::string(MEGKIT_BIN) +
                          " mandatory " + p3);
  CHECK(env.exit_code == 2);
  RunResult env_ok = run_cmd("MEGKIT_THREADS=4 " + std::string(MEGKIT_BIN) +
                             " mandatory " + p3);
  CHECK(env_ok.exit_code == 0);
}
