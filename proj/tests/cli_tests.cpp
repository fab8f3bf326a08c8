// End-to-end tests of the command-line tool as a subprocess: exit codes,
// stdin/stdout plumbing, output files, and byte-for-byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef SPECLAP_CLI_PATH
#error "SPECLAP_CLI_PATH must point at the command-line binary"
#endif

using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    char buf[] = "/tmp/speclap_cli_XXXXXX";
    REQUIRE(mkdtemp(buf) != nullptr);
    path_ = buf;
  }
  std::string file(const std::string& name, const std::string& content) const {
    std::string p = path_ + "/" + name;
    std::ofstream f(p, std::ios::binary);
    f << content;
    return p;
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

RunResult run(const TempDir& dir, const std::string& args,
              const std::string& stdin_file = "") {
  std::string errfile = dir.path() + "/stderr.txt";
  std::string cmd = std::string("\"") + SPECLAP_CLI_PATH + "\" " + args;
  cmd += " 2>\"" + errfile + "\"";
  if (!stdin_file.empty()) cmd += " <\"" + stdin_file + "\"";

  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.err = slurp(errfile);
  return r;
}

std::string cycle_doc(int n) {
  json verts = json::array();
  json edges = json::array();
  for (int i = 0; i < n; ++i) {
    verts.push_back({{"id", "v" + std::to_string(i)}});
    edges.push_back({{"from", "v" + std::to_string(i)},
                     {"to", "v" + std::to_string((i + 1) % n)}});
  }
  return json{{"vertices", verts}, {"edges", edges}}.dump();
}

} // namespace

TEST_CASE("a clean run prints the result and exits zero") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  RunResult r = run(dir, "spectrum --input \"" + input + "\"");
  CHECK(r.status == 0);
  CHECK(r.err.empty());
  REQUIRE(!r.out.empty());
  CHECK(r.out.back() == '\n');
  json values = json::parse(r.out);
  CHECK(values.size() == 4);
}

TEST_CASE("dash reads the document from standard input") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  RunResult from_file = run(dir, "spectrum --input \"" + input + "\"");
  RunResult from_stdin = run(dir, "spectrum --input -", input);
  CHECK(from_stdin.status == 0);
  CHECK(from_stdin.out == from_file.out);
}

TEST_CASE("--output sends the document to a file instead of stdout") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  std::string outfile = dir.path() + "/result.json";
  RunResult direct = run(dir, "spectrum --input \"" + input + "\"");
  RunResult filed =
      run(dir, "spectrum --input \"" + input + "\" --output \"" + outfile + "\"");
  CHECK(filed.status == 0);
  CHECK(filed.out.empty());
  CHECK(slurp(outfile) == direct.out);

  RunResult blocked = run(
      dir, "spectrum --input \"" + input + "\" --output \"" + dir.path() + "/no/x\"");
  CHECK(blocked.status == 2);
  CHECK(blocked.err.find("cannot open output") != std::string::npos);
}

TEST_CASE("seeded commands are reproducible byte for byte") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  std::string args = "random --input \"" + input + "\" --rank 2 --seed 7";
  RunResult first = run(dir, args);
  RunResult second = run(dir, args);
  RunResult other = run(dir, "random --input \"" + input + "\" --rank 2 --seed 8");
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  CHECK(first.out != other.out);
}

TEST_CASE("a failed verification exits one but still reports") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  RunResult r = run(dir, "verify --input \"" + input + "\" --tol -0.5");
  CHECK(r.status == 1);
  json doc = json::parse(r.out);
  CHECK(doc.at("overall") == json(false));

  RunResult ok = run(dir, "verify --input \"" + input + "\" --subset-sweep");
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out).at("overall") == json(true));
}

TEST_CASE("bad documents and bad usage exit two with an error line") {
  TempDir dir;
  std::string broken = dir.file("broken.json", "{nope");
  RunResult r = run(dir, "spectrum --input \"" + broken + "\"");
  CHECK(r.status == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("error:") != std::string::npos);

  RunResult missing = run(dir, "spectrum --input \"" + dir.path() + "/absent.json\"");
  CHECK(missing.status == 2);
  CHECK(missing.err.find("cannot open input") != std::string::npos);

  RunResult no_verb = run(dir, "");
  CHECK(no_verb.status == 2);

  std::string input = dir.file("c4.json", cycle_doc(4));
  RunResult bad_flag = run(dir, "spectrum --input \"" + input + "\" --frobnicate");
  CHECK(bad_flag.status == 2);
}

TEST_CASE("help is not an error") {
  TempDir dir;
  RunResult r = run(dir, "--help");
  CHECK(r.status == 0);
  CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("subset and partition flags reach the library") {
  TempDir dir;
  std::string input = dir.file("c4.json", cycle_doc(4));
  RunResult b = run(dir, "bounds --input \"" + input + "\" --subset v0,v1");
  CHECK(b.status == 0);
  json bdoc = json::parse(b.out);
  CHECK(bdoc.at("overall") == json(true));
  CHECK(bdoc.at("reports").size() == 3);

  std::string part =
      dir.file("part.json", R"({"classes": {"v0": "x", "v1": "y", "v2": "x", "v3": "y"}})");
  RunResult c = run(dir, "collapse --input \"" + input + "\" --partition \"" + part + "\"");
  CHECK(c.status == 0);
  CHECK(json::parse(c.out).at("pass") == json(true));

  RunResult p =
      run(dir, "pushforward --input \"" + input + "\" --partition \"" + part + "\"");
  CHECK(p.status == 0);
  CHECK(json::parse(p.out).at("deviation").get<double>() <= 1e-10);
}
