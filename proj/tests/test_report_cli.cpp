#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "blockcenter/report.hpp"
#include "blockcenter/verify_paper.hpp"

using namespace blockcenter;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BLOCKCENTER_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data_dir() { return BLOCKCENTER_DATA_DIR; }
std::string algebra(const std::string& name) { return data_dir() + "/algebras/" + name; }
std::string paper(const std::string& name) { return data_dir() + "/paper/" + name; }

/// Copy of the data directory with one entry of the case (II) Q_x block negated.
fs::path corrupted_data_dir() {
  const fs::path dir = fs::temp_directory_path() / "blockcenter_corrupt_case2";
  fs::remove_all(dir);
  fs::create_directories(dir);
  fs::copy(data_dir(), dir, fs::copy_options::recursive);
  const fs::path file = dir / "paper" / "case2_block.txt";
  std::ifstream in(file);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  in.close();
  bool in_x = false, past_header = false, done = false;
  for (auto& l : lines) {
    if (l.rfind("[subsection", 0) == 0) in_x = l == "[subsection x]";
    if (!in_x || done || l.empty() || l[0] == '#') continue;
    if (l == "Q") continue;
    if (!past_header) {
      past_header = true;  // the "8 3" shape line
      continue;
    }
    std::istringstream ss(l);
    std::string first, rest;
    ss >> first;
    std::getline(ss, rest);
    if (first == "." || first == "0") continue;
    l = (first[0] == '-' ? first.substr(1) : "-" + first) + rest;
    done = true;
  }
  REQUIRE(done);
  std::ofstream out(file);
  for (const auto& l : lines) out << l << "\n";
  return dir;
}

}  // namespace

TEST_CASE("verify-paper passes on the bundled data") {
  const auto r = verify_paper({data_dir(), {}});
  CHECK(r.status == report::Status::Pass);
  CHECK(r.sections.size() == 9);
  CHECK(r.sections.size() == verify_stage_names().size());
  for (const auto& s : r.sections) CHECK(s.verdict == true);
}

TEST_CASE("JSON output is deterministic and versioned") {
  const auto a = report::emit_json(verify_paper({data_dir(), {"rows", "classes"}}));
  const auto b = report::emit_json(verify_paper({data_dir(), {"rows", "classes"}}));
  CHECK(a == b);
  const auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "PASS");
  CHECK(j["sections"].size() == 2);

  const auto m = report::to_json(IntMatrix::from_rows({{1, -2}}));
  CHECK(m.dump() == R"([["1","-2"]])");
  CHECK(report::to_json(std::vector<Int>{Int("123456789012345678901234567890")}).dump() ==
        R"(["123456789012345678901234567890"])");
}

TEST_CASE("stage filtering") {
  const auto r = verify_paper({data_dir(), {"center-case1"}});
  REQUIRE(r.sections.size() == 1);
  CHECK(r.status == report::Status::Pass);
  CHECK_THROWS_AS(verify_paper({data_dir(), {"no-such-stage"}}), Error);
}

TEST_CASE("a corrupted case (II) matrix fails verification") {
  const auto dir = corrupted_data_dir();
  const auto r = verify_paper({dir.string(), {}});
  CHECK(r.status == report::Status::Fail);
  const auto first = r.first_failure();
  REQUIRE(first);
  CHECK((first->find("contributions") == 0 || first->find("block-constraints") == 0));
  fs::remove_all(dir);
}

TEST_CASE("text and error reports") {
  report::Report r;
  r.command = "demo";
  r.add("good", true).lines.push_back("fine");
  r.add("bad", false).lines.push_back("entry (1,2) differs");
  r.finalize();
  CHECK(r.status == report::Status::Fail);
  CHECK(*r.first_failure() == "bad: entry (1,2) differs");
  const auto text = report::emit_text(r);
  CHECK(text.find("✓") != std::string::npos);
  CHECK(text.find("✗") != std::string::npos);
  CHECK(text.find("demo: FAIL") != std::string::npos);

  const auto e = report::error_report("snf", "boom");
  CHECK(e.status == report::Status::Error);
  CHECK(report::exit_code(e.status) == 2);
  CHECK(report::exit_code(report::Status::Pass) == 0);
  CHECK(report::exit_code(report::Status::Fail) == 1);
}

TEST_CASE("CLI exit codes") {
  CHECK(run("verify-paper --only rows").code == 0);
  CHECK(run("snf " + paper("cx.txt")).code == 0);
  CHECK(run("snf /nonexistent/file.txt").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("resolve --algebra " + algebra("gf2_x2.txt") + " --steps 4").code == 1);
  CHECK(run("resolve --algebra " + algebra("gf2_x3_xz_z2.txt") + " --steps 8 --x x --z z").code == 0);
  CHECK(run("algebra " + paper("w_table.txt") + " --op symform").code == 1);
  CHECK(run("center --q " + paper("case3_block.txt") + " --match case12").code == 1);
  CHECK(run("center --q " + paper("case3_block.txt") + " --match case3").code == 0);
  CHECK(run("check-block " + paper("case1_block.txt") + " --lambda " + paper("lambda.txt")).code == 0);
}

TEST_CASE("CLI JSON is byte-identical across runs") {
  const auto a = run("--json verify-paper");
  const auto b = run("--json verify-paper");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "verify-paper");

  const auto snf = nlohmann::json::parse(run("--json snf " + paper("cx.txt")).out);
  CHECK(snf["status"] == "PASS");
  CHECK(snf.dump().find(R"("16")") != std::string::npos);
}

TEST_CASE("CLI solve-gram and ordinary16x3") {
  const auto rows = run("solve-gram --gram " + paper("cx.txt"));
  CHECK(rows.code == 0);
  CHECK(rows.out.find("16 rows up to sign") != std::string::npos);
  CHECK(rows.out.find("(2,2,1)  11/16") != std::string::npos);
  const auto classes = run("--json solve-gram --gram " + paper("cx.txt") + " --rows 8 --contrib 3/16*5,11/16*3");
  CHECK(classes.code == 0);
  for (const char* label : {"(1,1,1)", "(1,1,2)", "(1,2,2)"}) CHECK(classes.out.find(label) != std::string::npos);
  CHECK(run("ordinary16x3 --gram " + paper("cx.txt")).code == 0);
}
