#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Case {
  std::size_t line = 0;
  std::string command;
  std::string out;
  std::string err;
  int status = -1;
};

std::string expand(std::string s) {
  const std::string key = "@DIE@";
  for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key)) {
    s.replace(pos, key.size(), BOOLFRAC_DIE_FILE);
  }
  return s;
}

std::vector<Case> load_cases() {
  std::ifstream in(BOOLFRAC_GOLDEN_FILE);
  REQUIRE(in.good());
  std::vector<Case> cases;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("$ ", 0) == 0) {
      cases.push_back({n, expand(line.substr(2)), {}, {}, -1});
    } else if (line.rfind("! ", 0) == 0) {
      cases.back().err += line.substr(2) + "\n";
    } else if (line.rfind("? ", 0) == 0) {
      cases.back().status = std::stoi(line.substr(2));
    } else {
      cases.back().out += line + "\n";
    }
  }
  return cases;
}

// Whitespace splitting with double quotes grouping, as a shell would.
std::vector<std::string> split_args(const std::string& command) {
  std::vector<std::string> args;
  std::string current;
  bool quoted = false;
  bool pending = false;
  for (char ch : command) {
    if (ch == '"') {
      quoted = !quoted;
      pending = true;
    } else if (ch == ' ' && !quoted) {
      if (pending) args.push_back(current);
      current.clear();
      pending = false;
    } else {
      current += ch;
      pending = true;
    }
  }
  if (pending) args.push_back(current);
  return args;
}

}  // namespace

TEST_CASE("golden command lines") {
  const auto cases = load_cases();
  REQUIRE(cases.size() >= 30);
  for (const auto& c : cases) {
    std::vector<std::string> args = split_args(c.command);
    args.insert(args.begin(), "boolfrac");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int status = boolfrac::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    CAPTURE(c.line);
    CAPTURE(c.command);
    CHECK(out.str() == c.out);
    CHECK(err.str() == c.err);
    CHECK(status == c.status);
  }
}

TEST_CASE("output is byte-identical across runs") {
  const char* argv[] = {"boolfrac", "check", "--law", "all", "--atoms", "2"};
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream err;
  CHECK(boolfrac::cli::run(6, argv, first, err) == 0);
  CHECK(boolfrac::cli::run(6, argv, second, err) == 0);
  CHECK(first.str() == second.str());
  CHECK(err.str().empty());
}

TEST_CASE("check all prints one line per law") {
  const char* argv[] = {"boolfrac", "check", "--law", "all", "--atoms", "3"};
  std::ostringstream out;
  std::ostringstream err;
  CHECK(boolfrac::cli::run(6, argv, out, err) == 0);
  std::istringstream lines(out.str());
  int pass = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("PASS ", 0) == 0) ++pass;
    CHECK(line.rfind("FAIL", 0) == std::string::npos);
  }
  CHECK(pass == 27);
}

TEST_CASE("help goes to standard output") {
  const char* argv[] = {"boolfrac", "--help"};
  std::ostringstream out;
  std::ostringstream err;
  CHECK(boolfrac::cli::run(2, argv, out, err) == 0);
  CHECK(out.str().find("check") != std::string::npos);
  CHECK(err.str().empty());
}
