#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whitforge::cli {

enum ExitCode { kOk = 0, kParseError = 1, kMathError = 2 };

// Runs one command line (arguments after the program name). Input documents
// come from the named file, or from `in` when the file is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// WHITFORGE_FIXTURE_DIR when set, else the directory compiled in at build time.
std::string default_fixture_dir();

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string diff;  // empty when passed
};

// Runs every fixture whose name contains `filter`. Each fixture is a JSON file
// {name, command, input?, exit?, expected: {json-pointer: value}} and passes
// when the exit status matches and every pointer resolves to exactly `value`.
std::vector<FixtureResult> verify_fixtures(const std::string& dir, const std::string& filter);

}  // namespace whitforge::cli
