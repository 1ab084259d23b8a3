#pragma once

// Helpers shared by the CLI tests and the acceptance runner: spawn the
// installed binary, capture stdout and the exit code, and compare against
// the checked-in golden files. OGM_CLI_PATH and OGM_GOLDEN_DIR come from
// the build system.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cli {

struct Result {
  std::string out;
  int code = -1;
};

inline Result run(const std::string& args) {
  std::string cmd = std::string(OGM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed: " + cmd);
  Result r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string golden(const std::string& name) {
  return read_file(std::string(OGM_GOLDEN_DIR) + "/" + name);
}

struct GoldenCase {
  const char* file;
  const char* args;
  int code;
};

// stable commands: byte-identical output is part of the contract
inline const GoldenCase kGoldenCases[] = {
    {"membership_member.json",
     "membership --backend rational-padic --p 2 --k 1 --laurent \"(T-1)/2\"", 0},
    {"membership_reject.json",
     "membership --backend rational-padic --p 2 --k 1 --laurent \"(T-1)/4\"", 1},
    {"hopf_fq3.json",
     "hopf-verify --backend ratfunc-fq --q 3 --k 1 --samples 10 --seed 5", 0},
    {"springer_count_01.json", "springer count --degrees 0,1 --a 1 --k 1 --q 2", 0},
    {"springer_polyfit_01.json",
     "springer polyfit --degrees 0,1 --a 1 --k 1 --qs 2,3,5,7", 0},
    {"selftest_taylor.json", "selftest --suite taylor --seed 42", 0},
};

}  // namespace cli
