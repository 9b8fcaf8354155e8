// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hcl/suites.hpp"

#ifndef HCL_CLI_PATH
#error "HCL_CLI_PATH must name the CLI executable"
#endif

using namespace hcl;

namespace {

struct Outcome {
  bool ok = true;
  long cases = 0;
  long failures = 0;
  std::string first_failure;
  long millis = 0;
};

Outcome run_all(const std::vector<std::string>& suites, const std::vector<WeylType>& types) {
  Outcome o;
  for (const std::string& id : suites) {
    const Suite& s = find_suite(id);
    for (const WeylType& t : types) {
      if (!s.accepts(t)) continue;
      const Report r = run_suite(s, t);
      o.cases += r.cases;
      o.failures += static_cast<long>(r.failures.size());
      o.millis += r.millis;
      if (!r.ok()) {
        o.ok = false;
        if (o.first_failure.empty())
          o.first_failure = id + " " + to_string(t) + ": " + r.failures.front().diff;
      }
    }
  }
  return o;
}

// Runs a shell command; returns its stdout and exit status.
std::pair<std::string, int> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  char buf[4096];
  while (size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
  const int status = pclose(p);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

int failed = 0;

void line(int id, const std::string& name, const Outcome& o, const std::string& extra = "") {
  if (!o.ok) ++failed;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " " << name << " cases=" << o.cases
            << " failures=" << o.failures << " millis=" << o.millis;
  if (!extra.empty()) std::cout << " " << extra;
  if (!o.first_failure.empty()) std::cout << "\n    first failure: " << o.first_failure;
  std::cout << std::endl;
}

}  // namespace

int main() {
  const std::vector<WeylType> relations{type_A(2), type_A(3), type_A(4), type_B(2), type_B(3), type_B(4), type_D(4)};
  const std::vector<WeylType> up_to_3{type_A(2), type_A(3), type_B(2), type_B(3)};
  const std::vector<WeylType> random{type_A(3), type_B(2), type_B(3), type_D(4)};

  {
    Outcome o = run_all({"beta-braid"}, find_suite("beta-braid").default_types);
    // Includes the 5 second budget.
    if (o.millis >= 5000) {
      o.ok = false;
      o.first_failure = "exceeded 5000 ms";
    }
    line(1, "finite-type-relations", o);
  }
  line(2, "cocycle-crosscheck", run_all({"cocycle-crosscheck"}, find_suite("cocycle-crosscheck").default_types));
  line(3, "finite-isomorphism", run_all({"phi-psi-fin-inverse"}, relations));
  line(4, "defining-relations", run_all({"ahc-relations", "spin-relations", "cover-relations"}, relations));
  line(5, "pbw-evidence",
       run_all({"ahc-associativity", "spin-associativity", "cover-associativity", "lusztig-associativity",
                "ind-module"},
               random));
  line(6, "intertwiners",
       run_all({"thm-intertwiner-square", "thm-intertwiner-commute", "thm-intertwiner-braid",
                "intertwiner-braid-u0"},
               up_to_3));
  line(7, "spin-intertwiners",
       run_all({"spin-intertwiner-square", "spin-intertwiner-commute", "spin-intertwiner-braid"}, up_to_3));
  line(8, "affine-isomorphism", run_all({"phi-psi-inverse", "phi-intertwiner"}, up_to_3));
  line(9, "center", run_all({"center"}, up_to_3));
  line(10, "covering-quotients", run_all({"cover-quotients"}, random));

  {
    Outcome o;
    const std::string cli = HCL_CLI_PATH;
    const auto start = std::chrono::steady_clock::now();
    const auto [nf_out, nf_status] = capture("'" + cli + "' --type A --rank 2 nf 's1*x1'");
    const std::string expected = "x2*s1 - u - u*c1*c2\n";
    ++o.cases;
    if (nf_status != 0 || nf_out != expected) {
      o.ok = false;
      ++o.failures;
      o.first_failure = "nf printed '" + nf_out + "'";
    }
    const auto [verify_out, verify_status] = capture("'" + cli + "' verify");
    ++o.cases;
    if (verify_status != 0) {
      o.ok = false;
      ++o.failures;
      const size_t tail = verify_out.rfind("verify:");
      if (o.first_failure.empty())
        o.first_failure = "verify exited " + std::to_string(verify_status) + " (" +
                          (tail == std::string::npos ? verify_out : verify_out.substr(tail, verify_out.size() - tail - 1)) +
                          ")";
    }
    o.millis = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    line(11, "cli-golden", o);
  }

  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " of 11 criteria failed" : "acceptance: all 11 criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
