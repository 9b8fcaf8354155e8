#pragma once

// Named property suites with machine-readable reports.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hcl/session.hpp"

namespace hcl {

struct Failure {
  std::string lhs;
  std::string rhs;
  std::string diff;
};

struct Report {
  std::string suite;
  WeylType type;
  std::optional<Cyc8> u;
  std::optional<Cyc8> v;
  long cases = 0;
  std::vector<Failure> failures;
  long millis = 0;
  bool ok() const { return failures.empty(); }
};

/// Collects cases and failures for one suite run. Comparisons are made
/// after substituting the configured u and v.
class SuiteContext {
 public:
  SuiteContext(Report& report, uint64_t seed);

  const WeylType& type() const { return report_.type; }
  const WeylGroup& group() const { return WeylGroup::get(report_.type); }
  std::mt19937_64& rng() { return rng_; }

  template <class E>
  void equal(const E& lhs, const E& rhs) {
    const E a = specialized(lhs), b = specialized(rhs);
    ++report_.cases;
    if (a == b) return;
    report_.failures.push_back({show(Value(a)), show(Value(b)), show(Value(a - b))});
  }
  void expect(bool ok, const std::string& lhs, const std::string& rhs, const std::string& diff = "");

  std::string show(const Value& v) const;

 private:
  template <class E>
  E specialized(const E& e) const {
    if (!report_.u && !report_.v) return e;
    if constexpr (std::is_same_v<E, CliffordElt>) {
      CliffordElt r(e.rank());
      for (const auto& [m, c] : e.terms()) r.terms().add(m, specialize_partial(c, report_.u, report_.v));
      return r;
    } else {
      return specialize_parameters(e, report_.u, report_.v);
    }
  }

  Report& report_;
  std::mt19937_64 rng_;
};

struct Suite {
  std::string id;
  std::string description;
  /// Types used when none is requested.
  std::vector<WeylType> default_types;
  /// Families the suite accepts, with the smallest admissible n.
  std::function<bool(const WeylType&)> accepts;
  std::function<void(SuiteContext&)> run;
};

const std::vector<Suite>& suite_registry();
/// Throws std::invalid_argument for an unknown id.
const Suite& find_suite(const std::string& id);

Report run_suite(const Suite& s, const WeylType& t, const std::optional<Cyc8>& u = std::nullopt,
                 const std::optional<Cyc8>& v = std::nullopt);
Report run_suite(const std::string& id, const WeylType& t);

/// {suite, params: {type, rank, u?, v?}, cases, failures: [{lhs, rhs, diff}], millis}
std::string report_json(const Report& r, int indent = -1);
/// One line: "PASS id type cases=N millis=M" or "FAIL ...".
std::string report_line(const Report& r);

}  // namespace hcl
