#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "../topology.hpp"

namespace aslkit::verify {

struct failure_record {
  std::string instance;
  std::string expected;
  std::string got;

  friend bool operator==(const failure_record&, const failure_record&) = default;
};

struct inconclusive_record {
  std::string instance;
  std::string reason;

  friend bool operator==(const inconclusive_record&, const inconclusive_record&) = default;
};

/// Audit of VD => shellable => CM => pure over every complex a suite decides.
struct ladder_audit {
  long long complexes = 0;
  std::vector<failure_record> violations;

  void record(const std::string& instance, const ladder_record& r) {
    ++complexes;
    if (!ladder_consistent(r)) {
      violations.push_back({instance, "VD => shellable => CM => pure",
                            "vd=" + std::string(to_string(r.vd)) + " shellable=" + std::string(to_string(r.shellable)) +
                                " cm=" + (r.cm ? "yes" : "no") + " pure=" + (r.pure ? "yes" : "no")});
    }
  }

  void merge(const ladder_audit& o) {
    complexes += o.complexes;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

struct verification_report {
  std::string suite;
  long long instances = 0;
  long long passed = 0;
  std::vector<failure_record> failures;
  std::vector<inconclusive_record> inconclusive;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  // Named sub-checks: label -> (instances, failures), for per-claim summaries.
  std::vector<std::pair<std::string, std::pair<long long, long long>>> sections;
  ladder_audit ladder;

  void pass(const std::string& section) {
    ++instances;
    ++passed;
    bump(section, false);
  }

  void fail(const std::string& section, std::string instance, std::string expected, std::string got) {
    ++instances;
    failures.push_back({std::move(instance), std::move(expected), std::move(got)});
    bump(section, true);
  }

  /// Records a strict equality check.
  void check(const std::string& section, const std::string& instance, bool ok, const std::string& expected,
             const std::string& got) {
    if (ok) {
      pass(section);
    } else {
      fail(section, instance, expected, got);
    }
  }

  void undecided(const std::string& section, std::string instance, std::string reason) {
    ++instances;
    inconclusive.push_back({std::move(instance), std::move(reason)});
    bump(section, false);
  }

  long long section_instances(const std::string& name) const {
    for (const auto& [n, c] : sections) {
      if (n == name) return c.first;
    }
    return 0;
  }
  long long section_failures(const std::string& name) const {
    for (const auto& [n, c] : sections) {
      if (n == name) return c.second;
    }
    return 0;
  }

  /// Appends another report's records in order.
  void merge(const verification_report& o) {
    instances += o.instances;
    passed += o.passed;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    inconclusive.insert(inconclusive.end(), o.inconclusive.begin(), o.inconclusive.end());
    for (const auto& [n, c] : o.sections) {
      auto& mine = slot(n);
      mine.first += c.first;
      mine.second += c.second;
    }
    ladder.merge(o.ladder);
  }

  /// Ladder violations count as failures.
  void close() {
    for (const auto& v : ladder.violations) fail("ladder", v.instance, v.expected, v.got);
    ladder.violations.clear();
  }

  /// 0: all pass; 1: a failure; 2: inconclusive entries and no failure.
  int exit_code() const {
    if (!failures.empty()) return 1;
    if (!inconclusive.empty()) return 2;
    return 0;
  }

  bool consistent() const {
    return passed + static_cast<long long>(failures.size()) + static_cast<long long>(inconclusive.size()) == instances;
  }

 private:
  std::pair<long long, long long>& slot(const std::string& name) {
    for (auto& [n, c] : sections) {
      if (n == name) return c;
    }
    sections.push_back({name, {0, 0}});
    return sections.back().second;
  }

  void bump(const std::string& section, bool failed) {
    auto& s = slot(section);
    ++s.first;
    if (failed) ++s.second;
  }
};

inline nlohmann::ordered_json to_json(const verification_report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["instances"] = r.instances;
  j["passed"] = r.passed;
  auto fs = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) fs.push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
  j["failures"] = std::move(fs);
  auto is = nlohmann::ordered_json::array();
  for (const auto& i : r.inconclusive) is.push_back({{"instance", i.instance}, {"reason", i.reason}});
  j["inconclusive"] = std::move(is);
  auto ss = nlohmann::ordered_json::array();
  for (const auto& [n, c] : r.sections) ss.push_back({{"name", n}, {"instances", c.first}, {"failures", c.second}});
  j["sections"] = std::move(ss);
  j["ladder_complexes"] = r.ladder.complexes;
  j["config"] = r.config;
  return j;
}

/// Human-readable summary.
inline std::string to_text(const verification_report& r) {
  std::string s = "suite " + r.suite + ": " + std::to_string(r.instances) + " instances, " +
                  std::to_string(r.passed) + " passed, " + std::to_string(r.failures.size()) + " failed, " +
                  std::to_string(r.inconclusive.size()) + " inconclusive\n";
  for (const auto& [n, c] : r.sections) {
    s += "  " + n + ": " + std::to_string(c.first) + " checks, " + std::to_string(c.second) + " failed\n";
  }
  s += "  ladder: " + std::to_string(r.ladder.complexes) + " complexes audited\n";
  for (const auto& f : r.failures) {
    s += "  FAIL " + f.instance + "\n    expected: " + f.expected + "\n    got: " + f.got + "\n";
  }
  for (const auto& i : r.inconclusive) s += "  INCONCLUSIVE " + i.instance + ": " + i.reason + "\n";
  return s;
}

}  // namespace aslkit::verify
