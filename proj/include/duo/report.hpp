// Structured validation reports: one entry per checked law, with counterexample coordinates.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace duo {

struct Check {
  std::string id;     // what was checked, e.g. "duoidal.gamma-assoc"
  std::string axiom;  // law label, e.g. "(3)" or "pentagon"
  std::int64_t instances = 0;
  std::int64_t failures = 0;
  std::vector<nlohmann::json> counterexamples;  // capped, in evaluation order
  std::string note;

  bool passed() const { return failures == 0 && note.empty(); }
};

class Report {
 public:
  static constexpr std::size_t kMaxCounterexamples = 16;

  // Returns the index of a new check entry.
  std::size_t open(std::string id, std::string axiom);
  void pass(std::size_t c) { checks_[c].instances++; }
  void fail(std::size_t c, nlohmann::json where);
  // Records a structural problem that prevented evaluation (missing inverse, bad shape).
  void abort(std::size_t c, std::string why);
  void record(std::size_t c, bool ok, const nlohmann::json& where) {
    if (ok) pass(c); else fail(c, where);
  }

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<std::string> failed_axioms() const;
  bool failed(const std::string& axiom) const;
  void merge(const Report& other, const std::string& prefix = "");
  nlohmann::json to_json() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace duo
