#include "duo/report.hpp"

namespace duo {

std::size_t Report::open(std::string id, std::string axiom) {
  checks_.push_back(Check{std::move(id), std::move(axiom), 0, 0, {}, {}});
  return checks_.size() - 1;
}

void Report::fail(std::size_t c, nlohmann::json where) {
  Check& k = checks_[c];
  k.instances++;
  k.failures++;
  if (k.counterexamples.size() < kMaxCounterexamples) k.counterexamples.push_back(std::move(where));
}

void Report::abort(std::size_t c, std::string why) {
  Check& k = checks_[c];
  if (k.note.empty()) k.note = std::move(why);
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.passed()) return false;
  return true;
}

std::vector<std::string> Report::failed_axioms() const {
  std::vector<std::string> out;
  for (const auto& c : checks_)
    if (!c.passed()) out.push_back(c.axiom);
  return out;
}

bool Report::failed(const std::string& axiom) const {
  for (const auto& c : checks_)
    if (c.axiom == axiom && !c.passed()) return true;
  return false;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.id = prefix + "." + c.id;
    checks_.push_back(std::move(c));
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j;
    j["id"] = c.id;
    j["axiom"] = c.axiom;
    j["instances"] = c.instances;
    j["failures"] = c.failures;
    j["status"] = c.passed() ? "pass" : "fail";
    if (!c.counterexamples.empty()) j["counterexample"] = c.counterexamples;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace duo
