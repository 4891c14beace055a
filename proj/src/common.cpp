#include "twogroups/common.hpp"

#include <algorithm>

namespace twogroups {

void ValidationReport::add_structural(std::string what, std::vector<std::string> witness,
                                      std::string detail) {
  structural_.push_back({std::move(what), std::move(witness), std::move(detail)});
}

CheckSummary& ValidationReport::summary_for(std::string_view name) {
  if (last_ < checks_.size() && checks_[last_].name == name) return checks_[last_];
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const CheckSummary& c) { return c.name == name; });
  last_ = static_cast<std::size_t>(it - checks_.begin());
  if (it != checks_.end()) return *it;
  checks_.push_back({std::string(name), 0, 0});
  return checks_.back();
}

void ValidationReport::begin_check(std::string name) { summary_for(name); }

void ValidationReport::record(std::string_view name, bool ok,
                              const std::vector<std::string>& witness, std::string detail) {
  CheckSummary& s = summary_for(name);
  ++s.cases;
  if (ok) return;
  ++s.failures;
  if (s.failures <= kMaxWitnessesPerCheck)
    violations_.push_back({std::string(name), witness, std::move(detail)});
}

void ValidationReport::add_violation(std::string axiom, std::vector<std::string> witness,
                                     std::string detail) {
  CheckSummary& s = summary_for(axiom);
  ++s.cases;
  ++s.failures;
  violations_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
}

bool ValidationReport::has_violation(std::string_view axiom) const {
  return first_violation(axiom) != nullptr;
}

bool ValidationReport::has_witness(std::string_view axiom,
                                   const std::vector<std::string>& witness) const {
  return std::any_of(violations_.begin(), violations_.end(), [&](const Violation& v) {
    return v.axiom == axiom && v.witness == witness;
  });
}

const Violation* ValidationReport::first_violation(std::string_view axiom) const {
  for (const auto& v : violations_)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

const CheckSummary* ValidationReport::check(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

void ValidationReport::merge(const ValidationReport& other, std::string_view prefix) {
  auto prefixed = [&](const std::string& s) {
    return prefix.empty() ? s : std::string(prefix) + ": " + s;
  };
  for (const auto& v : other.structural_)
    structural_.push_back({prefixed(v.axiom), v.witness, v.detail});
  for (const auto& v : other.violations_)
    violations_.push_back({prefixed(v.axiom), v.witness, v.detail});
  for (const auto& c : other.checks_) {
    CheckSummary& s = summary_for(prefixed(c.name));
    s.cases += c.cases;
    s.failures += c.failures;
  }
}

}  // namespace twogroups
