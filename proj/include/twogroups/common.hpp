#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twogroups {

/// Sentinel for "undefined" entries in partial tables.
inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// Malformed input: tables of the wrong shape, dangling identifiers,
/// ill-typed structure maps. Distinct from axiom violations.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that does not satisfy its precondition.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate that must hold for valid input failed to hold.
class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Witness = std::vector<std::string>;

struct Violation {
  std::string axiom;
  std::vector<std::string> witness;
  std::string detail;
};

struct CheckSummary {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

/// Outcome of an exhaustive validation. Structural problems are kept apart
/// from axiom violations; an empty report (no structural errors and no
/// violations) means the input is valid.
class ValidationReport {
 public:
  /// Witness lists are truncated per check after this many entries; the
  /// failure counters in `checks()` stay exact.
  static constexpr std::size_t kMaxWitnessesPerCheck = 256;

  void add_structural(std::string what, std::vector<std::string> witness = {},
                      std::string detail = {});

  /// Registers a check; subsequent `record` calls with the same name count
  /// against it.
  void begin_check(std::string name);
  void record(std::string_view name, bool ok, const std::vector<std::string>& witness = {},
              std::string detail = {});

  /// Like `record`, but the witness is only built when the case fails.
  template <typename MakeWitness>
  void expect(std::string_view name, bool ok, MakeWitness&& make_witness, std::string detail = {}) {
    if (ok) {
      ++summary_for(name).cases;
      return;
    }
    record(name, false, make_witness(), std::move(detail));
  }

  /// Convenience for a check that has no individual cases (e.g. a single
  /// global property).
  void add_violation(std::string axiom, std::vector<std::string> witness = {},
                     std::string detail = {});

  bool ok() const { return structural_.empty() && violations_.empty(); }
  bool structurally_sound() const { return structural_.empty(); }

  const std::vector<Violation>& structural() const { return structural_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<CheckSummary>& checks() const { return checks_; }

  bool has_violation(std::string_view axiom) const;
  bool has_witness(std::string_view axiom, const std::vector<std::string>& witness) const;
  const Violation* first_violation(std::string_view axiom) const;
  const CheckSummary* check(std::string_view name) const;

  void merge(const ValidationReport& other, std::string_view prefix = {});

 private:
  CheckSummary& summary_for(std::string_view name);

  std::vector<Violation> structural_;
  std::vector<Violation> violations_;
  std::vector<CheckSummary> checks_;
  std::size_t last_ = 0;  // index of the most recent summary lookup
};

}  // namespace twogroups
