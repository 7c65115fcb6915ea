#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicoalg/tensor.hpp"

namespace bicoalg {

/// Evidence for a failed check: the basis vector where it failed and the two
/// sides that should have agreed.
struct Witness {
  std::size_t basis_index = 0;
  std::string lhs;
  std::string rhs;
  std::string note;

  std::string str() const;
};

struct CheckResult {
  std::string name;
  std::optional<Witness> witness;  // empty iff the check passed
  std::size_t evaluations = 0;

  bool passed() const noexcept { return !witness.has_value(); }
};

class CheckReport {
 public:
  void pass(std::string name, std::size_t evaluations = 0);
  void fail(std::string name, Witness w);
  /// Appends all checks of `other`, prefixing names with `prefix.` when given.
  void merge(const CheckReport& other, const std::string& prefix = {});

  /// Runs lhs(i) == rhs(i) for i < n; library errors raised while evaluating
  /// (membership, corestriction) count as a failure at that index.
  void compare(const std::string& name, std::size_t n, const std::function<Tensor(std::size_t)>& lhs,
               const std::function<Tensor(std::size_t)>& rhs);
  /// Runs pred(i) for i < n; a non-empty return is the failure note.
  void require(const std::string& name, std::size_t n, const std::function<std::optional<std::string>(std::size_t)>& pred);

  bool passed() const;
  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failed_names() const;

  /// Line-oriented "CHECK <name>: PASS|FAIL [witness]".
  std::string text() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace bicoalg
