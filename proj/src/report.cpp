#include "bicoalg/report.hpp"

#include "bicoalg/errors.hpp"

namespace bicoalg {

std::string Witness::str() const {
  std::string s = "basis " + std::to_string(basis_index);
  if (!lhs.empty() || !rhs.empty()) s += " lhs=" + lhs + " rhs=" + rhs;
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

void CheckReport::pass(std::string name, std::size_t evaluations) {
  checks_.push_back({std::move(name), std::nullopt, evaluations});
}

void CheckReport::fail(std::string name, Witness w) { checks_.push_back({std::move(name), std::move(w), 0}); }

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    CheckResult r = c;
    if (!prefix.empty()) r.name = prefix + "." + r.name;
    checks_.push_back(std::move(r));
  }
}

void CheckReport::compare(const std::string& name, std::size_t n, const std::function<Tensor(std::size_t)>& lhs,
                          const std::function<Tensor(std::size_t)>& rhs) {
  for (std::size_t i = 0; i < n; ++i) {
    try {
      Tensor a = lhs(i);
      Tensor b = rhs(i);
      if (!(a == b)) {
        fail(name, {i, a.str(), b.str(), {}});
        return;
      }
    } catch (const DimensionMismatch&) {
      throw;
    } catch (const Error& e) {
      fail(name, {i, {}, {}, e.what()});
      return;
    }
  }
  pass(name, n);
}

void CheckReport::require(const std::string& name, std::size_t n,
                          const std::function<std::optional<std::string>(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::string> bad;
    try {
      bad = pred(i);
    } catch (const DimensionMismatch&) {
      throw;
    } catch (const Error& e) {
      bad = e.what();
    }
    if (bad) {
      fail(name, {i, {}, {}, *bad});
      return;
    }
  }
  pass(name, n);
}

bool CheckReport::passed() const {
  for (const auto& c : checks_) {
    if (!c.passed()) return false;
  }
  return true;
}

const CheckResult* CheckReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> CheckReport::failed_names() const {
  std::vector<std::string> out;
  for (const auto& c : checks_) {
    if (!c.passed()) out.push_back(c.name);
  }
  return out;
}

std::string CheckReport::text() const {
  std::string s;
  for (const auto& c : checks_) {
    s += "CHECK " + c.name + ": " + (c.passed() ? "PASS" : "FAIL " + c.witness->str()) + "\n";
  }
  return s;
}

}  // namespace bicoalg
