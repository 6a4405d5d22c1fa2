#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace plk {

// Outcome of one exhaustively checked identity.  Only the first few failing
// basis tuples are kept.
struct Check {
  static constexpr std::size_t kMaxWitnesses = 8;

  std::string name;
  bool ok = true;
  std::size_t failures = 0;
  std::vector<std::vector<std::size_t>> witnesses;
  std::string note;

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  void fail(std::vector<std::size_t> tuple) {
    ok = false;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(tuple));
  }
  void require(bool cond, std::vector<std::size_t> tuple) {
    if (!cond) fail(std::move(tuple));
  }
  explicit operator bool() const { return ok; }
  std::string describe() const;
};

// Conjunction of several checks, used for multi-condition reports.
struct Report {
  std::string name;
  std::vector<Check> checks;

  Report() = default;
  explicit Report(std::string n) : name(std::move(n)) {}
  Check& add(Check c) {
    checks.push_back(std::move(c));
    return checks.back();
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const Check& get(const std::string& n) const;
  explicit operator bool() const { return ok(); }
  std::string describe() const;
};

// A documented hypothesis of a construction did not hold.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const Check& failed)
      : std::runtime_error("precondition failed: " + failed.describe()), check_(failed) {}
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
  const Check& check() const { return check_; }

 private:
  Check check_;
};

inline void require_check(const Check& c) {
  if (!c.ok) throw PreconditionError(c);
}

}  // namespace plk
