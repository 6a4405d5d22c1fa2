#include "plk/check.hpp"

#include <sstream>

namespace plk {

std::string Check::describe() const {
  std::ostringstream os;
  os << name << ": " << (ok ? "pass" : "FAIL");
  if (!ok) {
    os << " (" << failures << " failing tuple" << (failures == 1 ? "" : "s");
    if (!witnesses.empty()) {
      os << ", first";
      for (const auto& w : witnesses) {
        os << " (";
        for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
        os << ")";
        break;
      }
    }
    os << ")";
  }
  if (!note.empty()) os << " [" << note << "]";
  return os.str();
}

const Check& Report::get(const std::string& n) const {
  for (const auto& c : checks)
    if (c.name == n) return c;
  throw std::out_of_range("no check named " + n);
}

std::string Report::describe() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "pass" : "FAIL");
  for (const auto& c : checks) os << "\n  " << c.describe();
  return os.str();
}

}  // namespace plk
