#pragma once

#include <string>
#include <vector>

namespace penta {

// One named check with a signed margin: nonnegative means satisfied with
// that much slack, negative means violated by that much.
struct Check {
  std::string name;
  bool pass = false;
  double margin = 0.0;
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, double margin) {
    checks.push_back(Check{name, pass, margin});
  }
  // Convenience: pass iff margin >= -tol.
  void add_margin(const std::string& name, double margin, double tol) {
    add(name, margin >= -tol, margin);
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* worst() const {
    const Check* w = nullptr;
    for (const auto& c : checks)
      if (!w || c.margin < w->margin) w = &c;
    return w;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace penta
