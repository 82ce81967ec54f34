#pragma once

#include <string>
#include <vector>

namespace negabeta {

// One named verification outcome; detail carries the witness or the reason.
struct CheckReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

using Report = std::vector<CheckReport>;

inline bool all_pass(const Report& r) {
  for (const CheckReport& c : r)
    if (!c.pass) return false;
  return true;
}

}  // namespace negabeta
