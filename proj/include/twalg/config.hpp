// Size caps.  3^d vertices means memory grows fast; the caps below keep an
// accidental `--d 12` from taking the machine down.
#pragma once

#include <cstdlib>
#include <string>

namespace twalg {

inline constexpr int kDefaultSizeCap = 8;     // vertex-level constructions, 3^8 = 6561
inline constexpr int kDefaultClosureCap = 4;  // multiplicative closure, 9^4-length rows

// TWALG_CAP overrides the vertex-level cap.
inline int size_cap() {
  static const int cap = [] {
    if (const char* e = std::getenv("TWALG_CAP")) {
      int v = std::atoi(e);
      if (v > 0) return v;
    }
    return kDefaultSizeCap;
  }();
  return cap;
}

}  // namespace twalg
