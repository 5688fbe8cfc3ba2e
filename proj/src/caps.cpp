#include "hsg/caps.hpp"

#include <cstdlib>
#include <string>

namespace hsg {

const Caps& default_caps() {
  static const Caps caps = [] {
    Caps c;
    if (const char* env = std::getenv("HSG_MAX_TABLE")) {
      try {
        long long v = std::stoll(env);
        if (v > 0) {
          c.max_table = v;
          c.max_target_order = v;
        }
      } catch (const std::exception&) {
        // ignore malformed overrides, keep defaults
      }
    }
    return c;
  }();
  return caps;
}

}  // namespace hsg
