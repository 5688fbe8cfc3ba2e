#pragma once

namespace hsg {

// Size limits for materialized structures. HSG_MAX_TABLE (element count)
// overrides both values when set.
struct Caps {
  long long max_table = 4096;            // elements of any materialized Cayley table
  long long max_target_order = 1 << 20;  // order of embedding targets kept as explicit bitsets
};

const Caps& default_caps();

}  // namespace hsg
