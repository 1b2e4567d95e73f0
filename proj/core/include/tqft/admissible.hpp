#pragma once

#include <string>

#include "tqft/scalar.hpp"

namespace tqft {

enum class AdmissibilityReason { Ok, NegativeColor, ColorAboveLevel, Parity, Triangle, LevelSum };

struct AdmissibilityResult {
  bool admissible = false;
  AdmissibilityReason reason = AdmissibilityReason::Ok;
  explicit operator bool() const { return admissible; }
};

/// Triangle inequality and even parity; at a root of unity also every color
/// <= p-2 and i+j+k <= 2p-4.
AdmissibilityResult check_admissible_triple(int i, int j, int k, const RingSpec& ring);
inline bool is_admissible_triple(int i, int j, int k, const RingSpec& ring) {
  return check_admissible_triple(i, j, k, ring).admissible;
}

std::string to_string(AdmissibilityReason r);

}  // namespace tqft
