#include "tqft/admissible.hpp"

namespace tqft {

AdmissibilityResult check_admissible_triple(int i, int j, int k, const RingSpec& ring) {
  using R = AdmissibilityReason;
  if (i < 0 || j < 0 || k < 0) return {false, R::NegativeColor};
  if (ring.is_root_of_unity() && (i > ring.max_color() || j > ring.max_color() || k > ring.max_color()))
    return {false, R::ColorAboveLevel};
  if ((i + j + k) % 2) return {false, R::Parity};
  if (k > i + j || i > j + k || j > i + k) return {false, R::Triangle};
  if (ring.is_root_of_unity() && i + j + k > 2 * ring.p() - 4) return {false, R::LevelSum};
  return {true, R::Ok};
}

std::string to_string(AdmissibilityReason r) {
  switch (r) {
    case AdmissibilityReason::Ok:
      return "ok";
    case AdmissibilityReason::NegativeColor:
      return "negative_color";
    case AdmissibilityReason::ColorAboveLevel:
      return "color_above_p_minus_2";
    case AdmissibilityReason::Parity:
      return "odd_sum";
    case AdmissibilityReason::Triangle:
      return "triangle_inequality";
    case AdmissibilityReason::LevelSum:
      return "sum_above_2p_minus_4";
  }
  return "unknown";
}

}  // namespace tqft
