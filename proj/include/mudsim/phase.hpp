#pragma once

#include <string_view>

namespace mudsim {

// Crunching-gait phases in fixed cyclic order.
enum class Phase { Insertion, Stance, Extraction, Swing };

inline std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::Insertion: return "insertion";
    case Phase::Stance: return "stance";
    case Phase::Extraction: return "extraction";
    case Phase::Swing: return "swing";
  }
  return "?";
}

inline Phase next_phase(Phase p) {
  switch (p) {
    case Phase::Insertion: return Phase::Stance;
    case Phase::Stance: return Phase::Extraction;
    case Phase::Extraction: return Phase::Swing;
    case Phase::Swing: return Phase::Insertion;
  }
  return Phase::Insertion;
}

}  // namespace mudsim
