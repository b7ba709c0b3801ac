#pragma once

#include <string_view>

namespace cmprob {

// Horizontal acts on columns, Vertical on rows.
enum class Axis { Horizontal, Vertical };

inline std::string_view axis_name(Axis a) {
  return a == Axis::Horizontal ? "H" : "V";
}

inline Axis other(Axis a) {
  return a == Axis::Horizontal ? Axis::Vertical : Axis::Horizontal;
}

}  // namespace cmprob
