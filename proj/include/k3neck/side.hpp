#pragma once

#include <string>

namespace k3neck {

// Which half of the glued surface a chart or class lives on.
enum class Side { plus, minus };

inline Side opposite(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
inline std::string to_string(Side s) { return s == Side::plus ? "plus" : "minus"; }

}  // namespace k3neck
