#pragma once

namespace bclique {

inline constexpr const char* version = "0.1.0";

}  // namespace bclique
