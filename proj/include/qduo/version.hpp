#pragma once

#include <string_view>

namespace qduo {

inline constexpr std::string_view kEngineName = "qduo";
inline constexpr std::string_view kEngineVersion = "0.1.0";

inline std::string engine_id() { return std::string(kEngineName) + " " + std::string(kEngineVersion); }

}  // namespace qduo
