#pragma once

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace ramsey
