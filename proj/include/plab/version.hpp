#pragma once

namespace plab {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace plab
