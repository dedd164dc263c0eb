#pragma once

#define UNRUHPM_VERSION "1.0.0"

namespace unruhpm {
inline constexpr const char* kVersion = UNRUHPM_VERSION;
}
