#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tiersim {

inline constexpr std::size_t kPageSize = 4096;
inline constexpr std::size_t kRegionBytes = 2ull << 20;  // 2 MiB
inline constexpr std::size_t kPagesPerRegion = kRegionBytes / kPageSize;

// Placement value 0 means DRAM; positive values are compressed tier ids.
inline constexpr int kDramPlacement = 0;

using PageId = std::uint64_t;
using Bytes = std::vector<std::uint8_t>;

}  // namespace tiersim
