#pragma once

#include <cstddef>
#include <cstdint>

namespace jensen {

inline constexpr std::uint64_t kDefaultClosureCap = 100000;
inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;
inline constexpr std::uint64_t kDefaultOracleCap = 10000000;
inline constexpr std::uint64_t kDefaultSampleCount = 10000;
inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr std::uint32_t kDefaultMaxSymmetricDegree = 5;

// Triple checks run exhaustively up to this group order, sampled above it.
inline constexpr std::size_t kExhaustiveTripleLimit = 24;

}  // namespace jensen
