#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace catforge {

// Index-based handles into a FinCategory's object and arrow lists.
// Invalid handles use the max value sentinel.

struct ObjectId {
  uint32_t value = std::numeric_limits<uint32_t>::max();

  constexpr ObjectId() = default;
  constexpr explicit ObjectId(uint32_t v) : value(v) {}

  constexpr bool valid() const { return value != std::numeric_limits<uint32_t>::max(); }
  constexpr auto operator<=>(const ObjectId&) const = default;
};

struct ArrowId {
  uint32_t value = std::numeric_limits<uint32_t>::max();

  constexpr ArrowId() = default;
  constexpr explicit ArrowId(uint32_t v) : value(v) {}

  constexpr bool valid() const { return value != std::numeric_limits<uint32_t>::max(); }
  constexpr auto operator<=>(const ArrowId&) const = default;
};

inline constexpr ObjectId kNoObject{};
inline constexpr ArrowId kNoArrow{};

}  // namespace catforge

template <>
struct std::hash<catforge::ObjectId> {
  size_t operator()(catforge::ObjectId id) const noexcept { return std::hash<uint32_t>{}(id.value); }
};

template <>
struct std::hash<catforge::ArrowId> {
  size_t operator()(catforge::ArrowId id) const noexcept { return std::hash<uint32_t>{}(id.value); }
};
