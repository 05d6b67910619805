#pragma once

#include <string>
#include <string_view>

namespace rtl {

// A counted subgraph: the cycle C_s or the path P_l (l edges).
struct Target {
  enum class Kind { Cycle, Path };
  Kind kind = Kind::Cycle;
  int length = 3;

  static Target cycle(int s) { return {Kind::Cycle, s}; }
  static Target path(int l) { return {Kind::Path, l}; }

  // "C4", "P3" (case-insensitive prefix). Throws InvalidParam.
  static Target parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Target&, const Target&) = default;
};

}  // namespace rtl
