#include "rtl/target.hpp"

#include <charconv>
#include <string>

#include "rtl/errors.hpp"

namespace rtl {

Target Target::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::InvalidParam, "target must look like C4 or P3");
  Target t;
  switch (text.front()) {
    case 'C':
    case 'c': t.kind = Kind::Cycle; break;
    case 'P':
    case 'p': t.kind = Kind::Path; break;
    default: throw Error(ErrorKind::InvalidParam, "target must start with C or P: " + std::string(text));
  }
  auto digits = text.substr(1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.length);
  if (ec != std::errc{} || end != digits.data() + digits.size()) {
    throw Error(ErrorKind::InvalidParam, "bad target length in " + std::string(text));
  }
  if (t.kind == Kind::Cycle && t.length < 3) throw Error(ErrorKind::InvalidParam, "cycles need length >= 3");
  if (t.kind == Kind::Path && t.length < 1) throw Error(ErrorKind::InvalidParam, "paths need length >= 1");
  return t;
}

std::string Target::to_string() const {
  return (kind == Kind::Cycle ? "C" : "P") + std::to_string(length);
}

}  // namespace rtl
