#include "twklv/datum.hpp"

#include <stdexcept>

namespace twklv {

const std::vector<KindInfo>& all_kinds() {
  // kind, name, m, cross, cross delta, #cayley, cayley delta, role
  static const std::vector<KindInfo> table = {
      {Kind::C1Plus, "1C+", 1, true, 1, 0, 0, false},
      {Kind::C1Minus, "1C-", 1, true, -1, 0, 0, false},
      {Kind::I1_1Plus, "1I1+", 1, true, 0, 1, 1, false},
      {Kind::R1_1Minus, "1R1-", 1, false, 0, 2, -1, false},
      {Kind::R1sMinus, "1R1s-", 1, false, 0, 0, 0, false},
      {Kind::I1_2Plus, "1I2+", 1, false, 0, 2, 1, false},
      {Kind::R1_2Minus, "1R2-", 1, true, 0, 1, -1, false},
      {Kind::I1_2sPlus, "1I2s+", 1, false, 0, 0, 0, false},
      {Kind::RNP1Plus, "1RNP+", 1, false, 0, 0, 0, false},
      {Kind::IC1Minus, "1IC-", 1, false, 0, 0, 0, false},
      {Kind::C2Plus, "2C+", 2, true, 2, 0, 0, false},
      {Kind::C2Minus, "2C-", 2, true, -2, 0, 0, false},
      {Kind::SI2Plus, "2SI+", 2, false, 0, 1, 1, false},
      {Kind::SR2Minus, "2SR-", 2, false, 0, 1, -1, false},
      {Kind::I2_11Plus, "2I11+", 2, true, 0, 1, 2, false},
      {Kind::R2_11Minus, "2R11-", 2, false, 0, 2, -2, false},
      {Kind::I2_22Plus, "2I22+", 2, false, 0, 2, 2, false},
      {Kind::R2_22Minus, "2R22-", 2, true, 0, 1, -2, false},
      {Kind::I2_12Plus, "2I12+", 2, true, 0, 2, 2, true},
      {Kind::R2_21Minus, "2R21-", 2, true, 0, 2, -2, true},
      {Kind::RNP2Plus, "2RNP+", 2, false, 0, 0, 0, false},
      {Kind::IC2Minus, "2IC-", 2, false, 0, 0, 0, false},
      {Kind::C3Plus, "3C+", 3, true, 3, 0, 0, false},
      {Kind::C3Minus, "3C-", 3, true, -3, 0, 0, false},
      {Kind::SI3Plus, "3SI+", 3, false, 0, 1, 2, false},
      {Kind::R3Minus, "3R-", 3, false, 0, 1, -2, false},
      {Kind::I3Plus, "3I+", 3, false, 0, 1, 2, false},
      {Kind::SR3Minus, "3SR-", 3, false, 0, 1, -2, false},
      {Kind::RNP3Plus, "3RNP+", 3, false, 0, 0, 0, false},
      {Kind::IC3Minus, "3IC-", 3, false, 0, 0, 0, false},
  };
  return table;
}

const KindInfo& kind_info(Kind k) {
  for (const auto& info : all_kinds())
    if (info.kind == k) return info;
  throw std::logic_error("unknown kind");
}

std::optional<Kind> parse_kind(std::string_view s) {
  std::string ascii(s);
  // accept the typographic minus sign U+2212
  const std::string minus = "\xE2\x88\x92";
  for (auto pos = ascii.find(minus); pos != std::string::npos; pos = ascii.find(minus))
    ascii.replace(pos, minus.size(), "-");
  for (const auto& info : all_kinds())
    if (info.name == ascii) return info.kind;
  return std::nullopt;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::Plus: return "plus";
    case Role::Minus: return "minus";
    case Role::Sum: return "sum";
    case Role::Diff: return "diff";
    case Role::None: break;
  }
  return "";
}

std::optional<Role> parse_role(std::string_view s) {
  if (s == "plus") return Role::Plus;
  if (s == "minus") return Role::Minus;
  if (s == "sum") return Role::Sum;
  if (s == "diff") return Role::Diff;
  return std::nullopt;
}

}  // namespace twklv
