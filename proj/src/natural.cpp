#include "parity30/natural.hpp"

#include "parity30/errors.hpp"

#include <algorithm>
#include <cctype>

namespace parity30 {

Natural parse_natural(std::string_view text) {
  std::string_view digits = text;
  bool hex = false;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    hex = true;
    digits.remove_prefix(2);
  }
  if (digits.empty()) {
    throw ParseError("natural: empty input '" + std::string(text) + "'");
  }
  const auto ok = [hex](unsigned char c) {
    return hex ? std::isxdigit(c) != 0 : std::isdigit(c) != 0;
  };
  if (!std::all_of(digits.begin(), digits.end(), [&](char c) { return ok(static_cast<unsigned char>(c)); })) {
    throw ParseError("natural: invalid digits in '" + std::string(text) + "'");
  }
  if (hex) {
    return Natural("0x" + std::string(digits));
  }
  // cpp_int would read a leading 0 as octal
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return Natural(0);
  return Natural(std::string(digits.substr(first)));
}

std::string to_decimal(const Natural& n) { return n.str(); }

std::string to_binary(const Natural& n) {
  if (n == 0) return "0";
  const std::uint64_t len = bit_length(n);
  std::string out(len, '0');
  for (std::uint64_t i = 0; i < len; ++i) {
    if (boost::multiprecision::bit_test(n, static_cast<unsigned>(len - 1 - i))) {
      out[i] = '1';
    }
  }
  return out;
}

std::uint64_t bit_length(const Natural& n) {
  if (n == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(n)) + 1;
}

}  // namespace parity30
