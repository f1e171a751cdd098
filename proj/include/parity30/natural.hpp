#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace parity30 {

// Arbitrary-precision integer used for every trajectory value. Operations
// that iterate the map require values >= 1; arithmetic is exact.
using Natural = boost::multiprecision::cpp_int;

// Accepts decimal or 0x-prefixed hex. Throws ParseError on anything else.
Natural parse_natural(std::string_view text);

std::string to_decimal(const Natural& n);

// Binary representation without leading zeros ("1" for 1, "1101" for 13).
std::string to_binary(const Natural& n);

// Bits in the binary representation; 0 for n = 0, 1 for n = 1.
std::uint64_t bit_length(const Natural& n);

}  // namespace parity30
