#include "parity30/errors.hpp"
#include "parity30/rule30_hash.hpp"

namespace parity30::rule30_hash {

namespace {

// First 4096 bits of the fractional binary expansion of pi, MSB first,
// 4 bits per hex digit. The leading words match the published expansion
// 0x243f6a88 85a308d3 13198a2e ...
constexpr const char* kPiFractionHex =
    "243f6a8885a308d313198a2e03707344a4093822299f31d0082efa98ec4e6c89"
    "452821e638d01377be5466cf34e90c6cc0ac29b7c97c50dd3f84d5b5b5470917"
    "9216d5d98979fb1bd1310ba698dfb5ac2ffd72dbd01adfb7b8e1afed6a267e96"
    "ba7c9045f12c7f9924a19947b3916cf70801f2e2858efc16636920d871574e69"
    "a458fea3f4933d7e0d95748f728eb658718bcd5882154aee7b54a41dc25a59b5"
    "9c30d5392af26013c5d1b023286085f0ca417918b8db38ef8e79dcb0603a180e"
    "6c9e0e8bb01e8a3ed71577c1bd314b2778af2fda55605c60e65525f3aa55ab94"
    "5748986263e8144055ca396a2aab10b6b4cc5c341141e8cea15486af7c72e993"
    "b3ee1411636fbc2a2ba9c55d741831f6ce5c3e169b87931eafd6ba336c24cf5c"
    "7a325381289586773b8f48986b4bb9afc4bfe81b6628219361d809ccfb21a991"
    "487cac605dec8032ef845d5de98575b1dc262302eb651b8823893e81d396acc5"
    "0f6d6ff383f442392e0b4482a484200469c8f04a9e1f9b5e21c66842f6e96c9a"
    "670c9c61abd388f06a51a0d2d8542f68960fa728ab5133a36eef0b6c137a3be4"
    "ba3bf0507efb2a98a1f1651d39af017666ca593e82430e888cee8619456f9fb4"
    "7d84a5c33b8b5ebee06f75d885c12073401a449f56c16aa64ed3aa62363f7706"
    "1bfedf72429b023d37d0d724d00a1248db0fead349f1c09b075372c980991b7b";

}  // namespace

BitString pi_bits(std::uint64_t bits) {
  if (bits < 1) throw DomainError("pi_bits: requires bits >= 1");
  if (bits > kPiTableBits) {
    throw DomainError("pi_bits: embedded table holds " + std::to_string(kPiTableBits) +
                      " bits, requested " + std::to_string(bits));
  }
  return BitString::from_hex(kPiFractionHex).prefix(bits);
}

}  // namespace parity30::rule30_hash
