#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "isecode/family.hpp"

namespace isecode {

// Text form: "s n" on the first line, then one digit-string word per line.
// Blank lines are ignored; duplicates are an error.
inline void write_family_text(std::ostream& os, const Family& f) {
  os << f.params().s() << ' ' << f.params().n() << '\n';
  f.bits().for_each([&](std::size_t idx) { os << to_text(decode(idx, f.params())) << '\n'; });
}

// `fallback` supplies the space for a completely empty input; without it an
// empty input is a parse error.
inline Family read_family_text(std::istream& is, std::optional<SpaceParams> fallback = std::nullopt) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<SpaceParams> params;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream header(line);
    long long s = 0, n = 0;
    std::string extra;
    if (!(header >> s >> n) || (header >> extra)) throw ParseError(lineno, "expected header \"s n\"");
    if (s < 2 || s > 9 || n < 1 || n > 64)
      throw ParseError(lineno, "header out of range (text form needs 2 <= s <= 9, n >= 1)");
    try {
      params.emplace(static_cast<unsigned>(s), static_cast<unsigned>(n));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
    break;
  }
  if (!params) {
    if (fallback) return Family::empty(*fallback);
    throw ParseError(0, "empty family file has no \"s n\" header");
  }
  DenseBits bits(params->word_count());
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    const auto text = std::string_view(line).substr(first, last - first + 1);
    WordIndex idx = 0;
    try {
      idx = encode(parse_word(text, *params));
    } catch (const ParameterError& e) {
      throw ParseError(lineno, e.what());
    }
    if (bits.test(idx)) throw ParseError(lineno, "duplicate word '" + std::string(text) + "'");
    bits.set(idx);
  }
  return Family(*params, std::move(bits));
}

// Binary form: u32 s, u32 n (little-endian), then ceil(s^n / 8) bytes of the
// membership bitset, bit k of byte b holding word index 8b + k.
inline void write_family_binary(std::ostream& os, const Family& f) {
  auto put_u32 = [&](std::uint32_t v) {
    for (int k = 0; k < 4; ++k) os.put(static_cast<char>((v >> (8 * k)) & 0xFF));
  };
  put_u32(f.params().s());
  put_u32(f.params().n());
  const auto nbytes = (f.params().word_count() + 7) / 8;
  const auto& blocks = f.bits().blocks();
  for (std::uint64_t b = 0; b < nbytes; ++b)
    os.put(static_cast<char>((blocks[b / 8] >> (8 * (b % 8))) & 0xFF));
}

inline Family read_family_binary(std::istream& is) {
  auto get_u32 = [&]() {
    std::array<unsigned char, 4> buf{};
    if (!is.read(reinterpret_cast<char*>(buf.data()), 4)) throw ParseError(0, "truncated binary header");
    return std::uint32_t{buf[0]} | std::uint32_t{buf[1]} << 8 | std::uint32_t{buf[2]} << 16 |
           std::uint32_t{buf[3]} << 24;
  };
  const auto s = get_u32();
  const auto n = get_u32();
  std::optional<SpaceParams> params;
  try {
    params.emplace(s, n);
  } catch (const std::exception& e) {
    throw ParseError(0, std::string("bad binary header: ") + e.what());
  }
  DenseBits bits(params->word_count());
  const auto nbytes = (params->word_count() + 7) / 8;
  auto& blocks = bits.blocks();
  for (std::uint64_t b = 0; b < nbytes; ++b) {
    const int c = is.get();
    if (c == std::char_traits<char>::eof()) throw ParseError(0, "truncated binary bitset");
    blocks[b / 8] |= static_cast<std::uint64_t>(c & 0xFF) << (8 * (b % 8));
  }
  if (params->word_count() % 64 && (blocks.back() >> (params->word_count() % 64)))
    throw ParseError(0, "binary bitset has bits set past s^n");
  return Family(*params, std::move(bits));
}

}  // namespace isecode
