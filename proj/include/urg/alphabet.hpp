// SPDX-License-Identifier: MIT
//
// Finite alphabets and symbol-index sequences. Sequences store symbol indices
// (not characters) so all algorithms work on {0..alpha-1}; the alphabet's
// declared characters are only used at the I/O boundary.
#ifndef URG_ALPHABET_HPP
#define URG_ALPHABET_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace urg {

inline constexpr int kMaxAlphabet = 16;

class Alphabet {
 public:
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
    if (symbols_.size() > kMaxAlphabet)
      throw std::invalid_argument("alphabet size exceeds supported maximum of 16");
    lookup_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(symbols_[i]);
      if (lookup_[c] != -1) throw std::invalid_argument("duplicate symbol in alphabet");
      lookup_[c] = static_cast<std::int16_t>(i);
    }
  }

  static const Alphabet& binary() {
    static const Alphabet a("01");
    return a;
  }

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int i) const { return symbols_.at(static_cast<std::size_t>(i)); }

  int index(char c) const {
    int i = lookup_[static_cast<unsigned char>(c)];
    if (i < 0)
      throw std::invalid_argument(std::string("symbol '") + c + "' not in alphabet \"" +
                                  symbols_ + "\"");
    return i;
  }

  bool contains(char c) const { return lookup_[static_cast<unsigned char>(c)] >= 0; }
  const std::string& symbols() const { return symbols_; }
  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

 private:
  std::string symbols_;
  std::array<std::int16_t, 256> lookup_{};
};

// A sequence of symbol indices over an alphabet of size `alpha`.
struct Sequence {
  std::uint8_t alpha = 2;
  std::vector<std::uint8_t> syms;

  Sequence() = default;
  explicit Sequence(int alphabet_size) : alpha(check_alpha(alphabet_size)) {}
  Sequence(int alphabet_size, std::vector<std::uint8_t> s)
      : alpha(check_alpha(alphabet_size)), syms(std::move(s)) {
    for (std::uint8_t v : syms)
      if (v >= alpha) throw std::invalid_argument("sequence symbol index out of range");
  }

  int n() const { return static_cast<int>(syms.size()); }
  bool empty() const { return syms.empty(); }
  std::uint8_t operator[](int i) const { return syms[static_cast<std::size_t>(i)]; }

  void push(int sym) {
    if (sym < 0 || sym >= alpha) throw std::invalid_argument("sequence symbol index out of range");
    syms.push_back(static_cast<std::uint8_t>(sym));
  }

  bool operator==(const Sequence& o) const { return alpha == o.alpha && syms == o.syms; }

 private:
  static std::uint8_t check_alpha(int a) {
    if (a < 2 || a > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in [2,16]");
    return static_cast<std::uint8_t>(a);
  }
};

// Parse a rendered sequence ("0110", "abca", ...) against an alphabet.
inline Sequence make_sequence(const Alphabet& alphabet, const std::string& text) {
  Sequence s(alphabet.size());
  s.syms.reserve(text.size());
  for (char c : text) s.push(alphabet.index(c));
  return s;
}

// Binary convenience literal, e.g. seq("0011").
inline Sequence seq(const std::string& bits) { return make_sequence(Alphabet::binary(), bits); }

inline std::string render(const Alphabet& alphabet, const Sequence& s) {
  if (alphabet.size() != s.alpha)
    throw std::invalid_argument("render: alphabet size does not match sequence");
  std::string out;
  out.reserve(s.syms.size());
  for (std::uint8_t v : s.syms) out.push_back(alphabet.symbol(v));
  return out;
}

// Lexicographic odometer over X^n: advances `s` to the next sequence,
// returning false after wrapping past the last one. Start from all zeros.
inline bool next_sequence(Sequence& s) {
  for (int i = s.n() - 1; i >= 0; --i) {
    if (++s.syms[static_cast<std::size_t>(i)] < s.alpha) return true;
    s.syms[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

// Number of length-n sequences, guarding against overflow of the enumeration.
inline std::uint64_t sequence_space_size(int alpha, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (1ULL << 62) / static_cast<std::uint64_t>(alpha))
      throw std::invalid_argument("sequence space too large to enumerate");
    total *= static_cast<std::uint64_t>(alpha);
  }
  return total;
}

}  // namespace urg

#endif  // URG_ALPHABET_HPP
