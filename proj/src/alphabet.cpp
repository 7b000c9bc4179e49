#include "shqip/alphabet.hpp"

#include <algorithm>
#include <array>

namespace shqip {

namespace {

constexpr char32_t kCcedillaUpper = 0x00C7;
constexpr char32_t kCcedillaLower = 0x00E7;
constexpr char32_t kEdiaeresisUpper = 0x00CB;
constexpr char32_t kEdiaeresisLower = 0x00EB;

// a b c ç d dh e ë f g gj h i j k l ll m n nj o p q r rr s sh t th u v x xh y z zh
const std::array<Letter, kAlphabetSize> kLetters = {{
    {0, "a", false, true},   {1, "b", false, false},  {2, "c", false, false},
    {3, "ç", false, false}, {4, "d", false, false},  {5, "dh", true, false},
    {6, "e", false, true},   {7, "ë", false, true}, {8, "f", false, false},
    {9, "g", false, false},  {10, "gj", true, false}, {11, "h", false, false},
    {12, "i", false, true},  {13, "j", false, false}, {14, "k", false, false},
    {15, "l", false, false}, {16, "ll", true, false}, {17, "m", false, false},
    {18, "n", false, false}, {19, "nj", true, false}, {20, "o", false, true},
    {21, "p", false, false}, {22, "q", false, false}, {23, "r", false, false},
    {24, "rr", true, false}, {25, "s", false, false}, {26, "sh", true, false},
    {27, "t", false, false}, {28, "th", true, false}, {29, "u", false, true},
    {30, "v", false, false}, {31, "x", false, false}, {32, "xh", true, false},
    {33, "y", false, true},  {34, "z", false, false}, {35, "zh", true, false},
}};

const std::map<std::string, int, std::less<>>& surface_index() {
  static const std::map<std::string, int, std::less<>> index = [] {
    std::map<std::string, int, std::less<>> m;
    for (const Letter& l : kLetters) m.emplace(l.chars, l.index);
    return m;
  }();
  return index;
}

char32_t fold_cp(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp == kCcedillaUpper) return kCcedillaLower;
  if (cp == kEdiaeresisUpper) return kEdiaeresisLower;
  return cp;
}

char32_t upper_cp(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  if (cp == kCcedillaLower) return kCcedillaUpper;
  if (cp == kEdiaeresisLower) return kEdiaeresisUpper;
  return cp;
}

}  // namespace

namespace utf8 {

char32_t decode(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) -> unsigned char {
    return static_cast<unsigned char>(text[i]);
  };
  unsigned char b0 = byte(pos);
  if (b0 < 0x80) {
    pos += 1;
    return b0;
  }
  auto cont = [&](std::size_t i) {
    return pos + i < text.size() && (byte(pos + i) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(1)) {
    char32_t cp = (b0 & 0x1Fu) << 6 | (byte(pos + 1) & 0x3Fu);
    pos += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    char32_t cp = (b0 & 0x0Fu) << 12 | (byte(pos + 1) & 0x3Fu) << 6 |
                  (byte(pos + 2) & 0x3Fu);
    pos += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    char32_t cp = (b0 & 0x07u) << 18 | (byte(pos + 1) & 0x3Fu) << 12 |
                  (byte(pos + 2) & 0x3Fu) << 6 | (byte(pos + 3) & 0x3Fu);
    pos += 4;
    return cp;
  }
  pos += 1;  // stray byte, keep it opaque
  return b0;
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::size_t length(std::string_view text) {
  std::size_t pos = 0, n = 0;
  while (pos < text.size()) {
    decode(text, pos);
    ++n;
  }
  return n;
}

std::vector<std::string> split_units(std::string_view text) {
  std::vector<std::string> units;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    decode(text, pos);
    units.emplace_back(text.substr(start, pos - start));
  }
  return units;
}

}  // namespace utf8

const Letter& letter_at(int index) {
  return kLetters.at(static_cast<std::size_t>(index));
}

const Letter* find_letter(std::string_view folded_surface) {
  const auto& index = surface_index();
  auto it = index.find(folded_surface);
  return it == index.end() ? nullptr : &kLetters[static_cast<std::size_t>(it->second)];
}

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) utf8::encode(fold_cp(utf8::decode(text, pos)), out);
  return out;
}

std::string upper_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) utf8::encode(upper_cp(utf8::decode(text, pos)), out);
  return out;
}

GraphemeString::GraphemeString(std::vector<Grapheme> letters)
    : letters_(std::move(letters)) {
  for (const Grapheme& g : letters_) raw_ += g.raw;
}

GraphemeString segment(std::string_view text) {
  static const SegmentOverrides empty;
  return segment(text, empty);
}

GraphemeString segment(std::string_view text, const SegmentOverrides& overrides) {
  if (!overrides.empty()) {
    auto it = overrides.find(fold_case(text));
    if (it != overrides.end()) {
      std::vector<Grapheme> letters;
      std::size_t pos = 0;
      for (const std::string& part : it->second) {
        Grapheme g;
        g.raw = std::string(text.substr(pos, part.size()));
        std::string folded = fold_case(g.raw);
        if (const Letter* l = find_letter(folded)) {
          g.letter = l->index;
        } else {
          std::size_t p = 0;
          g.code = utf8::decode(folded, p);
        }
        pos += part.size();
        letters.push_back(std::move(g));
      }
      if (pos != text.size())
        throw error("segmentation override for '" + std::string(text) +
                    "' does not cover the word");
      return GraphemeString(std::move(letters));
    }
  }

  std::vector<Grapheme> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t p1 = pos;
    char32_t c0 = utf8::decode(text, p1);
    std::string folded0;
    utf8::encode(fold_cp(c0), folded0);

    // digraph first: longest match
    if (p1 < text.size()) {
      std::size_t p2 = p1;
      char32_t c1 = utf8::decode(text, p2);
      std::string folded2 = folded0;
      utf8::encode(fold_cp(c1), folded2);
      if (const Letter* l = find_letter(folded2); l && l->is_digraph) {
        Grapheme g;
        g.letter = l->index;
        g.raw = std::string(text.substr(pos, p2 - pos));
        letters.push_back(std::move(g));
        pos = p2;
        continue;
      }
    }
    Grapheme g;
    g.raw = std::string(text.substr(pos, p1 - pos));
    if (const Letter* l = find_letter(folded0)) {
      g.letter = l->index;
    } else {
      g.code = fold_cp(c0);
    }
    letters.push_back(std::move(g));
    pos = p1;
  }
  return GraphemeString(std::move(letters));
}

Ordering collate(const GraphemeString& a, const GraphemeString& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Grapheme& ga = a[i];
    const Grapheme& gb = b[i];
    // letters before opaque elements; opaque by code point
    bool oa = ga.opaque(), ob = gb.opaque();
    if (oa != ob) return oa ? Ordering::greater : Ordering::less;
    if (oa) {
      if (ga.code != gb.code) return ga.code < gb.code ? Ordering::less : Ordering::greater;
    } else if (ga.letter != gb.letter) {
      return ga.letter < gb.letter ? Ordering::less : Ordering::greater;
    }
  }
  if (a.size() != b.size())
    return a.size() < b.size() ? Ordering::less : Ordering::greater;
  return Ordering::equal;
}

Ordering collate(std::string_view a, std::string_view b) {
  return collate(segment(a), segment(b));
}

bool collate_less(std::string_view a, std::string_view b) {
  return collate(a, b) == Ordering::less;
}

GraphemeString drop_last(const GraphemeString& w, std::size_t n) {
  if (n > w.size())
    throw error("cannot drop " + std::to_string(n) + " letters from '" +
                w.raw() + "' (" + std::to_string(w.size()) + " letters)");
  std::vector<Grapheme> letters(w.letters().begin(), w.letters().end() - static_cast<std::ptrdiff_t>(n));
  return GraphemeString(std::move(letters));
}

}  // namespace shqip
