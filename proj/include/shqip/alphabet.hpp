#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shqip {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kAlphabetSize = 36;
inline constexpr int kOpaque = -1;

// One of the 36 letters of the Albanian alphabet. Nine letters are written
// with two characters (dh gj ll nj rr sh th xh zh) and count as one unit.
struct Letter {
  int index;           // position in alphabet order, 0..35
  const char* chars;   // lowercase surface form, UTF-8
  bool is_digraph;
  bool is_vowel;
};

const Letter& letter_at(int index);

// Lookup by lowercase surface form ("a", "dh", ...); null when not a letter.
const Letter* find_letter(std::string_view folded_surface);

// Albanian case folding: ASCII A-Z plus Ç and Ë. Everything else passes
// through unchanged.
std::string fold_case(std::string_view text);
std::string upper_case(std::string_view text);

// One element of a segmented word: an alphabet letter or an opaque character
// (anything outside the alphabet, kept as a singleton element).
struct Grapheme {
  int letter = kOpaque;  // alphabet index, or kOpaque
  std::string raw;       // surface as written, original case preserved
  char32_t code = 0;     // code point when opaque

  bool opaque() const { return letter == kOpaque; }
};

// A word as a sequence of Albanian letters. Joining the elements' raw forms
// reproduces the original text exactly.
class GraphemeString {
 public:
  GraphemeString() = default;
  explicit GraphemeString(std::vector<Grapheme> letters);

  const std::vector<Grapheme>& letters() const { return letters_; }
  const std::string& raw() const { return raw_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Grapheme& operator[](std::size_t i) const { return letters_[i]; }

 private:
  std::vector<Grapheme> letters_;
  std::string raw_;
};

// word (case-folded) -> explicit letter split, consulted before greedy
// segmentation; empty by default.
using SegmentOverrides = std::map<std::string, std::vector<std::string>>;

// Greedy longest-match segmentation over the letter inventory,
// case-insensitive. Total: unknown characters become opaque elements.
GraphemeString segment(std::string_view text);
GraphemeString segment(std::string_view text, const SegmentOverrides& overrides);

enum class Ordering { less, equal, greater };

// Dictionary order on letter indices; a word starting with d precedes every
// word starting with dh. Opaque elements sort after all letters, among
// themselves by code point.
Ordering collate(const GraphemeString& a, const GraphemeString& b);
Ordering collate(std::string_view a, std::string_view b);
bool collate_less(std::string_view a, std::string_view b);

// Removes the last n letters (a digraph counts as one). Throws shqip::error
// naming the word when n exceeds the letter length.
GraphemeString drop_last(const GraphemeString& w, std::size_t n);

namespace utf8 {

// Decodes the code point at pos and advances pos past it. Invalid bytes are
// returned as-is (latin-1 style) so that no input can fail.
char32_t decode(std::string_view text, std::size_t& pos);
void encode(char32_t cp, std::string& out);
std::size_t length(std::string_view text);

// One string per code point.
std::vector<std::string> split_units(std::string_view text);

}  // namespace utf8

}  // namespace shqip
