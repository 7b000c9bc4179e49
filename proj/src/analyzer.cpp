#include "shqip/analyzer.hpp"

#include <algorithm>

namespace shqip {

namespace {

bool is_letter_cp(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return true;
  if (cp >= U'A' && cp <= U'Z') return true;
  return cp == 0x00E7 || cp == 0x00C7 || cp == 0x00EB || cp == 0x00CB;
}

bool is_joiner_cp(char32_t cp) { return cp == U'\'' || cp == U'-' || cp == 0x2019; }

bool is_sentence_end(char32_t cp) { return cp == U'.' || cp == U'?' || cp == U'!'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  bool sentence_used = false;

  struct Unit {
    char32_t cp;
    std::size_t byte, ch;
  };

  // decode once, then scan
  std::vector<Unit> units;
  {
    std::size_t pos = 0, index = 0;
    while (pos < text.size()) {
      std::size_t start = pos;
      char32_t cp = utf8::decode(text, pos);
      units.push_back({cp, start, index++});
    }
  }

  std::size_t i = 0;
  while (i < units.size()) {
    if (!is_letter_cp(units[i].cp)) {
      if (is_sentence_end(units[i].cp) && sentence_used) {
        ++sentence;
        sentence_used = false;
      }
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < units.size()) {
      if (is_letter_cp(units[i].cp)) {
        ++i;
        continue;
      }
      // apostrophe or hyphen glued between letters stays inside the token
      if (is_joiner_cp(units[i].cp) && i > start && i + 1 < units.size() &&
          is_letter_cp(units[i + 1].cp)) {
        i += 2;
        continue;
      }
      break;
    }
    Token t;
    t.byte_offset = units[start].byte;
    std::size_t end_byte = i < units.size() ? units[i].byte : text.size();
    t.byte_size = end_byte - t.byte_offset;
    t.surface = std::string(text.substr(t.byte_offset, t.byte_size));
    t.offset = units[start].ch;
    t.sentence = sentence;
    tokens.push_back(std::move(t));
    sentence_used = true;
  }
  return tokens;
}

AnnotatedToken annotate_token(const Token& token, const AnalyzerResources& res) {
  AnnotatedToken at;
  at.token = token;
  const std::string& surface = token.surface;

  for (const LexPayload& p : res.lexicon.lookup(surface)) {
    Analysis a;
    a.surface = surface;
    a.lemma = p.lemma;
    a.category = p.category;
    a.features = p.features;
    a.provenance = Provenance::lexicon;
    at.analyses.push_back(std::move(a));
  }
  bool in_lexicon = !at.analyses.empty();

  // numeric compounds run even on lexicon hits (dyfish could be lexicalized)
  for (Analysis& a :
       recognize_numeric_compound(fold_case(surface), res.lexicon, res.numerals, res.affixes)) {
    a.surface = surface;
    at.analyses.push_back(std::move(a));
  }

  if (!in_lexicon) {
    if (auto ordinal = recognize_ordinal_body(fold_case(surface), res.numerals)) {
      ordinal->surface = surface;
      at.analyses.push_back(std::move(*ordinal));
    }
    if (auto roman = parse_roman(surface)) {
      Analysis a;
      a.surface = surface;
      a.lemma = std::to_string(*roman);
      a.category = "NUM";
      a.features.add(std::to_string(*roman));
      a.provenance = Provenance::morphogrammar;
      at.analyses.push_back(std::move(a));
    }
    for (Analysis& a : recognize_affixed(fold_case(surface), res.lexicon, res.affixes)) {
      a.surface = surface;
      at.analyses.push_back(std::move(a));
    }
    at.clitic_pairs = split_clitic_imperative(fold_case(surface), res.lexicon, res.clitics);
  }

  if (at.analyses.empty() && at.clitic_pairs.empty()) {
    Analysis a;
    a.surface = surface;
    a.lemma = surface;
    a.category = "UNK";
    a.provenance = Provenance::unknown;
    at.analyses.push_back(std::move(a));
  }
  return at;
}

Annotation annotate(std::string_view text, const AnalyzerResources& res) {
  Annotation out;
  for (const Token& token : tokenize(text))
    out.tokens.push_back(annotate_token(token, res));

  GrammarResources grammar;
  grammar.lexicon = &res.lexicon;
  grammar.numerals = &res.numerals;
  grammar.clitics = res.clitics;
  out.spans = run_cascade(out.tokens, text, grammar);
  return out;
}

}  // namespace shqip
