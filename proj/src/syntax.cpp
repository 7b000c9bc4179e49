#include "shqip/syntax.hpp"

#include <algorithm>
#include <functional>

namespace shqip {

namespace {

bool claimed(const AnnotatedToken& t) { return t.span_id >= 0; }

bool range_free(std::span<const AnnotatedToken> sentence, std::size_t begin,
                std::size_t end) {
  for (std::size_t i = begin; i < end; ++i)
    if (claimed(sentence[i])) return false;
  return true;
}

std::string folded_surface(const AnnotatedToken& t) {
  return fold_case(t.token.surface);
}

bool is_particle(std::string_view folded) {
  return folded == "i" || folded == "e" || folded == "të" || folded == "së";
}

const char* particle_gender(std::string_view folded) {
  if (folded == "i") return "m";
  if (folded == "e") return "f";
  return nullptr;
}

// person and number tokens carried over from a verb reading
void copy_person_number(const FeatureSet& from, FeatureSet& to) {
  for (const char* f : {"1", "2", "3"})
    if (from.contains(f)) to.add(f);
  for (const char* f : {"s", "p"})
    if (from.contains(f)) to.add(f);
}

std::string join_surfaces(std::span<const AnnotatedToken> sentence, std::size_t begin,
                          std::size_t end) {
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += sentence[i].token.surface;
  }
  return out;
}

}  // namespace

std::optional<TokenSpan> join_particle_noun(std::span<const AnnotatedToken> sentence,
                                            std::size_t at, const GrammarResources& res) {
  if (!res.lexicon || at >= sentence.size()) return std::nullopt;
  std::size_t limit = std::min(sentence.size(), at + res.max_join);
  for (std::size_t end = limit; end > at + 1; --end) {
    if (!range_free(sentence, at, end)) continue;
    std::string candidate = join_surfaces(sentence, at, end);
    auto payloads = res.lexicon->lookup(candidate);
    if (payloads.empty()) continue;
    TokenSpan span;
    span.begin = at;
    span.end = end;
    span.rule = "join_particle_noun";
    for (const LexPayload& p : payloads) {
      Analysis a;
      a.surface = candidate;
      a.lemma = p.lemma;
      a.category = p.category;
      a.features = p.features;
      a.provenance = Provenance::syntax;
      span.analyses.push_back(std::move(a));
    }
    return span;
  }
  return std::nullopt;
}

namespace {

// readings of one token that look like a finite verb of the given stage:
// PR for the Y list (present-shaped), PS for the X list (aorist-shaped)
std::vector<const Analysis*> verb_readings(const AnnotatedToken& t, const char* stage,
                                           bool active_only) {
  std::vector<const Analysis*> out;
  for (const Analysis& a : t.analyses) {
    if (a.category != "V") continue;
    if (!a.features.contains(stage)) continue;
    if (!a.features.contains("Ind")) continue;
    if (active_only && a.features.contains("joveprore")) continue;
    out.push_back(&a);
  }
  return out;
}

std::string derive_nonactive_lemma(const std::string& active) {
  if (!active.empty() && active.back() == 'j')
    return active.substr(0, active.size() - 1) + "hem";
  return active + "em";
}

}  // namespace

std::optional<TokenSpan> match_particle_tense(std::span<const AnnotatedToken> sentence,
                                              std::size_t at, const GrammarResources& res) {
  if (at >= sentence.size()) return std::nullopt;
  std::string first = folded_surface(sentence[at]);

  auto clitic_at = [&](std::size_t j) -> bool {
    if (j >= sentence.size()) return false;
    std::string s = folded_surface(sentence[j]);
    return std::find(res.clitics.begin(), res.clitics.end(), s) != res.clitics.end();
  };

  auto build = [&](std::size_t verb_index, std::vector<const Analysis*> readings,
                   const char* tense_mood, const char* stage,
                   const std::string& lemma_override) -> std::optional<TokenSpan> {
    if (readings.empty() || !range_free(sentence, at, verb_index + 1))
      return std::nullopt;
    TokenSpan span;
    span.begin = at;
    span.end = verb_index + 1;
    span.rule = "match_particle_tense";
    std::string surface = join_surfaces(sentence, at, verb_index + 1);
    for (const Analysis* r : readings) {
      Analysis a;
      a.surface = surface;
      a.lemma = lemma_override.empty() ? r->lemma : lemma_override;
      a.category = "V";
      copy_person_number(r->features, a.features);
      a.features.add(stage);
      a.features.add(tense_mood);
      if (!lemma_override.empty()) a.features.add("joveprore");
      a.provenance = Provenance::syntax;
      bool dup = false;
      for (const Analysis& have : span.analyses)
        if (same_reading(have, a)) dup = true;
      if (!dup) span.analyses.push_back(std::move(a));
    }
    if (span.analyses.empty()) return std::nullopt;
    return span;
  };

  if (first == "do" && at + 2 < sentence.size() &&
      folded_surface(sentence[at + 1]) == "të") {
    std::size_t j = at + 2;
    if (clitic_at(j) && j + 1 < sentence.size()) ++j;
    // Y list -> future, X list -> conditional
    if (auto span = build(j, verb_readings(sentence[j], "PR", false), "F", "PR", ""))
      return span;
    return build(j, verb_readings(sentence[j], "PS", false), "Kusht", "PS", "");
  }

  if (first == "të" && at + 1 < sentence.size()) {
    std::size_t j = at + 1;
    if (clitic_at(j) && j + 1 < sentence.size()) ++j;
    if (auto span = build(j, verb_readings(sentence[j], "PR", false), "Subj", "PR", ""))
      return span;
    return build(j, verb_readings(sentence[j], "PS", false), "Subj", "PS", "");
  }

  if (first == "u" && at + 1 < sentence.size()) {
    const AnnotatedToken& verb = sentence[at + 1];
    // a lexicalized "u X" surface carries the non-active entry already
    if (res.lexicon && range_free(sentence, at, at + 2)) {
      std::string candidate = "u " + verb.token.surface;
      auto payloads = res.lexicon->lookup(candidate);
      std::vector<LexPayload> verbs;
      for (LexPayload& p : payloads)
        if (p.category == "V") verbs.push_back(std::move(p));
      if (!verbs.empty()) {
        TokenSpan span;
        span.begin = at;
        span.end = at + 2;
        span.rule = "match_particle_tense";
        for (const LexPayload& p : verbs) {
          Analysis a;
          a.surface = candidate;
          a.lemma = p.lemma;
          a.category = "V";
          a.features = p.features;
          a.provenance = Provenance::syntax;
          span.analyses.push_back(std::move(a));
        }
        return span;
      }
    }
    // otherwise derive the non-active lemma from the active aorist
    auto readings = verb_readings(verb, "PS", true);
    if (!readings.empty()) {
      std::string lemma = derive_nonactive_lemma(readings.front()->lemma);
      return build(at + 1, std::move(readings), "Ind", "PS", lemma);
    }
  }
  return std::nullopt;
}

std::optional<TokenSpan> match_full_ordinal(std::span<const AnnotatedToken> sentence,
                                            std::size_t at, const GrammarResources& res) {
  if (!res.numerals || at + 1 >= sentence.size()) return std::nullopt;
  std::string particle = folded_surface(sentence[at]);
  if (!is_particle(particle)) return std::nullopt;
  std::string body = folded_surface(sentence[at + 1]);
  auto value = res.numerals->match_ordinal_body(body);
  if (!value || !range_free(sentence, at, at + 2)) return std::nullopt;

  TokenSpan span;
  span.begin = at;
  span.end = at + 2;
  span.rule = "match_full_ordinal";
  Analysis a;
  a.surface = join_surfaces(sentence, at, at + 2);
  a.lemma = sentence[at + 1].token.surface;
  a.category = "A";
  a.features.add(std::to_string(*value));
  if (const char* gender = particle_gender(particle)) a.features.add(gender);
  a.provenance = Provenance::syntax;
  span.analyses.push_back(std::move(a));
  return span;
}

std::optional<TokenSpan> match_compound_cardinal(std::span<const AnnotatedToken> sentence,
                                                 std::size_t at,
                                                 const GrammarResources& res) {
  if (!res.numerals || at >= sentence.size() || claimed(sentence[at]))
    return std::nullopt;
  auto first = res.numerals->parse_cardinal(folded_surface(sentence[at]));
  if (!first) return std::nullopt;

  long sum = *first;
  long last = *first;
  std::size_t end = at + 1;
  while (end + 1 < sentence.size() && folded_surface(sentence[end]) == "e" &&
         range_free(sentence, end, end + 2)) {
    auto next = res.numerals->parse_cardinal(folded_surface(sentence[end + 1]));
    if (!next || *next >= last) break;  // magnitudes strictly decrease
    sum += *next;
    last = *next;
    end += 2;
  }

  TokenSpan span;
  span.begin = at;
  span.end = end;
  span.rule = "match_compound_cardinal";
  Analysis a;
  a.surface = join_surfaces(sentence, at, end);
  a.lemma = std::to_string(sum);
  a.category = "NUM";
  a.features.add(std::to_string(sum));
  a.provenance = Provenance::syntax;
  span.analyses.push_back(std::move(a));
  return span;
}

std::optional<TokenSpan> match_xx_word(std::span<const AnnotatedToken> sentence,
                                       std::size_t at, std::string_view text,
                                       const GrammarResources&) {
  if (at >= sentence.size()) return std::nullopt;

  auto proposal = [&](std::size_t begin, std::size_t end,
                      const std::string& form) -> TokenSpan {
    TokenSpan span;
    span.begin = begin;
    span.end = end;
    span.rule = "match_xx_word";
    for (const char* category : {"ONOM", "ADV", "A"}) {
      Analysis a;
      a.surface = form;
      a.lemma = form;
      a.category = category;
      a.features.add("hypo_n");
      a.provenance = Provenance::syntax;
      span.analyses.push_back(std::move(a));
    }
    return span;
  };

  const std::string& surface = sentence[at].token.surface;
  std::size_t dash = surface.find('-');
  if (dash != std::string::npos && dash > 0 && dash + 1 < surface.size() &&
      surface.find('-', dash + 1) == std::string::npos) {
    std::string_view left{surface.data(), dash};
    std::string_view right{surface.data() + dash + 1, surface.size() - dash - 1};
    if (fold_case(left) == fold_case(right) && range_free(sentence, at, at + 1))
      return proposal(at, at + 1, surface);
  }

  // identical adjacent tokens joined by a bare hyphen in the source
  if (at + 1 < sentence.size()) {
    const Token& t0 = sentence[at].token;
    const Token& t1 = sentence[at + 1].token;
    if (fold_case(t0.surface) == fold_case(t1.surface) &&
        t1.byte_offset > t0.byte_offset + t0.byte_size) {
      std::string_view gap = text.substr(t0.byte_offset + t0.byte_size,
                                         t1.byte_offset - t0.byte_offset - t0.byte_size);
      if (gap == "-" && range_free(sentence, at, at + 2))
        return proposal(at, at + 2, t0.surface + "-" + t1.surface);
    }
  }
  return std::nullopt;
}

std::vector<TokenSpan> run_cascade(std::vector<AnnotatedToken>& tokens,
                                   std::string_view text, const GrammarResources& res) {
  std::vector<TokenSpan> spans;

  // sentence slices
  std::vector<std::pair<std::size_t, std::size_t>> sentences;
  for (std::size_t i = 0; i < tokens.size();) {
    std::size_t j = i;
    while (j < tokens.size() && tokens[j].token.sentence == tokens[i].token.sentence) ++j;
    sentences.emplace_back(i, j);
    i = j;
  }

  using Matcher = std::optional<TokenSpan> (*)(std::span<const AnnotatedToken>,
                                               std::size_t, std::string_view,
                                               const GrammarResources&);
  auto wrap2 = [](auto fn) {
    return [fn](std::span<const AnnotatedToken> s, std::size_t at, std::string_view,
                const GrammarResources& r) { return fn(s, at, r); };
  };
  std::vector<std::function<std::optional<TokenSpan>(
      std::span<const AnnotatedToken>, std::size_t, std::string_view,
      const GrammarResources&)>>
      cascade = {wrap2(join_particle_noun), wrap2(match_particle_tense),
                 wrap2(match_full_ordinal), wrap2(match_compound_cardinal),
                 static_cast<Matcher>(match_xx_word)};

  for (const auto& rule : cascade) {
    for (const auto& [begin, end] : sentences) {
      std::span<const AnnotatedToken> sentence{tokens.data() + begin, end - begin};
      std::size_t at = 0;
      while (at < sentence.size()) {
        if (claimed(sentence[at])) {
          ++at;
          continue;
        }
        auto span = rule(sentence, at, text, res);
        if (!span) {
          ++at;
          continue;
        }
        span->begin += begin;
        span->end += begin;
        int id = static_cast<int>(spans.size());
        for (std::size_t i = span->begin; i < span->end; ++i) tokens[i].span_id = id;
        at = span->end - begin;
        spans.push_back(std::move(*span));
      }
    }
  }
  return spans;
}

}  // namespace shqip
