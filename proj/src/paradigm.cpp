#include "shqip/paradigm.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace shqip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    lines.push_back(text.substr(pos, eol - pos));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

}  // namespace

bool operator==(const Command& a, const Command& b) {
  return a.kind == b.kind && a.text == b.text && a.count == b.count;
}

std::vector<Command> parse_commands(std::string_view text) {
  std::vector<Command> commands;
  std::size_t pos = 0;
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) {
      commands.push_back(Command::insert(literal));
      literal.clear();
    }
  };
  while (pos < text.size()) {
    if (text[pos] != '<') {
      literal += text[pos++];
      continue;
    }
    std::size_t close = text.find('>', pos);
    if (close == std::string_view::npos)
      throw paradigm_error("unterminated command in '" + std::string(text) + "'");
    std::string_view tok = text.substr(pos + 1, close - pos - 1);
    flush();
    if (tok == "E") {
      // explicit empty sequence
    } else if (tok == "B") {
      commands.push_back(Command::erase(1));
    } else if (tok == "B2") {
      commands.push_back(Command::erase(2));
    } else if (tok == "L") {
      commands.push_back(Command::left(1));
    } else if (tok == "L2") {
      commands.push_back(Command::left(2));
    } else if (tok == "R") {
      commands.push_back(Command::right(1));
    } else if (tok == "R2") {
      commands.push_back(Command::right(2));
    } else {
      throw paradigm_error("unknown command <" + std::string(tok) + "> in '" +
                           std::string(text) + "'");
    }
    pos = close + 1;
  }
  flush();
  return commands;
}

std::string format_commands(std::span<const Command> commands) {
  if (commands.empty()) return "<E>";
  std::string out;
  for (const Command& c : commands) {
    switch (c.kind) {
      case Command::Kind::insert: out += c.text; break;
      case Command::Kind::erase_before: out += c.count == 2 ? "<B2>" : "<B>"; break;
      case Command::Kind::move_left: out += c.count == 2 ? "<L2>" : "<L>"; break;
      case Command::Kind::move_right: out += c.count == 2 ? "<R2>" : "<R>"; break;
    }
  }
  return out;
}

namespace {

Production parse_production_line(std::string_view line) {
  Production prod;
  if (!line.empty() && line.front() == '"') {
    std::size_t close = line.find('"', 1);
    if (close == std::string_view::npos)
      throw paradigm_error("unterminated particle prefix in '" + std::string(line) + "'");
    prod.particle_prefix = std::string(line.substr(1, close - 1));
    line.remove_prefix(close + 1);
  }
  std::string_view command_text = line;
  std::size_t tab = line.find('\t');
  if (tab != std::string_view::npos) {
    command_text = line.substr(0, tab);
    std::string_view feats = trim(line.substr(tab + 1));
    if (!feats.empty()) {
      if (feats.front() != '+')
        throw paradigm_error("malformed feature suffix '" + std::string(feats) + "'");
      prod.features = FeatureSet::parse(feats);
    }
  }
  prod.commands = parse_commands(trim(command_text));
  return prod;
}

Paradigm parse_paradigm_block(std::string_view header,
                              std::span<const std::string_view> body,
                              std::string_view where) {
  std::istringstream hs{std::string(header)};
  std::string keyword, name, category, mode;
  hs >> keyword >> name >> category >> mode;
  if (keyword != "PARADIGM" || name.empty() || category.empty())
    throw paradigm_error("bad paradigm header '" + std::string(header) + "'" +
                         (where.empty() ? "" : " in " + std::string(where)));

  Paradigm p;
  p.name = name;
  p.category = category;
  if (mode == "grapheme") {
    p.mode = ParadigmMode::grapheme;
  } else if (mode == "char" || mode.empty()) {
    p.mode = ParadigmMode::character;
  } else {
    throw paradigm_error("unknown paradigm mode '" + mode + "' for " + name);
  }

  for (std::string_view raw : body) {
    std::string_view line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;  // blank lines are not productions
    p.productions.push_back(parse_production_line(line));
  }
  if (p.productions.empty())
    throw paradigm_error("paradigm " + p.name + " has no productions");
  return p;
}

}  // namespace

Paradigm parse_paradigm(std::string_view text) {
  auto paradigms = parse_paradigm_file(text);
  if (paradigms.size() != 1)
    throw paradigm_error("expected exactly one paradigm, found " +
                         std::to_string(paradigms.size()));
  return std::move(paradigms.front());
}

std::vector<Paradigm> parse_paradigm_file(std::string_view text,
                                          std::string_view filename) {
  std::vector<Paradigm> out;
  auto lines = split_lines(text);

  std::optional<std::string_view> header;
  std::vector<std::string_view> body;
  auto flush = [&] {
    if (header) out.push_back(parse_paradigm_block(*header, body, filename));
    header.reset();
    body.clear();
  };
  for (std::string_view raw : lines) {
    std::string_view line = trim(raw);
    if (line.rfind("PARADIGM", 0) == 0) {
      flush();
      header = raw;
    } else if (header) {
      body.push_back(raw);
    } else {
      std::string_view stripped = line;
      if (std::size_t hash = stripped.find('#'); hash != std::string_view::npos)
        stripped = trim(stripped.substr(0, hash));
      if (!stripped.empty())
        throw paradigm_error("text before first PARADIGM header" +
                             (filename.empty() ? "" : " in " + std::string(filename)));
    }
  }
  flush();
  return out;
}

void ParadigmLibrary::add(Paradigm p) {
  if (by_name_.count(p.name))
    throw paradigm_error("duplicate paradigm name " + p.name);
  by_name_.emplace(p.name, paradigms_.size());
  paradigms_.push_back(std::move(p));
}

void ParadigmLibrary::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read paradigm file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  for (Paradigm& p : parse_paradigm_file(buf.str(), path)) add(std::move(p));
}

void ParadigmLibrary::load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  if (!fs::is_directory(dir)) throw error("not a paradigm directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".par")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  for (const std::string& f : files) load_file(f);
}

const Paradigm* ParadigmLibrary::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &paradigms_[it->second];
}

const Paradigm& ParadigmLibrary::at(std::string_view name) const {
  const Paradigm* p = find(name);
  if (!p) throw paradigm_error("unknown paradigm " + std::string(name));
  return *p;
}

std::string apply(std::span<const Command> commands, std::string_view lemma,
                  ParadigmMode mode, std::string_view context) {
  // buffer of editable units: characters or whole letters
  std::vector<std::string> units;
  auto explode = [&](std::string_view text) {
    if (mode == ParadigmMode::character) return utf8::split_units(text);
    std::vector<std::string> out;
    for (const Grapheme& g : segment(text).letters()) out.push_back(g.raw);
    return out;
  };
  units = explode(lemma);
  std::size_t cursor = units.size();

  auto fail = [&](std::size_t index, const std::string& what) -> std::string {
    std::string msg = "cannot apply command " + std::to_string(index + 1) + " to '" +
                      std::string(lemma) + "': " + what;
    if (!context.empty()) msg += " (" + std::string(context) + ")";
    throw paradigm_error(msg);
  };

  for (std::size_t i = 0; i < commands.size(); ++i) {
    const Command& c = commands[i];
    switch (c.kind) {
      case Command::Kind::insert: {
        auto inserted = explode(c.text);
        units.insert(units.begin() + static_cast<std::ptrdiff_t>(cursor),
                     inserted.begin(), inserted.end());
        // the cursor stays before the inserted text
        break;
      }
      case Command::Kind::move_left:
        if (cursor < static_cast<std::size_t>(c.count))
          fail(i, "cursor underflow moving left " + std::to_string(c.count));
        cursor -= static_cast<std::size_t>(c.count);
        break;
      case Command::Kind::move_right:
        if (cursor + static_cast<std::size_t>(c.count) > units.size())
          fail(i, "cursor overflow moving right " + std::to_string(c.count));
        cursor += static_cast<std::size_t>(c.count);
        break;
      case Command::Kind::erase_before:
        if (cursor < static_cast<std::size_t>(c.count))
          fail(i, "deleting " + std::to_string(c.count) + " units past start");
        units.erase(units.begin() + static_cast<std::ptrdiff_t>(cursor - c.count),
                    units.begin() + static_cast<std::ptrdiff_t>(cursor));
        cursor -= static_cast<std::size_t>(c.count);
        break;
    }
  }
  std::string out;
  for (const std::string& u : units) out += u;
  return out;
}

std::vector<std::pair<std::string, FeatureSet>> inflect(const LexEntry& entry,
                                                        const Paradigm& paradigm) {
  if (!entry.paradigm.empty() && entry.paradigm != paradigm.name)
    throw paradigm_error("entry " + entry.lemma + " expects paradigm " +
                         entry.paradigm + ", got " + paradigm.name);
  std::vector<std::pair<std::string, FeatureSet>> out;
  out.reserve(paradigm.productions.size());
  for (const Production& prod : paradigm.productions) {
    std::string surface =
        prod.particle_prefix +
        apply(prod.commands, entry.lemma, paradigm.mode,
              paradigm.name + " applied to " + entry.lemma);
    out.emplace_back(std::move(surface), entry.inherent.merged(prod.features));
  }
  return out;
}

std::optional<Paradigm> collapse_char_pairs(const Paradigm& single_char,
                                            const Paradigm& double_char) {
  if (single_char.mode != ParadigmMode::character ||
      double_char.mode != ParadigmMode::character)
    return std::nullopt;
  if (single_char.category != double_char.category) return std::nullopt;
  if (single_char.productions.size() != double_char.productions.size())
    return std::nullopt;

  for (std::size_t p = 0; p < single_char.productions.size(); ++p) {
    const Production& a = single_char.productions[p];
    const Production& b = double_char.productions[p];
    if (a.particle_prefix != b.particle_prefix) return std::nullopt;
    if (a.features != b.features) return std::nullopt;
    if (a.commands.size() != b.commands.size()) return std::nullopt;
    for (std::size_t i = 0; i < a.commands.size(); ++i) {
      const Command& ca = a.commands[i];
      const Command& cb = b.commands[i];
      if (ca.kind != cb.kind || ca.text != cb.text) return std::nullopt;
      if (ca.count == cb.count) continue;
      // only a 1 -> 2 widening of L or B counts as the digraph variant
      bool widened = ca.count == 1 && cb.count == 2 &&
                     (ca.kind == Command::Kind::move_left ||
                      ca.kind == Command::Kind::erase_before);
      if (!widened) return std::nullopt;
    }
  }

  Paradigm collapsed = single_char;
  collapsed.mode = ParadigmMode::grapheme;
  // name: shared prefix of the pair, else the single-char name marked _G
  std::size_t common = 0;
  while (common < single_char.name.size() && common < double_char.name.size() &&
         single_char.name[common] == double_char.name[common])
    ++common;
  std::string name = single_char.name.substr(0, common);
  while (!name.empty() && (name.back() == '_' || name.back() == '-')) name.pop_back();
  collapsed.name = name.empty() ? single_char.name + "_G" : name;
  return collapsed;
}

}  // namespace shqip
