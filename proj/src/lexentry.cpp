#include "shqip/lexentry.hpp"

#include <fstream>
#include <sstream>

namespace shqip {

LexEntry parse_dic_line(std::string_view line) {
  std::size_t comma = line.rfind(',');
  if (comma == std::string_view::npos || comma == 0)
    throw error("malformed dictionary line: '" + std::string(line) + "'");

  LexEntry entry;
  entry.lemma = std::string(line.substr(0, comma));
  while (!entry.lemma.empty() && entry.lemma.back() == ' ') entry.lemma.pop_back();

  std::string_view rest = line.substr(comma + 1);
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  if (rest.empty())
    throw error("dictionary line without category: '" + std::string(line) + "'");

  std::size_t pos = 0;
  bool first = true;
  while (pos <= rest.size()) {
    std::size_t plus = rest.find('+', pos);
    if (plus == std::string_view::npos) plus = rest.size();
    std::string_view item = rest.substr(pos, plus - pos);
    pos = plus + 1;
    if (item.empty()) continue;
    if (first) {
      entry.category = std::string(item);
      first = false;
    } else if (item.rfind("FLX=", 0) == 0) {
      entry.paradigm = std::string(item.substr(4));
    } else {
      entry.inherent.add(item);
    }
  }
  if (entry.category.empty())
    throw error("dictionary line without category: '" + std::string(line) + "'");
  return entry;
}

std::string format_dic_line(const LexEntry& entry) {
  std::string out = entry.lemma + "," + entry.category;
  if (!entry.paradigm.empty()) out += "+FLX=" + entry.paradigm;
  out += entry.inherent.to_string();
  return out;
}

std::vector<LexEntry> parse_dic(std::string_view text) {
  std::vector<LexEntry> entries;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (pos > text.size()) break;
      continue;
    }
    entries.push_back(parse_dic_line(line));
    if (pos > text.size()) break;
  }
  return entries;
}

std::vector<LexEntry> load_dic_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot read dictionary file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_dic(buf.str());
}

}  // namespace shqip
