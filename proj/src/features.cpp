#include "shqip/features.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace shqip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

// The properties definitions, one attribute per line. N_Rasa carries a
// repeated rrjedh in the source table; the loader collapses it with a warning.
constexpr std::string_view kBuiltinFeatures = R"(# properties definitions
V_Pers = 1 + 2 + 3;
V_Nb = s + p;
V_Zgjedhimi = P + PP + PR + PS + I + F;
V_Mënyra = Ind + Subj + Dëshirore + Habitore + IP + Kusht;
V_Trajta = NA + veprore + joveprore;
N_Nb = s + p;
N_Gender = m + f + as;
N_Shquar = shquar + pashquar;
N_Rasa = emer + rrjedh + gjin + kallez + dhan + rrjedh;
N_Ei = ei;
PREP_Rasa = emer + rrjedh + gjin + kallez;
A_Nb = s + p;
A_Gender = m + f;
A_Rasa = emer + rrjedh + gjin + kallez + dhan;
A_Ei = ei;
A_Shquar = shquar + pashquar;
DET_Nb = s + p;
DET_Genre = m + f;
PRO_Pers = 1 + 2 + 3;
PRO_Nb = s + p;
PRO_Rasa = emer + rrjedh + gjin + kallez + dhan;
PRO_Shquar = shquar + pashquar;
)";

const char* const kBaseCategories[] = {"N",   "V",    "A",   "ADV", "PREP",
                                       "CONJ", "PRO",  "DET", "INTERJ"};

// Categories used by the dynamic recognizers and the annotation pipeline:
// NUM for numeral readings, ONOM for X-X proposals, PART for the short
// particles (të, e, i, së, do, u), UNK for the unanalyzable fallback.
const char* const kExtraCategories[] = {"NUM", "ONOM", "PART", "UNK"};

const char* const kFreeTags[] = {"UNAMB", "hypo_n", "geg", "ei", "NA"};

}  // namespace

FeatureSet::FeatureSet(std::initializer_list<std::string_view> values) {
  for (std::string_view v : values) add(v);
}

FeatureSet FeatureSet::parse(std::string_view text) {
  FeatureSet fs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == '+') {
      ++pos;
      continue;
    }
    std::size_t next = text.find('+', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view v = trim(text.substr(pos, next - pos));
    if (!v.empty()) fs.add(v);
    pos = next;
  }
  return fs;
}

bool FeatureSet::add(std::string_view value) {
  if (contains(value)) return false;
  values_.emplace_back(value);
  return true;
}

bool FeatureSet::contains(std::string_view value) const {
  return std::find(values_.begin(), values_.end(), value) != values_.end();
}

FeatureSet FeatureSet::merged(const FeatureSet& other) const {
  FeatureSet out = *this;
  for (const std::string& v : other.values_) out.add(v);
  return out;
}

std::string FeatureSet::to_string() const {
  std::string out;
  for (const std::string& v : values_) {
    out += '+';
    out += v;
  }
  return out;
}

bool operator==(const FeatureSet& a, const FeatureSet& b) {
  if (a.size() != b.size()) return false;
  for (const std::string& v : a.values_)
    if (!b.contains(v)) return false;
  return true;
}

FeatureSchema::FeatureSchema() {
  for (const char* c : kBaseCategories) categories_.insert(c);
  for (const char* c : kExtraCategories) categories_.insert(c);
  for (const char* t : kFreeTags) free_tags_.insert(t);
}

void FeatureSchema::add_attribute(Attribute attr, int line,
                                  std::vector<std::string>* warnings) {
  if (by_name_.count(attr.name))
    throw schema_error("duplicate attribute '" + attr.name + "'", line);

  // collapse duplicate values inside one attribute (the printed table
  // repeats rrjedh under N_Rasa)
  std::vector<std::string> unique;
  for (std::string& v : attr.values) {
    if (std::find(unique.begin(), unique.end(), v) != unique.end()) {
      if (warnings)
        warnings->push_back(attr.name + ": duplicate value '" + v + "' collapsed");
      continue;
    }
    unique.push_back(std::move(v));
  }
  attr.values = std::move(unique);

  for (const Attribute& other : attributes_) {
    if (other.category != attr.category) continue;
    for (const std::string& v : attr.values)
      if (std::find(other.values.begin(), other.values.end(), v) != other.values.end())
        throw schema_error("value '" + v + "' already listed under " + other.name, line);
  }

  categories_.insert(attr.category);
  by_name_.emplace(attr.name, attributes_.size());
  attributes_.push_back(std::move(attr));
}

FeatureSchema FeatureSchema::load(std::string_view text,
                                  std::vector<std::string>* warnings) {
  FeatureSchema schema;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.back() == ';') line = trim(line.substr(0, line.size() - 1));

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw schema_error("expected 'Name = v1 + v2' form", line_no);

    Attribute attr;
    attr.name = std::string(trim(line.substr(0, eq)));
    if (attr.name.empty()) throw schema_error("missing attribute name", line_no);
    std::size_t underscore = attr.name.find('_');
    if (underscore == std::string::npos || underscore == 0)
      throw schema_error("attribute '" + attr.name + "' has no category prefix", line_no);
    attr.category = attr.name.substr(0, underscore);

    std::string_view rest = trim(line.substr(eq + 1));
    while (!rest.empty() && rest.front() == '=') rest = trim(rest.substr(1));
    if (rest.empty()) throw schema_error("attribute '" + attr.name + "' lists no values", line_no);

    std::size_t vpos = 0;
    while (vpos <= rest.size()) {
      std::size_t plus = rest.find('+', vpos);
      if (plus == std::string_view::npos) plus = rest.size();
      std::string_view v = trim(rest.substr(vpos, plus - vpos));
      if (v.empty()) throw schema_error("empty value in '" + attr.name + "'", line_no);
      attr.values.emplace_back(v);
      vpos = plus + 1;
    }
    schema.add_attribute(std::move(attr), line_no, warnings);
  }
  return schema;
}

const FeatureSchema& FeatureSchema::builtin() {
  static const FeatureSchema schema = load(kBuiltinFeatures);
  return schema;
}

std::string_view builtin_features_text() { return kBuiltinFeatures; }

std::string FeatureSchema::serialize() const {
  std::ostringstream out;
  for (const Attribute& attr : attributes_) {
    out << attr.name << " = ";
    for (std::size_t i = 0; i < attr.values.size(); ++i) {
      if (i) out << " + ";
      out << attr.values[i];
    }
    out << ";\n";
  }
  return out.str();
}

std::vector<std::string> FeatureSchema::validate(const FeatureSet& fs,
                                                 std::string_view category) const {
  std::vector<std::string> violations;
  if (!has_category(category)) {
    violations.push_back("unknown category '" + std::string(category) + "'");
    return violations;
  }
  std::map<const Attribute*, std::vector<std::string>> used;
  for (const std::string& v : fs.values()) {
    const Attribute* owner = nullptr;
    for (const Attribute& attr : attributes_) {
      if (attr.category != category) continue;
      if (std::find(attr.values.begin(), attr.values.end(), v) != attr.values.end()) {
        owner = &attr;
        break;
      }
    }
    if (owner) {
      used[owner].push_back(v);
    } else if (!is_free_tag(v) && !all_digits(v)) {
      violations.push_back("unknown value '" + v + "' for category " +
                           std::string(category));
    }
  }
  for (const auto& [attr, vals] : used) {
    if (vals.size() > 1) {
      std::string msg = "exclusivity violation on " + attr->name + ":";
      for (const std::string& v : vals) msg += " " + v;
      violations.push_back(std::move(msg));
    }
  }
  return violations;
}

const Attribute* FeatureSchema::attribute(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &attributes_[it->second];
}

bool FeatureSchema::has_category(std::string_view category) const {
  return categories_.count(std::string(category)) != 0;
}

void FeatureSchema::register_category(std::string_view category) {
  categories_.insert(std::string(category));
}

bool FeatureSchema::is_free_tag(std::string_view tag) const {
  return free_tags_.find(tag) != free_tags_.end();
}

void FeatureSchema::register_free_tag(std::string_view tag) {
  free_tags_.insert(std::string(tag));
}

}  // namespace shqip
