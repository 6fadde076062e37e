#include "udschart/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "udschart/numeric.hpp"

namespace uds {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::islower(c) || std::isdigit(c) || c == '_' || c == '-';
  });
}

struct Section {
  enum class Kind { Scheme, Combined, Expect } kind;
  std::string id;
  int line;
};

class Parser {
 public:
  explicit Parser(std::string_view text, std::string_view source) : text_(text) {
    catalog_.source = std::string(source);
  }

  Catalog run() {
    std::size_t pos = 0;
    if (text_.substr(0, 3) == "\xef\xbb\xbf") pos = 3;  // UTF-8 BOM
    int line_no = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view raw = text_.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                             : eol - pos);
      if (eol == std::string_view::npos && raw.empty() && pos == text_.size()) break;
      ++line_no;
      handle_line(trim(raw), line_no);
      if (eol == std::string_view::npos) break;
      pos = eol + 1;
    }
    finish_section();
    check_references();
    catalog_.normalize();
    return std::move(catalog_);
  }

 private:
  void handle_line(std::string_view line, int line_no) {
    if (line.empty() || line.front() == '#') return;
    if (line.front() == '[') {
      open_section(line, line_no);
      return;
    }
    if (!section_)
      throw CatalogParseError(line_no, "expected a [scheme], [combined] or [expect] section");
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw CatalogParseError(line_no, "expected 'key = value'");
    std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    switch (section_->kind) {
      case Section::Kind::Scheme: scheme_field(key, value, line_no); break;
      case Section::Kind::Combined: combined_field(key, value, line_no); break;
      case Section::Kind::Expect: expect_field(key, value, line_no); break;
    }
  }

  void open_section(std::string_view line, int line_no) {
    if (line.back() != ']')
      throw CatalogParseError(line_no, "unterminated section header");
    std::string_view inner = trim(line.substr(1, line.size() - 2));
    auto space = inner.find(' ');
    if (space == std::string_view::npos)
      throw CatalogParseError(line_no, "section header needs a kind and an id");
    std::string_view kind = trim(inner.substr(0, space));
    std::string_view id = trim(inner.substr(space + 1));
    if (!valid_id(id))
      throw CatalogParseError(line_no, "invalid id '" + std::string(id) +
                                           "' (want [a-z0-9_-]+)");
    finish_section();
    if (kind == "scheme") {
      section_ = Section{Section::Kind::Scheme, std::string(id), line_no};
      scheme_ = SchemeProfile{};
      scheme_.id = std::string(id);
      seen_benefits_.clear();
    } else if (kind == "combined") {
      section_ = Section{Section::Kind::Combined, std::string(id), line_no};
      combined_ = CombinedScheme{};
      combined_.id = std::string(id);
      seen_benefits_.clear();
    } else if (kind == "expect") {
      section_ = Section{Section::Kind::Expect, std::string(id), line_no};
      expect_ = ExpectedPlacement{};
      expect_.scheme_id = std::string(id);
      has_vseg_ = has_hseg_ = false;
    } else {
      throw CatalogParseError(line_no, "unknown section kind '" + std::string(kind) + "'");
    }
  }

  void scheme_field(std::string_view key, std::string_view value, int line_no) {
    if (key == "name") {
      set_once(scheme_.name, value, "name", line_no);
    } else if (key == "category") {
      auto cat = parse_category(value);
      if (!cat)
        throw CatalogParseError(line_no, "unknown category '" + std::string(value) + "'");
      if (has_category_)
        throw CatalogParseError(line_no, "duplicate category");
      scheme_.category = *cat;
      has_category_ = true;
    } else if (key == "notes") {
      set_once(scheme_.notes, value, "notes", line_no);
    } else {
      auto benefit = parse_benefit(key);
      if (!benefit)
        throw CatalogParseError(line_no, "unknown benefit id '" + std::string(key) + "'");
      auto rating = parse_rating(value);
      if (!rating || *rating == Rating::Absent)
        throw CatalogParseError(line_no, "invalid rating token '" + std::string(value) +
                                             "' (want full or partial)");
      if (!seen_benefits_.insert(*benefit).second)
        throw CatalogParseError(line_no, "duplicate rating for " +
                                             std::string(benefit_code(*benefit)));
      scheme_.vector.set(*benefit, *rating);
    }
  }

  void combined_field(std::string_view key, std::string_view value, int line_no) {
    if (key == "name") {
      set_once(combined_.name, value, "name", line_no);
    } else if (key == "parts") {
      if (!combined_.parts.empty())
        throw CatalogParseError(line_no, "duplicate parts line");
      std::string_view rest = value;
      while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view part = trim(rest.substr(0, comma));
        if (!valid_id(part))
          throw CatalogParseError(line_no, "invalid part id '" + std::string(part) + "'");
        combined_.parts.emplace_back(part);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
      if (combined_.parts.size() < 2)
        throw CatalogParseError(line_no, "combined entry needs at least two parts");
    } else if (key == "reason") {
      set_once(combined_.reason, value, "reason", line_no);
    } else if (key.substr(0, 9) == "override " || key == "override") {
      auto benefit = parse_benefit(trim(key.substr(8)));
      if (!benefit)
        throw CatalogParseError(line_no, "unknown benefit id in override '" +
                                             std::string(key) + "'");
      auto rating = parse_rating(value);
      if (!rating)
        throw CatalogParseError(line_no, "invalid rating token '" + std::string(value) +
                                             "' (want full, partial or absent)");
      for (const auto& [existing, unused] : combined_.overrides) {
        (void)unused;
        if (existing == *benefit)
          throw CatalogParseError(line_no, "duplicate override for " +
                                               std::string(benefit_code(*benefit)));
      }
      combined_.overrides.emplace_back(*benefit, *rating);
    } else {
      throw CatalogParseError(line_no, "unknown key '" + std::string(key) +
                                           "' in combined entry");
    }
  }

  void expect_field(std::string_view key, std::string_view value, int line_no) {
    if (key == "vsegment") {
      if (value == "V1") expect_.vseg = VerticalSegment::V1;
      else if (value == "V2") expect_.vseg = VerticalSegment::V2;
      else if (value == "V3") expect_.vseg = VerticalSegment::V3;
      else throw CatalogParseError(line_no, "invalid vsegment '" + std::string(value) + "'");
      has_vseg_ = true;
    } else if (key == "hsegment") {
      if (value == "none") expect_.hseg = HorizontalSegment::OnAxis;
      else if (value == "H1") expect_.hseg = HorizontalSegment::H1;
      else if (value == "H2") expect_.hseg = HorizontalSegment::H2;
      else if (value == "H3") expect_.hseg = HorizontalSegment::H3;
      else throw CatalogParseError(line_no, "invalid hsegment '" + std::string(value) + "'");
      has_hseg_ = true;
    } else if (key == "x") {
      expect_.x = parse_decimal(value, line_no);
    } else if (key == "y") {
      expect_.y = parse_decimal(value, line_no);
    } else if (key == "errata") {
      set_once(expect_.errata, value, "errata", line_no);
    } else {
      throw CatalogParseError(line_no, "unknown key '" + std::string(key) +
                                           "' in expect entry");
    }
  }

  double parse_decimal(std::string_view value, int line_no) {
    std::string token(value);
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
      parsed = std::stod(token, &consumed);
    } catch (const std::exception&) {
      throw CatalogParseError(line_no, "invalid decimal '" + token + "'");
    }
    if (consumed != token.size() || !std::isfinite(parsed) || parsed < 0.0)
      throw CatalogParseError(line_no, "invalid decimal '" + token + "'");
    return parsed;
  }

  void set_once(std::string& slot, std::string_view value, const char* what, int line_no) {
    if (!slot.empty())
      throw CatalogParseError(line_no, std::string("duplicate ") + what);
    slot = std::string(value);
  }

  void finish_section() {
    if (!section_) return;
    const int line = section_->line;
    switch (section_->kind) {
      case Section::Kind::Scheme:
        if (scheme_.name.empty()) scheme_.name = scheme_.id;
        scheme_lines_.push_back(line);
        catalog_.schemes.push_back(std::move(scheme_));
        scheme_ = SchemeProfile{};
        has_category_ = false;
        break;
      case Section::Kind::Combined:
        if (combined_.parts.size() < 2)
          throw CatalogParseError(line, "combined entry needs a parts line");
        if (!combined_.overrides.empty() && combined_.reason.empty())
          throw CatalogParseError(line, "override without reason in combined entry '" +
                                            combined_.id + "'");
        if (combined_.overrides.empty() && !combined_.reason.empty())
          throw CatalogParseError(line, "reason without override in combined entry '" +
                                            combined_.id + "'");
        combined_lines_.push_back(line);
        catalog_.combined.push_back(std::move(combined_));
        combined_ = CombinedScheme{};
        break;
      case Section::Kind::Expect:
        if (!has_vseg_ || !has_hseg_)
          throw CatalogParseError(line, "expect entry needs vsegment and hsegment");
        expect_lines_.push_back(line);
        catalog_.expectations.push_back(std::move(expect_));
        expect_ = ExpectedPlacement{};
        break;
    }
    section_.reset();
  }

  void check_references() {
    std::map<std::string, int> ids;
    std::set<std::string> scheme_ids;
    for (std::size_t i = 0; i < catalog_.schemes.size(); ++i) {
      const auto& s = catalog_.schemes[i];
      if (++ids[s.id] > 1)
        throw CatalogParseError(scheme_lines_[i], "duplicate id '" + s.id + "'");
      scheme_ids.insert(s.id);
    }
    std::set<std::string> combined_ids;
    for (std::size_t i = 0; i < catalog_.combined.size(); ++i) {
      const auto& c = catalog_.combined[i];
      if (++ids[c.id] > 1)
        throw CatalogParseError(combined_lines_[i], "duplicate id '" + c.id + "'");
      combined_ids.insert(c.id);
    }
    for (std::size_t i = 0; i < catalog_.combined.size(); ++i) {
      const auto& c = catalog_.combined[i];
      for (const auto& part : c.parts) {
        if (!scheme_ids.count(part))
          throw CatalogParseError(combined_lines_[i],
                                  "combined entry '" + c.id +
                                      "' references unknown scheme '" + part + "'");
      }
    }
    for (std::size_t i = 0; i < catalog_.expectations.size(); ++i) {
      const auto& e = catalog_.expectations[i];
      if (!scheme_ids.count(e.scheme_id) && !combined_ids.count(e.scheme_id))
        throw CatalogParseError(expect_lines_[i], "expect entry references unknown id '" +
                                                      e.scheme_id + "'");
    }
  }

  std::string_view text_;
  Catalog catalog_;
  std::optional<Section> section_;
  SchemeProfile scheme_;
  CombinedScheme combined_;
  ExpectedPlacement expect_;
  std::set<BenefitId> seen_benefits_;
  std::vector<int> scheme_lines_;
  std::vector<int> combined_lines_;
  std::vector<int> expect_lines_;
  bool has_category_ = false;
  bool has_vseg_ = false;
  bool has_hseg_ = false;
};

}  // namespace

const SchemeProfile* Catalog::find_scheme(std::string_view id) const {
  for (const auto& s : schemes)
    if (s.id == id) return &s;
  return nullptr;
}

const CombinedScheme* Catalog::find_combined(std::string_view id) const {
  for (const auto& c : combined)
    if (c.id == id) return &c;
  return nullptr;
}

SchemeProfile Catalog::materialize(const CombinedScheme& entry) const {
  if (!entry.overrides.empty() && entry.reason.empty())
    throw std::invalid_argument("combined entry '" + entry.id +
                                "' has overrides but no reason");
  std::vector<SchemeProfile> parts;
  parts.reserve(entry.parts.size());
  for (const auto& part_id : entry.parts) {
    const SchemeProfile* part = find_scheme(part_id);
    if (!part)
      throw std::invalid_argument("combined entry '" + entry.id +
                                  "' references unknown scheme '" + part_id + "'");
    parts.push_back(*part);
  }
  SchemeProfile profile = combine_profiles(parts, entry.overrides, entry.name);
  profile.id = entry.id;
  return profile;
}

std::pair<double, double> Catalog::marker_point(const CombinedScheme& entry) const {
  double x = 0.0, y = 0.0;
  bool first = true;
  for (const auto& part_id : entry.parts) {
    const SchemeProfile* part = find_scheme(part_id);
    if (!part)
      throw std::invalid_argument("combined entry '" + entry.id +
                                  "' references unknown scheme '" + part_id + "'");
    Placement p = place(*part);
    if (first) {
      x = p.x;
      y = p.y;
      first = false;
    } else {
      x = std::max(x, p.x);
      y = std::max(y, p.y);
    }
  }
  return {x, y};
}

std::optional<SchemeProfile> Catalog::resolve(std::string_view id) const {
  if (const SchemeProfile* s = find_scheme(id)) return *s;
  if (const CombinedScheme* c = find_combined(id)) return materialize(*c);
  return std::nullopt;
}

void Catalog::normalize() {
  std::sort(schemes.begin(), schemes.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(combined.begin(), combined.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(expectations.begin(), expectations.end(),
            [](const auto& a, const auto& b) { return a.scheme_id < b.scheme_id; });
}

bool Catalog::operator==(const Catalog& other) const {
  return schemes == other.schemes && combined == other.combined &&
         expectations == other.expectations;
}

Catalog parse_catalog(std::string_view text, std::string_view source_name) {
  return Parser(text, source_name).run();
}

std::string serialize_catalog(const Catalog& catalog) {
  Catalog sorted = catalog;
  sorted.normalize();

  std::ostringstream out;
  bool first = true;
  auto start_record = [&] {
    if (!first) out << "\n";
    first = false;
  };

  for (const auto& s : sorted.schemes) {
    start_record();
    out << "[scheme " << s.id << "]\n";
    out << "name = " << s.name << "\n";
    out << "category = " << to_string(s.category) << "\n";
    if (!s.notes.empty()) out << "notes = " << s.notes << "\n";
    for (BenefitId b : all_benefits()) {
      Rating r = s.vector.rating(b);
      if (r != Rating::Absent)
        out << benefit_code(b) << " = " << to_string(r) << "\n";
    }
  }

  for (const auto& c : sorted.combined) {
    start_record();
    out << "[combined " << c.id << "]\n";
    if (!c.name.empty()) out << "name = " << c.name << "\n";
    out << "parts = ";
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      if (i) out << ",";
      out << c.parts[i];
    }
    out << "\n";
    std::vector<std::pair<BenefitId, Rating>> overrides = c.overrides;
    std::sort(overrides.begin(), overrides.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [benefit, rating] : overrides)
      out << "override " << benefit_code(benefit) << " = " << to_string(rating) << "\n";
    if (!c.reason.empty()) out << "reason = " << c.reason << "\n";
  }

  for (const auto& e : sorted.expectations) {
    start_record();
    out << "[expect " << e.scheme_id << "]\n";
    out << "vsegment = " << segment_code(e.vseg) << "\n";
    out << "hsegment = " << segment_code(e.hseg) << "\n";
    if (e.x) out << "x = " << format_decimal(*e.x) << "\n";
    if (e.y) out << "y = " << format_decimal(*e.y) << "\n";
    if (!e.errata.empty()) out << "errata = " << e.errata << "\n";
  }

  return out.str();
}

}  // namespace uds
