#include "udschart/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "udschart/numeric.hpp"
#include "udschart/placement.hpp"

namespace uds {

namespace {

std::string symbol_for(Rating r, bool ascii) {
  switch (r) {
    case Rating::Full: return ascii ? "*" : "●";
    case Rating::Partial: return ascii ? "o" : "○";
    case Rating::Absent: return "";
  }
  return "";
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

struct TableRow {
  std::string category;
  std::string id;
  std::string name;
  BenefitVector vector;
};

std::vector<TableRow> table_rows(const Catalog& catalog) {
  std::vector<const SchemeProfile*> base;
  base.reserve(catalog.schemes.size());
  for (const auto& s : catalog.schemes) base.push_back(&s);
  std::sort(base.begin(), base.end(), [](const auto* a, const auto* b) {
    if (a->category != b->category) return a->category < b->category;
    return a->id < b->id;
  });

  std::vector<TableRow> rows;
  rows.reserve(base.size() + catalog.combined.size());
  for (const auto* s : base)
    rows.push_back({std::string(to_string(s->category)), s->id, s->name, s->vector});
  for (const auto& c : catalog.combined) {
    SchemeProfile p = catalog.materialize(c);
    rows.push_back({"combined", c.id, p.name, p.vector});
  }
  return rows;
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "category,id,name";
  for (BenefitId b : all_benefits()) out << "," << benefit_code(b);
  out << "\n";
  for (const auto& row : rows) {
    out << csv_quote(row.category) << "," << csv_quote(row.id) << "," << csv_quote(row.name);
    for (BenefitId b : all_benefits()) out << "," << to_string(row.vector.rating(b));
    out << "\n";
  }
  return out.str();
}

std::string render_markdown(const std::vector<TableRow>& rows, bool ascii) {
  std::ostringstream out;
  out << "| category | id | name |";
  for (BenefitId b : all_benefits()) out << " " << benefit_code(b) << " |";
  out << "\n";
  out << "| --- | --- | --- |";
  for (std::size_t i = 0; i < kBenefitCount; ++i) out << " --- |";
  out << "\n";
  for (const auto& row : rows) {
    out << "| " << row.category << " | " << row.id << " | " << row.name << " |";
    for (BenefitId b : all_benefits())
      out << " " << symbol_for(row.vector.rating(b), ascii) << " |";
    out << "\n";
  }
  return out.str();
}

std::string render_text(const std::vector<TableRow>& rows, bool ascii) {
  std::size_t cat_w = 8, id_w = 2, name_w = 4;
  for (const auto& row : rows) {
    cat_w = std::max(cat_w, row.category.size());
    id_w = std::max(id_w, row.id.size());
    name_w = std::max(name_w, row.name.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };

  std::ostringstream out;
  auto emit = [&](std::string line) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };

  std::string header = pad("category", cat_w) + "  " + pad("id", id_w) + "  " +
                       pad("name", name_w);
  for (BenefitId b : all_benefits()) header += "  " + pad(std::string(benefit_code(b)), 3);
  emit(header);
  for (const auto& row : rows) {
    std::string line =
        pad(row.category, cat_w) + "  " + pad(row.id, id_w) + "  " + pad(row.name, name_w);
    for (BenefitId b : all_benefits()) {
      // The circle glyphs are three UTF-8 bytes but one display column.
      std::string cell = symbol_for(row.vector.rating(b), ascii);
      std::size_t width = cell.empty() ? 0 : 1;
      line += "  " + cell + std::string(3 - width, ' ');
    }
    emit(line);
  }
  return out.str();
}

}  // namespace

std::string render_table(const Catalog& catalog, const TableSpec& spec) {
  std::vector<TableRow> rows = table_rows(catalog);
  switch (spec.format) {
    case TableFormat::Csv: return render_csv(rows);
    case TableFormat::Markdown: return render_markdown(rows, spec.ascii_symbols);
    case TableFormat::Text: return render_text(rows, spec.ascii_symbols);
  }
  return render_text(rows, spec.ascii_symbols);
}

std::string render_placements(const Catalog& catalog) {
  struct Row {
    std::string id, vseg, vsub, hseg, hsub, x, y, status, rule;
  };
  std::vector<Row> rows;

  auto expectation_for = [&](const std::string& id) -> const ExpectedPlacement* {
    for (const auto& e : catalog.expectations)
      if (e.scheme_id == id) return &e;
    return nullptr;
  };

  auto status_of = [&](const std::string& id, const Placement& p) -> std::string {
    const ExpectedPlacement* e = expectation_for(id);
    if (!e) return "-";
    if (p.vseg != e->vseg || p.hseg != e->hseg) return "mismatch";
    if ((e->x && *e->x != p.x) || (e->y && *e->y != p.y)) return "mismatch";
    if (!e->errata.empty()) return "errata";
    return "ok";
  };

  auto placement_row = [&](const std::string& id, const Placement& p,
                           const std::string& rule) {
    rows.push_back({id, std::string(segment_code(p.vseg)), std::to_string(p.vsub),
                    std::string(segment_code(p.hseg)), std::to_string(p.hsub),
                    format_decimal(p.x), format_decimal(p.y), status_of(id, p), rule});
  };

  std::vector<const SchemeProfile*> base;
  for (const auto& s : catalog.schemes) base.push_back(&s);
  std::sort(base.begin(), base.end(), [](const auto* a, const auto* b) {
    if (a->category != b->category) return a->category < b->category;
    return a->id < b->id;
  });
  for (const auto* s : base) placement_row(s->id, place(*s), "vector");

  for (const auto& c : catalog.combined) {
    SchemeProfile p = catalog.materialize(c);
    placement_row(c.id, place(p), "vector");
    auto [x, y] = catalog.marker_point(c);
    rows.push_back({c.id, "-", "-", "-", "-", format_decimal(x), format_decimal(y), "-",
                    "markers"});
  }

  const std::array<std::string, 9> header{"id", "vseg", "vsub", "hseg", "hsub",
                                          "x",  "y",    "status", "rule"};
  std::array<std::size_t, 9> width{};
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  auto cells = [](const Row& r) {
    return std::array<const std::string*, 9>{&r.id, &r.vseg, &r.vsub, &r.hseg, &r.hsub,
                                             &r.x,  &r.y,    &r.status, &r.rule};
  };
  for (const auto& r : rows) {
    auto cs = cells(r);
    for (std::size_t i = 0; i < cs.size(); ++i) width[i] = std::max(width[i], cs[i]->size());
  }

  std::ostringstream out;
  auto emit = [&](const std::array<const std::string*, 9>& cs) {
    std::string line;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string cell = *cs[i];
      cell.resize(width[i], ' ');
      if (i) line += "  ";
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  std::array<const std::string*, 9> head{};
  for (std::size_t i = 0; i < header.size(); ++i) head[i] = &header[i];
  emit(head);
  for (const auto& r : rows) emit(cells(r));

  std::size_t overrides = 0;
  for (const auto& c : catalog.combined) overrides += c.overrides.size();
  if (overrides > 0)
    out << "\n" << overrides << " override(s) declared across combined entries\n";
  return out.str();
}

std::string render_diff(const SchemeProfile& a, const SchemeProfile& b) {
  std::ostringstream out;
  for (BenefitId benefit : all_benefits()) {
    Rating ra = a.vector.rating(benefit);
    Rating rb = b.vector.rating(benefit);
    if (ra == rb) continue;
    out << benefit_code(benefit) << ": " << to_string(ra) << " → " << to_string(rb)
        << "\n";
  }
  return out.str();
}

}  // namespace uds
