#include "udschart/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "udschart/chart.hpp"
#include "udschart/numeric.hpp"
#include "udschart/report.hpp"
#include "udschart/validate.hpp"

namespace uds::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CatalogArgs {
  std::string path;
  bool builtin = false;
};

void add_catalog_options(CLI::App* cmd, CatalogArgs& args) {
  cmd->add_option("catalog", args.path, "Path to a catalog file");
  cmd->add_flag("--builtin", args.builtin, "Use the embedded reference catalog");
}

Catalog load_catalog(const CatalogArgs& args) {
  if (args.builtin != args.path.empty())
    throw CLI::ValidationError("catalog", "give a catalog path or --builtin (not both)");
  if (args.builtin) return reference_catalog();
  std::ifstream in(args.path, std::ios::binary);
  if (!in) throw CatalogParseError(0, "cannot open '" + args.path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str(), args.path);
}

int cmd_validate(const Catalog& catalog, std::ostream& err) {
  auto findings = validate(catalog);
  err << render_findings(findings);
  return has_errors(findings) ? kExitFailure : kExitOk;
}

int cmd_place(const Catalog& catalog, const std::string& scheme_id, std::ostream& out,
              std::ostream& err) {
  if (scheme_id.empty()) {
    out << render_placements(catalog);
    return kExitOk;
  }
  auto profile = catalog.resolve(scheme_id);
  if (!profile) {
    err << "unknown scheme id '" << scheme_id << "'\n";
    return kExitFailure;
  }
  Placement p = place(*profile);
  out << scheme_id << ": " << segment_code(p.vseg) << " sublevel " << p.vsub << ", "
      << segment_code(p.hseg) << " sublevel " << p.hsub << ", x=" << format_decimal(p.x)
      << " y=" << format_decimal(p.y) << "\n";
  return kExitOk;
}

int cmd_combine(const Catalog& catalog, const std::string& schemes_csv,
                const std::string& name, bool emit_record, std::ostream& out,
                std::ostream& err) {
  std::vector<SchemeProfile> parts;
  std::stringstream ss(schemes_csv);
  std::string id;
  while (std::getline(ss, id, ',')) {
    if (id.empty()) continue;
    auto profile = catalog.resolve(id);
    if (!profile) {
      err << "unknown scheme id '" << id << "'\n";
      return kExitFailure;
    }
    parts.push_back(std::move(*profile));
  }
  if (parts.size() < 2) {
    err << "combine needs at least two scheme ids\n";
    return kExitFailure;
  }
  SchemeProfile combined = combine_profiles(parts, {}, name);
  if (emit_record) {
    Catalog single;
    single.schemes.push_back(combined);
    out << serialize_catalog(single);
    return kExitOk;
  }
  out << "name = " << combined.name << "\n";
  for (BenefitId b : all_benefits()) {
    Rating r = combined.vector.rating(b);
    if (r != Rating::Absent) out << benefit_code(b) << " = " << to_string(r) << "\n";
  }
  return kExitOk;
}

int cmd_chart(const Catalog& catalog, const std::string& output, bool ascii_labels,
              std::ostream& out, std::ostream& err) {
  ChartConfig config;
  config.ascii_labels = ascii_labels;
  std::string svg = render_svg(catalog, config);
  if (output.empty() || output == "-") {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) {
    err << "cannot write '" << output << "'\n";
    return kExitFailure;
  }
  file << svg;
  return kExitOk;
}

int cmd_table(const Catalog& catalog, const std::string& format, bool ascii,
              std::ostream& out) {
  TableSpec spec;
  spec.ascii_symbols = ascii;
  if (format == "csv") spec.format = TableFormat::Csv;
  else if (format == "md") spec.format = TableFormat::Markdown;
  else spec.format = TableFormat::Text;
  out << render_table(catalog, spec);
  return kExitOk;
}

int cmd_diff(const Catalog& catalog, const std::string& id_a, const std::string& id_b,
             std::ostream& out, std::ostream& err) {
  auto a = catalog.resolve(id_a);
  if (!a) {
    err << "unknown scheme id '" << id_a << "'\n";
    return kExitFailure;
  }
  auto b = catalog.resolve(id_b);
  if (!b) {
    err << "unknown scheme id '" << id_b << "'\n";
    return kExitFailure;
  }
  out << render_diff(*a, *b);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exposure/mimicry evaluation of web-authentication schemes"};
  app.name("udschart");
  app.require_subcommand(1);

  CatalogArgs validate_args, place_args, combine_args, chart_args, table_args, diff_args;

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Lint a catalog against the framework rules");
  add_catalog_options(validate_cmd, validate_args);

  CLI::App* place_cmd = app.add_subcommand("place", "Compute chart placements");
  add_catalog_options(place_cmd, place_args);
  std::string place_scheme;
  place_cmd->add_option("--scheme", place_scheme, "Show a single scheme");

  CLI::App* combine_cmd = app.add_subcommand("combine", "Combine schemes into one profile");
  add_catalog_options(combine_cmd, combine_args);
  std::string combine_schemes, combine_name;
  bool emit_record = false;
  combine_cmd->add_option("--schemes", combine_schemes, "Comma-separated scheme ids")
      ->required();
  combine_cmd->add_option("--name", combine_name, "Name for the combined scheme");
  combine_cmd->add_flag("--emit-record", emit_record, "Print a catalog record");

  CLI::App* chart_cmd = app.add_subcommand("chart", "Render the chart as SVG");
  add_catalog_options(chart_cmd, chart_args);
  std::string chart_output;
  bool ascii_labels = false;
  chart_cmd->add_option("-o,--output", chart_output, "Output file ('-' for stdout)");
  chart_cmd->add_flag("--ascii-labels", ascii_labels, "Restrict labels to ASCII");

  CLI::App* table_cmd = app.add_subcommand("table", "Render the benefit table");
  add_catalog_options(table_cmd, table_args);
  std::string table_format = "text";
  bool table_ascii = false;
  table_cmd->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "md"}));
  table_cmd->add_flag("--ascii", table_ascii, "ASCII rating symbols");

  CLI::App* diff_cmd = app.add_subcommand("diff", "Show rating differences of two schemes");
  std::vector<std::string> diff_positionals;
  diff_cmd->add_flag("--builtin", diff_args.builtin, "Use the embedded reference catalog");
  diff_cmd->add_option("args", diff_positionals, "[catalog] scheme-a scheme-b")
      ->expected(2, 3);

  std::vector<const char*> argv;
  argv.push_back("udschart");
  for (const auto& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(load_catalog(validate_args), err);
    if (place_cmd->parsed())
      return cmd_place(load_catalog(place_args), place_scheme, out, err);
    if (combine_cmd->parsed())
      return cmd_combine(load_catalog(combine_args), combine_schemes, combine_name,
                         emit_record, out, err);
    if (chart_cmd->parsed())
      return cmd_chart(load_catalog(chart_args), chart_output, ascii_labels, out, err);
    if (table_cmd->parsed())
      return cmd_table(load_catalog(table_args), table_format, table_ascii, out);
    if (diff_cmd->parsed()) {
      const std::size_t expected = diff_args.builtin ? 2 : 3;
      if (diff_positionals.size() != expected)
        throw CLI::ValidationError(
            "diff", diff_args.builtin ? "usage: diff --builtin <scheme-a> <scheme-b>"
                                      : "usage: diff <catalog> <scheme-a> <scheme-b>");
      if (!diff_args.builtin) diff_args.path = diff_positionals.front();
      return cmd_diff(load_catalog(diff_args), diff_positionals[expected - 2],
                      diff_positionals[expected - 1], out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalogParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace uds::cli
