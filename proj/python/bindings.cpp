#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "udschart/chart.hpp"
#include "udschart/report.hpp"
#include "udschart/validate.hpp"

namespace py = pybind11;
using namespace uds;

namespace {

BenefitId benefit_from_str(const std::string& code) {
  auto b = parse_benefit(code);
  if (!b) throw std::invalid_argument("unknown benefit id '" + code + "'");
  return *b;
}

Rating rating_from_str(const std::string& token) {
  auto r = parse_rating(token);
  if (!r) throw std::invalid_argument("invalid rating '" + token + "'");
  return *r;
}

TableFormat format_from_str(const std::string& token) {
  if (token == "text") return TableFormat::Text;
  if (token == "csv") return TableFormat::Csv;
  if (token == "md" || token == "markdown") return TableFormat::Markdown;
  throw std::invalid_argument("unknown format token '" + token + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exposure/mimicry evaluation of web-authentication schemes";

  py::enum_<Rating>(m, "Rating")
      .value("ABSENT", Rating::Absent)
      .value("PARTIAL", Rating::Partial)
      .value("FULL", Rating::Full);

  py::enum_<Category>(m, "Category")
      .value("PASSWORD", Category::Password)
      .value("GEOLOCATION", Category::Geolocation)
      .value("FINGERPRINTING", Category::Fingerprinting)
      .value("OTP", Category::Otp)
      .value("PUF", Category::Puf)
      .value("OTHER", Category::Other);

  py::enum_<VerticalSegment>(m, "VerticalSegment")
      .value("V1", VerticalSegment::V1)
      .value("V2", VerticalSegment::V2)
      .value("V3", VerticalSegment::V3);

  py::enum_<HorizontalSegment>(m, "HorizontalSegment")
      .value("ON_AXIS", HorizontalSegment::OnAxis)
      .value("H1", HorizontalSegment::H1)
      .value("H2", HorizontalSegment::H2)
      .value("H3", HorizontalSegment::H3);

  py::class_<BenefitVector>(m, "BenefitVector")
      .def(py::init<>())
      .def("rating",
           [](const BenefitVector& v, const std::string& code) {
             return std::string(to_string(v.rating(benefit_from_str(code))));
           })
      .def("set",
           [](BenefitVector& v, const std::string& code, const std::string& rating) {
             v.set(benefit_from_str(code), rating_from_str(rating));
           })
      .def("__eq__", [](const BenefitVector& a, const BenefitVector& b) { return a == b; });

  py::class_<SchemeProfile>(m, "SchemeProfile")
      .def(py::init<>())
      .def_readwrite("id", &SchemeProfile::id)
      .def_readwrite("name", &SchemeProfile::name)
      .def_readwrite("category", &SchemeProfile::category)
      .def_readwrite("vector", &SchemeProfile::vector)
      .def_readwrite("notes", &SchemeProfile::notes)
      .def("rating", [](const SchemeProfile& p, const std::string& code) {
        return std::string(to_string(rating_of(p, benefit_from_str(code))));
      });

  py::class_<Placement>(m, "Placement")
      .def_readonly("vseg", &Placement::vseg)
      .def_readonly("vsub", &Placement::vsub)
      .def_readonly("hseg", &Placement::hseg)
      .def_readonly("hsub", &Placement::hsub)
      .def_readonly("x", &Placement::x)
      .def_readonly("y", &Placement::y)
      .def("__repr__", [](const Placement& p) {
        return "Placement(" + std::string(segment_code(p.vseg)) + ", " +
               std::to_string(p.vsub) + ", " + std::string(segment_code(p.hseg)) + ", " +
               std::to_string(p.hsub) + ", x=" + std::to_string(p.x) +
               ", y=" + std::to_string(p.y) + ")";
      });

  py::class_<CombinedScheme>(m, "CombinedScheme")
      .def_readonly("id", &CombinedScheme::id)
      .def_readonly("name", &CombinedScheme::name)
      .def_readonly("parts", &CombinedScheme::parts)
      .def_readonly("reason", &CombinedScheme::reason);

  py::class_<ExpectedPlacement>(m, "ExpectedPlacement")
      .def_readonly("scheme_id", &ExpectedPlacement::scheme_id)
      .def_readonly("vseg", &ExpectedPlacement::vseg)
      .def_readonly("hseg", &ExpectedPlacement::hseg)
      .def_readonly("x", &ExpectedPlacement::x)
      .def_readonly("y", &ExpectedPlacement::y)
      .def_readonly("errata", &ExpectedPlacement::errata);

  py::class_<LintFinding>(m, "LintFinding")
      .def_readonly("rule", &LintFinding::rule)
      .def_property_readonly(
          "severity", [](const LintFinding& f) { return std::string(to_string(f.severity)); })
      .def_readonly("scheme", &LintFinding::scheme)
      .def_readonly("message", &LintFinding::message)
      .def("__repr__", [](const LintFinding& f) {
        return std::string(to_string(f.severity)) + " " + f.rule + ": " + f.scheme + ": " +
               f.message;
      });

  py::class_<Catalog>(m, "Catalog")
      .def(py::init<>())
      .def_readonly("source", &Catalog::source)
      .def_readonly("schemes", &Catalog::schemes)
      .def_readonly("combined", &Catalog::combined)
      .def_readonly("expectations", &Catalog::expectations)
      .def("scheme",
           [](const Catalog& c, const std::string& id) {
             const SchemeProfile* s = c.find_scheme(id);
             if (!s) throw py::key_error("unknown scheme id '" + id + "'");
             return *s;
           })
      .def("resolve",
           [](const Catalog& c, const std::string& id) {
             auto p = c.resolve(id);
             if (!p) throw py::key_error("unknown id '" + id + "'");
             return *p;
           })
      .def("marker_point",
           [](const Catalog& c, const std::string& id) {
             const CombinedScheme* entry = c.find_combined(id);
             if (!entry) throw py::key_error("unknown combined id '" + id + "'");
             return c.marker_point(*entry);
           })
      .def("__eq__", [](const Catalog& a, const Catalog& b) { return a == b; });

  m.def("parse_catalog", &parse_catalog, py::arg("text"), py::arg("source_name") = "");
  m.def("serialize_catalog", &serialize_catalog);
  m.def("reference_catalog", &reference_catalog, py::return_value_policy::reference);

  m.def("sublevel_count", py::overload_cast<int>(&sublevel_count));
  m.def("sublevel_from_counts", &sublevel_from_counts);
  m.def("vertical_segment", &vertical_segment);
  m.def("vertical_sublevel", &vertical_sublevel);
  m.def("horizontal_placement", &horizontal_placement);
  m.def("coordinates", &coordinates);
  m.def("place", &place);
  m.def("combine_markers", &combine_markers);
  m.def("merged_s6",
        [](const BenefitVector& v) { return std::string(to_string(merged_s6(v))); });

  m.def(
      "combine_profiles",
      [](const std::vector<SchemeProfile>& parts, const std::string& name) {
        return combine_profiles(parts, {}, name);
      },
      py::arg("parts"), py::arg("name") = "");

  m.def("validate", &validate);
  m.def("render_findings", [](const std::vector<LintFinding>& findings) {
    return render_findings(findings);
  });

  m.def(
      "render_table",
      [](const Catalog& catalog, const std::string& format, bool ascii_symbols) {
        TableSpec spec{format_from_str(format), ascii_symbols};
        return render_table(catalog, spec);
      },
      py::arg("catalog"), py::arg("format") = "text", py::arg("ascii_symbols") = false);
  m.def("render_placements", &render_placements);
  m.def("render_diff", &render_diff);
  m.def(
      "render_svg",
      [](const Catalog& catalog, bool ascii_labels) {
        ChartConfig config;
        config.ascii_labels = ascii_labels;
        return render_svg(catalog, config);
      },
      py::arg("catalog"), py::arg("ascii_labels") = false);
}
