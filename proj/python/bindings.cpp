#include "infsing/audit.hpp"
#include "infsing/family_file.hpp"
#include "infsing/ideal.hpp"
#include "infsing/local.hpp"
#include "infsing/parser.hpp"
#include "infsing/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace infsing;

namespace {

FamilyFile inline_family(const std::vector<std::string>& vars, const std::string& f, const std::string& param)
{
    FamilyFile ff;
    ff.name = "inline";
    ff.vars = vars;
    ff.param = param;
    ff.f = f;
    return ff;
}

std::vector<Rational> rationals(const std::vector<std::string>& xs)
{
    std::vector<Rational> out;
    for (const auto& x : xs)
        out.push_back(parse_rational(x));
    return out;
}

std::string analyze_json(const FamilyFile& ff, const std::vector<std::string>& s, std::uint64_t seed)
{
    PolynomialFamily fam = ff.family();
    std::vector<Rational> samples = s.empty() ? (ff.samples ? *ff.samples : AuditConfig{}.samples) : rationals(s);
    return dump(analysis_report(ff, fam, compute_ledgers(fam, samples, seed)));
}

std::string audit_json(const FamilyFile& ff, const std::vector<std::string>& samples, std::uint64_t seed)
{
    AuditConfig cfg;
    if (!samples.empty())
        cfg.samples = rationals(samples);
    else if (ff.samples)
        cfg.samples = *ff.samples;
    cfg.seed = seed;
    return dump(audit_report(ff, audit(ff.family(), cfg, ff.expectations)));
}

} // namespace

PYBIND11_MODULE(_infsing, m)
{
    m.doc() = "Exact invariants of polynomial families at infinity";

    py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);
    py::register_exception<Inconsistency>(m, "Inconsistency", PyExc_RuntimeError);

    m.def("canonical", [](const std::string& text, const std::vector<std::string>& vars,
                          const std::vector<std::string>& params) { return parse_polynomial(text, vars, params).to_string(); },
          py::arg("text"), py::arg("vars"), py::arg("params") = std::vector<std::string>{});

    m.def("total_mu", [](const std::string& text, const std::vector<std::string>& vars) {
        return total_mu(parse_polynomial(text, vars));
    }, py::arg("text"), py::arg("vars"));

    m.def("local_milnor", [](const std::string& text, const std::vector<std::string>& vars) {
        return local_milnor(parse_polynomial(text, vars));
    }, py::arg("text"), py::arg("vars"));

    m.def("local_milnor_oracle", [](const std::string& text, const std::vector<std::string>& vars, int cap) {
        return local_milnor_oracle(parse_polynomial(text, vars), cap);
    }, py::arg("text"), py::arg("vars"), py::arg("cap") = 16);

    m.def("chi_smooth", &chi_smooth, py::arg("n"), py::arg("d"));

    m.def("analyze_json", [](const std::vector<std::string>& vars, const std::string& f,
                             const std::vector<std::string>& s, const std::string& param, std::uint64_t seed) {
        py::gil_scoped_release release;
        return analyze_json(inline_family(vars, f, param), s, seed);
    }, py::arg("vars"), py::arg("f"), py::arg("s") = std::vector<std::string>{}, py::arg("param") = "s",
          py::arg("seed") = kDefaultSeed);

    m.def("audit_json", [](const std::vector<std::string>& vars, const std::string& f,
                           const std::vector<std::string>& samples, const std::string& param, std::uint64_t seed) {
        py::gil_scoped_release release;
        return audit_json(inline_family(vars, f, param), samples, seed);
    }, py::arg("vars"), py::arg("f"), py::arg("samples") = std::vector<std::string>{}, py::arg("param") = "s",
          py::arg("seed") = kDefaultSeed);

    m.def("analyze_file_json", [](const std::string& path, const std::vector<std::string>& s, std::uint64_t seed) {
        py::gil_scoped_release release;
        return analyze_json(load_family_file(path), s, seed);
    }, py::arg("path"), py::arg("s") = std::vector<std::string>{}, py::arg("seed") = kDefaultSeed);

    m.def("audit_file_json", [](const std::string& path, const std::vector<std::string>& samples, std::uint64_t seed) {
        py::gil_scoped_release release;
        return audit_json(load_family_file(path), samples, seed);
    }, py::arg("path"), py::arg("samples") = std::vector<std::string>{}, py::arg("seed") = kDefaultSeed);

    m.attr("DEFAULT_SEED") = kDefaultSeed;
}
