#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zerocert/certify.hpp"
#include "zerocert/special.hpp"

namespace py = pybind11;
using namespace zerocert;

namespace {

py::dict report_dict(const CertificateReport& r) {
    py::dict d;
    d["verdict"] = verdict_name(r.verdict);
    d["theorem"] = theorem_name(r.theorem_used);
    d["a"] = r.a;
    d["b"] = r.b;
    d["h"] = r.h;
    d["lhs"] = py::make_tuple(r.lhs.lo, r.lhs.hi);
    d["threshold"] = r.threshold;
    d["w_f"] = py::make_tuple(r.terms.w_f.lo, r.terms.w_f.hi);
    d["w_f_tail"] = r.terms.w_f_tail;
    d["w_inf"] = py::make_tuple(r.terms.w_inf.lo, r.terms.w_inf.hi);
    d["zero_sum"] = py::make_tuple(r.terms.zero_sum.lo, r.terms.zero_sum.hi);
    d["pole_term"] = py::make_tuple(r.terms.pole_term.lo, r.terms.pole_term.hi);
    d["precision_slack"] = r.terms.precision_slack;
    d["zeros_used"] = r.zeros_used;
    d["gate"] = r.gate();
    d["deficit"] = r.deficit();
    d["guard_cutoff_a"] = r.guard.cutoff_a;
    d["guard_cutoff_b"] = r.guard.cutoff_b;
    d["guard_zeros_below"] = r.guard.zeros_below;
    d["guard_zeros_above"] = r.guard.zeros_above;
    d["warnings"] = r.warnings;
    d["json"] = report_to_json(r);
    return d;
}

CertifyOptions make_opts(bool shortcut, bool strict, double budget) {
    CertifyOptions o;
    o.shortcut = shortcut;
    o.strict = strict;
    o.wf_budget = budget;
    o.osc_budget = budget;
    return o;
}

}  // namespace

PYBIND11_MODULE(_zerocert, m) {
    m.doc() = "Completeness certificates for L-function zero lists";

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>())
        .def_readonly("lo", &Interval::lo)
        .def_readonly("hi", &Interval::hi)
        .def("mid", &Interval::mid)
        .def("width", &Interval::width)
        .def("contains", py::overload_cast<double>(&Interval::contains, py::const_))
        .def("__repr__", [](const Interval& a) {
            return "Interval(" + std::to_string(a.lo) + ", " + std::to_string(a.hi) + ")";
        });

    py::class_<TestWindow>(m, "TestWindow")
        .def(py::init<double, double, double>(), py::arg("a"), py::arg("b"), py::arg("h"))
        .def_readonly("a", &TestWindow::a)
        .def_readonly("b", &TestWindow::b)
        .def_readonly("h", &TestWindow::h);

    py::class_<ZeroList>(m, "ZeroList")
        .def(py::init([](std::vector<double> ordinates, double delta, std::string source) {
                 ZeroList z{std::move(ordinates), delta, std::move(source)};
                 z.validate();
                 return z;
             }),
             py::arg("ordinates"), py::arg("precision_delta"), py::arg("source_label") = "")
        .def_readonly("ordinates", &ZeroList::ordinates)
        .def_readonly("precision_delta", &ZeroList::precision_delta)
        .def_readonly("source_label", &ZeroList::source_label);

    py::class_<LFunctionDescriptor>(m, "LFunctionDescriptor")
        .def_readonly("sigma0", &LFunctionDescriptor::sigma0)
        .def_readonly("sigma1", &LFunctionDescriptor::sigma1)
        .def_readonly("Q", &LFunctionDescriptor::Q)
        .def_readonly("coeff_bound_C", &LFunctionDescriptor::coeff_bound_C)
        .def("family", [](const LFunctionDescriptor& d) { return family_name(d.family); })
        .def("coeff", &LFunctionDescriptor::coeff, py::arg("p"), py::arg("m"));

    m.def("zeta_descriptor", &zeta_descriptor);
    m.def("qi_dedekind_descriptor", &qi_dedekind_descriptor);
    m.def("descriptor_from_file", &descriptor_from_file, py::arg("path"));
    m.def("zero_list_from_file", &zero_list_from_file, py::arg("path"));

    m.def("log_gamma_branch", [](std::complex<double> z, bool enclosure) -> py::object {
              if (!enclosure) return py::cast(log_gamma_branch(z));
              const ComplexInterval r = log_gamma_branch_enclosure(z);
              return py::make_tuple(r.re, r.im);
          },
          py::arg("z"), py::arg("enclosure") = false);
    m.def("digamma", [](std::complex<double> z, bool enclosure) -> py::object {
              if (!enclosure) return py::cast(digamma(z));
              const ComplexInterval r = digamma_enclosure(z);
              return py::make_tuple(r.re, r.im);
          },
          py::arg("z"), py::arg("enclosure") = false);
    m.def("arctan_cut", &arctan_cut, py::arg("z"));

    m.def("f_eval", &f_eval, py::arg("window"), py::arg("t"));
    m.def("fhat_eval", &fhat_eval, py::arg("window"), py::arg("z"));
    m.def("fhat_real_enclosure",
          [](const TestWindow& w, double x) { return fhat_real_enclosure(w, Interval(x)); },
          py::arg("window"), py::arg("x"));
    m.def("fhat_bounds", [](const TestWindow& w, std::complex<double> z) {
              const FhatBounds b = fhat_bounds(w, z);
              return py::make_tuple(b.lower, b.upper);
          },
          py::arg("window"), py::arg("z"));
    m.def("fhat_derivative_bound", &fhat_derivative_bound, py::arg("window"));

    m.def("choose_cutoff", &choose_cutoff, py::arg("descriptor"), py::arg("h"), py::arg("budget"));
    m.def("w_f_eval", [](const LFunctionDescriptor& d, const TestWindow& w, std::uint64_t M,
                         bool enclosure) {
              const WfResult r = w_f_eval(d, w, M, enclosure);
              return py::make_tuple(r.value, r.tail_bound);
          },
          py::arg("descriptor"), py::arg("window"), py::arg("cutoff"),
          py::arg("enclosure") = true);
    m.def("w_inf_eval", [](const LFunctionDescriptor& d, const TestWindow& w, double budget) {
              return w_inf_eval(d, w, {budget, 0.0, true});
          },
          py::arg("descriptor"), py::arg("window"), py::arg("budget") = 0.05);

    m.def("certify_general",
          [](const LFunctionDescriptor& d, const ZeroList& z, const TestWindow& w, bool shortcut,
             bool strict, double budget) {
              return report_dict(certify_general(d, z, w, make_opts(shortcut, strict, budget)));
          },
          py::arg("descriptor"), py::arg("zeros"), py::arg("window"),
          py::arg("shortcut") = false, py::arg("strict") = false, py::arg("budget") = 0.05);
    m.def("certify_zeta_R",
          [](const ZeroList& z, double R, double h, bool shortcut, bool strict) {
              return report_dict(certify_zeta_R(z, R, h, make_opts(shortcut, strict, 0.05)));
          },
          py::arg("zeros"), py::arg("R"), py::arg("h") = 2.5, py::arg("shortcut") = false,
          py::arg("strict") = false);
    m.def("certify_zeta_window",
          [](const ZeroList& z, double a, double b, double h, bool shortcut, bool strict) {
              return report_dict(
                  certify_zeta_window(z, a, b, h, make_opts(shortcut, strict, 0.05)));
          },
          py::arg("zeros"), py::arg("a"), py::arg("b"), py::arg("h") = 2.5,
          py::arg("shortcut") = false, py::arg("strict") = false);
    m.def("certify_hecke",
          [](const LFunctionDescriptor& d, const ZeroList& z, double a, double b, bool shortcut,
             bool strict) {
              return report_dict(certify_hecke(d, z, a, b, make_opts(shortcut, strict, 0.05)));
          },
          py::arg("descriptor"), py::arg("zeros"), py::arg("a"), py::arg("b"),
          py::arg("shortcut") = false, py::arg("strict") = false);
    m.def("certify_elliptic",
          [](const LFunctionDescriptor& d, const ZeroList& z, double a, double b, bool shortcut,
             bool strict) {
              return report_dict(certify_elliptic(d, z, a, b, make_opts(shortcut, strict, 0.05)));
          },
          py::arg("descriptor"), py::arg("zeros"), py::arg("a"), py::arg("b"),
          py::arg("shortcut") = false, py::arg("strict") = false);

    m.def("explicit_formula_check",
          [](const LFunctionDescriptor& d, const ZeroList& z, const TestWindow& w) {
              return explicit_formula_check(d, z, w);
          },
          py::arg("descriptor"), py::arg("zeros"), py::arg("window"));

    m.def("zeta_counting_bounds", [](double T) {
              const ZetaCountingBounds b = zeta_counting_bounds(T);
              return py::make_tuple(b.g, b.r1);
          },
          py::arg("T"));
    m.def("gaussian_dedekind_coeff", &gaussian_dedekind_coeff, py::arg("p"), py::arg("m"));
    m.def("elliptic_ap",
          [](std::array<long long, 5> a_inv, long long p) {
              return elliptic_ap(a_inv, p, 2'000'000);
          },
          py::arg("a_invariants"), py::arg("p"));
}
