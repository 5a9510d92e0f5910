#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sympair/errors.hpp"
#include "sympair/pair_metric.hpp"
#include "sympair/polynomial.hpp"
#include "sympair/spectrum.hpp"

namespace py = pybind11;
using namespace sympair;

namespace {

// Thin handle around the shared immutable field tables; elements stay plain
// python ints on the boundary, mirroring the C++ elem_t convention.
struct PyField {
    FieldPtr ptr;

    elem_t check(int v) const {
        if (v < 0 || std::uint32_t(v) >= ptr->q()) {
            throw FieldMismatch("element " + std::to_string(v) + " not in GF(" +
                                std::to_string(ptr->q()) + ")");
        }
        return elem_t(v);
    }
};

std::vector<elem_t> check_all(const PyField& f, const std::vector<int>& xs) {
    std::vector<elem_t> out;
    out.reserve(xs.size());
    for (int v : xs) out.push_back(f.check(v));
    return out;
}

// BigInt -> arbitrary-precision python int, via the decimal string.
py::int_ to_py_int(const BigInt& v) {
    std::ostringstream ss;
    ss << v;
    return py::int_(py::str(ss.str()));
}

py::dict distribution_to_dict(const WeightDistribution& wd) {
    py::dict d;
    for (const auto& [w, c] : wd.counts) d[py::int_(w)] = py::int_(c);
    return d;
}

py::dict census_to_dict(const CensusTable& t) {
    py::list rows;
    for (const CensusRow& r : t.rows) {
        py::dict row;
        row["label"] = r.label;
        row["pattern"] = r.pattern;
        row["enumerated"] = py::int_(r.enumerated);
        row["formula"] = py::int_(r.formula);
        rows.append(row);
    }
    py::dict checks;
    checks["membership"] = t.checks.membership;
    checks["disjoint"] = t.checks.disjoint;
    checks["partition"] = t.checks.partition;
    py::dict d;
    d["q"] = py::int_(t.q);
    d["m"] = t.m;
    d["rows"] = rows;
    d["checks"] = checks;
    d["all_match"] = t.all_match();
    return d;
}

EnumOptions make_opts(int jobs, std::uint64_t ceiling) {
    EnumOptions opts;
    opts.jobs = jobs;
    opts.ceiling = ceiling;
    return opts;
}

constexpr std::uint64_t kDefaultCeiling = 100'000'000;

}  // namespace

PYBIND11_MODULE(sympair, m) {
    m.doc() =
        "Evaluation codes under the symbol-pair metric: construction, "
        "exhaustive spectra, closed forms, and root-class census";

    py::register_exception<Error>(m, "Error");

    py::class_<PyField>(m, "Field")
        .def_property_readonly("q", [](const PyField& f) { return f.ptr->q(); })
        .def_property_readonly("p", [](const PyField& f) { return f.ptr->p(); })
        .def_property_readonly("e", [](const PyField& f) { return f.ptr->e(); })
        .def("add", [](const PyField& f, int a, int b) {
            return int(f.ptr->add(f.check(a), f.check(b)));
        })
        .def("sub", [](const PyField& f, int a, int b) {
            return int(f.ptr->sub(f.check(a), f.check(b)));
        })
        .def("mul", [](const PyField& f, int a, int b) {
            return int(f.ptr->mul(f.check(a), f.check(b)));
        })
        .def("neg", [](const PyField& f, int a) { return int(f.ptr->neg(f.check(a))); })
        .def("inv", [](const PyField& f, int a) { return int(f.ptr->inv(f.check(a))); })
        .def("pow", [](const PyField& f, int a, std::uint64_t n) {
            return int(f.ptr->pow(f.check(a), n));
        })
        .def("__repr__", [](const PyField& f) {
            return "Field(q=" + std::to_string(f.ptr->q()) + ")";
        });

    m.def(
        "field", [](std::uint32_t q) { return PyField{field_from_order(q)}; },
        py::arg("q"), "The field of the given prime-power order");
    m.def(
        "field",
        [](std::uint32_t p, std::uint32_t e) { return PyField{field_new(p, e)}; },
        py::arg("p"), py::arg("e"), "GF(p^e) with the canonical modulus");

    // ---- pair metric --------------------------------------------------------

    m.def(
        "pair_read",
        [](const PyField& f, const std::vector<int>& x) {
            auto v = check_all(f, x);
            py::list out;
            for (const auto& [a, b] : pair_read(v)) {
                out.append(py::make_tuple(int(a), int(b)));
            }
            return out;
        },
        py::arg("field"), py::arg("x"),
        "Cyclic sequence of overlapping adjacent pairs of x");
    m.def(
        "hamming_weight",
        [](const PyField& f, const std::vector<int>& x) {
            return hamming_weight(check_all(f, x));
        },
        py::arg("field"), py::arg("x"));
    m.def(
        "pair_weight",
        [](const PyField& f, const std::vector<int>& x) {
            return pair_weight(check_all(f, x));
        },
        py::arg("field"), py::arg("x"),
        "Number of pair-read coordinates different from (0,0)");
    m.def(
        "pair_distance",
        [](const PyField& f, const std::vector<int>& x, const std::vector<int>& y) {
            return pair_distance(*f.ptr, check_all(f, x), check_all(f, y));
        },
        py::arg("field"), py::arg("x"), py::arg("y"));
    m.def(
        "hamming_distance",
        [](const PyField& f, const std::vector<int>& x, const std::vector<int>& y) {
            return hamming_distance(*f.ptr, check_all(f, x), check_all(f, y));
        },
        py::arg("field"), py::arg("x"), py::arg("y"));

    // ---- code construction --------------------------------------------------

    py::class_<CodeSpec>(m, "CodeSpec")
        .def(py::init([](const PyField& f, int k, int m) {
                 return CodeSpec(f.ptr, k, m);
             }),
             py::arg("field"), py::arg("k"), py::arg("m"))
        .def(py::init([](const PyField& f, int k, int m, int beta1, int beta2,
                         const std::vector<int>& alphas) {
                 return CodeSpec(f.ptr, k, m, f.check(beta1), f.check(beta2),
                                 check_all(f, alphas));
             }),
             py::arg("field"), py::arg("k"), py::arg("m"), py::arg("beta1"),
             py::arg("beta2"), py::arg("alphas"))
        .def_property_readonly("q", [](const CodeSpec& s) { return s.field()->q(); })
        .def_property_readonly("k", &CodeSpec::k)
        .def_property_readonly("m", &CodeSpec::m)
        .def_property_readonly("t", &CodeSpec::t)
        .def_property_readonly("m1", &CodeSpec::m1)
        .def_property_readonly("blocks", &CodeSpec::blocks)
        .def_property_readonly("n", &CodeSpec::n)
        .def_property_readonly("beta1", [](const CodeSpec& s) { return int(s.beta1()); })
        .def_property_readonly("beta2", [](const CodeSpec& s) { return int(s.beta2()); })
        .def_property_readonly("alphas",
                               [](const CodeSpec& s) {
                                   std::vector<int> out(s.alphas().begin(),
                                                        s.alphas().end());
                                   return out;
                               })
        .def_property_readonly("layout",
                               [](const CodeSpec& s) {
                                   py::list out;
                                   for (const EvalPoint& p : s.layout()) {
                                       const char* tag =
                                           p.tag == EvalPoint::Tag::alpha   ? "alpha"
                                           : p.tag == EvalPoint::Tag::beta1 ? "beta1"
                                                                            : "beta2";
                                       out.append(py::make_tuple(tag, p.alpha_index,
                                                                 int(p.value)));
                                   }
                                   return out;
                               })
        .def("__repr__", [](const CodeSpec& s) {
            return "CodeSpec(q=" + std::to_string(s.field()->q()) +
                   ", k=" + std::to_string(s.k()) + ", m=" + std::to_string(s.m()) +
                   ", n=" + std::to_string(s.n()) + ")";
        });

    m.def(
        "encode",
        [](const CodeSpec& s, const std::vector<int>& coeffs) {
            PyField f{s.field()};
            Polynomial poly(s.field(), check_all(f, coeffs));
            auto word = encode(s, poly);
            return std::vector<int>(word.begin(), word.end());
        },
        py::arg("spec"), py::arg("coeffs"),
        "Evaluate the polynomial with the given coefficients (constant first) "
        "at the laid-out points");
    m.def(
        "generator_matrix",
        [](const CodeSpec& s) {
            std::vector<std::vector<int>> rows;
            for (const auto& row : generator_matrix(s)) {
                rows.emplace_back(row.begin(), row.end());
            }
            return rows;
        },
        py::arg("spec"));
    m.def("theoretical_dp", &theoretical_dp, py::arg("spec"),
          "Minimum pair distance promised by the construction: n-k+2");
    m.def("is_mds_pair", &is_mds_pair, py::arg("spec"), py::arg("dp"),
          "Whether dp meets the Singleton-type bound with equality");
    m.def(
        "singleton_pair_cap",
        [](std::uint64_t q, int n, int dp) { return to_py_int(singleton_pair_cap(q, n, dp)); },
        py::arg("q"), py::arg("n"), py::arg("dp"),
        "Largest possible codebook size for the given length and pair distance");
    m.def(
        "count_monic_irreducible",
        [](std::uint64_t q, int n) { return to_py_int(count_monic_irreducible(q, n)); },
        py::arg("q"), py::arg("n"));

    // ---- spectra and census -------------------------------------------------

    m.def(
        "pair_weight_distribution",
        [](const CodeSpec& s, int jobs, std::uint64_t ceiling) {
            return distribution_to_dict(pair_weight_distribution(s, make_opts(jobs, ceiling)));
        },
        py::arg("spec"), py::arg("jobs") = 0, py::arg("ceiling") = kDefaultCeiling,
        "Exhaustive pair-weight distribution over all q^k messages");
    m.def(
        "brute_min_pair_distance",
        [](const CodeSpec& s, int jobs, std::uint64_t ceiling) {
            return brute_min_pair_distance(s, make_opts(jobs, ceiling));
        },
        py::arg("spec"), py::arg("jobs") = 0, py::arg("ceiling") = kDefaultCeiling);
    m.def(
        "closed_form_a3",
        [](std::uint32_t q, int m) { return distribution_to_dict(closed_form_a3(q, m)); },
        py::arg("q"), py::arg("m"),
        "Closed-form pair-weight distribution for k=3 with the canonical layout");
    m.def(
        "closed_form_a4",
        [](std::uint32_t q, int m) { return distribution_to_dict(closed_form_a4(q, m)); },
        py::arg("q"), py::arg("m"),
        "Closed-form pair-weight distribution for k=4 with the canonical layout");
    m.def(
        "root_class_census",
        [](const PyField& f, int m) { return census_to_dict(root_class_census(f.ptr, m)); },
        py::arg("field"), py::arg("m"),
        "Enumerated vs formula cardinality for every root-structure class");
    m.def(
        "root_class_census",
        [](const CodeSpec& s) { return census_to_dict(root_class_census(s)); },
        py::arg("spec"));
}
