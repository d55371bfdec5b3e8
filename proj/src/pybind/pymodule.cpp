/* Python bindings: a thin functional surface over the exact kernels.
   Structured results travel as JSON strings; the dynirr package wraps them
   into dicts. */

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynirr/cubic_family.hpp"
#include "dynirr/json_io.hpp"
#include "dynirr/oracle.hpp"
#include "dynirr/quad_family.hpp"
#include "dynirr/unicritical.hpp"

namespace py = pybind11;
using namespace dynirr;

namespace {

std::string dump(const io::json& j) { return j.dump(); }

IntPoly1 poly1_of(const std::string& text) { return io::poly1_from_json(io::parse(text)); }

}  // namespace

PYBIND11_MODULE(_dynirr, m) {
    m.doc() = "exact constructions and irreducibility certificates for families "
              "of maps with a preperiodic critical point";
    m.attr("__version__") = "1.0.0";

    m.def("default_budget", &uni::default_budget);

    // polynomial helpers over the JSON schema
    m.def("poly_add", [](const std::string& f, const std::string& g) {
        return dump(io::to_json(poly1_of(f) + poly1_of(g)));
    });
    m.def("poly_mul", [](const std::string& f, const std::string& g) {
        return dump(io::to_json(poly1_of(f) * poly1_of(g)));
    });
    m.def("poly_exact_div", [](const std::string& f, const std::string& g) {
        return dump(io::to_json(exact_div(poly1_of(f), poly1_of(g))));
    });
    m.def("resultant", [](const std::string& f, const std::string& g) {
        return resultant(poly1_of(f), poly1_of(g)).to_string();
    });
    m.def("reduce_mod", [](const std::string& f, std::uint64_t p) {
        return dump(io::to_json(reduce_mod(poly1_of(f), p)));
    });
    m.def("is_irreducible_mod_p", [](const std::string& f_modp) {
        return is_irreducible(io::modpoly_from_json(io::parse(f_modp)));
    });

    // cubic family
    m.def(
        "cubic_build",
        [](long k, long budget) {
            cubic::Instance inst = cubic::build(k, budget);
            io::json j;
            j["k"] = k;
            j["R"] = io::to_json(inst.R);
            j["r"] = io::to_json(inst.r);
            j["s"] = io::to_json(inst.s);
            return dump(j);
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());
    m.def(
        "cubic_verify",
        [](long k, long budget) {
            return dump(io::to_json(cubic::verify_structure(cubic::build(k, budget))));
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());
    m.def(
        "cubic_certify",
        [](long k, long budget) {
            return dump(io::to_json(cubic::certify_s(cubic::build_slice(k, budget))));
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());

    // quadratic rational family
    m.def(
        "quad_build",
        [](long k, long budget) {
            quad::Instance inst = quad::build(k, budget);
            io::json j;
            j["k"] = k;
            j["R"] = io::to_json(inst.R);
            j["r"] = io::to_json(inst.r);
            return dump(j);
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());
    m.def(
        "quad_verify",
        [](long k, long budget) {
            return dump(io::to_json(quad::verify_structure(quad::build(k, budget))));
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());
    m.def(
        "quad_certify",
        [](long k, long budget) {
            quad::Certificate cert = quad::certify_r(quad::build(k, budget));
            io::json j = io::to_json(cert.eisenstein);
            j["mod2_exponent"] = cert.mod2_exponent;
            j["note"] = cert.note;
            return dump(j);
        },
        py::arg("k"), py::arg("budget") = uni::default_budget());

    // unicritical machinery
    m.def(
        "uni_orbit_poly",
        [](long D, long n, long budget) {
            uni::Context ctx(D, budget);
            return dump(io::to_json(ctx.P(n)));
        },
        py::arg("D"), py::arg("n"), py::arg("budget") = uni::default_budget());
    m.def(
        "uni_gleason_poly",
        [](long D, long n, long budget) {
            uni::Context ctx(D, budget);
            return dump(io::to_json(ctx.R(n)));
        },
        py::arg("D"), py::arg("n"), py::arg("budget") = uni::default_budget());
    m.def(
        "uni_factor",
        [](long D, long k, long n, long d, long budget) {
            uni::Context ctx(D, budget);
            return dump(io::to_json(uni::preperiodic_factor(ctx, k, n, d).poly));
        },
        py::arg("D"), py::arg("k"), py::arg("n"), py::arg("d"),
        py::arg("budget") = uni::default_budget());
    m.def(
        "uni_pipeline",
        [](long D, long k, long n, long d, long budget) {
            return dump(io::to_json(certify::theorem_pipeline(D, k, n, d, budget)));
        },
        py::arg("D"), py::arg("k"), py::arg("n"), py::arg("d"),
        py::arg("budget") = uni::default_budget());
    m.def(
        "uni_resultant_check",
        [](long D, long k, long m, long d, long n, long budget) {
            uni::Context ctx(D, budget);
            return dump(io::to_json(uni::check_resultant_lemma(ctx, k, m, d, n)));
        },
        py::arg("D"), py::arg("k"), py::arg("m"), py::arg("d"), py::arg("n"),
        py::arg("budget") = uni::default_budget());
    m.def("uni_survey", [](const std::vector<long>& Ds, long n_max) {
        return dump(io::to_json(uni::fp_survey(Ds, n_max)));
    });
    m.def(
        "uni_gleason_check",
        [](long D, long n, long budget) {
            uni::Context ctx(D, budget);
            return dump(io::to_json(uni::check_gleason(ctx, n)));
        },
        py::arg("D"), py::arg("n"), py::arg("budget") = uni::default_budget());

    // certification
    m.def("eisenstein_classic", [](const std::string& f, long p) {
        return dump(io::to_json(certify::eisenstein_classic(poly1_of(f), p)));
    });
    m.def("eisenstein_general", [](const std::string& A, const std::string& B, long p) {
        return dump(io::to_json(certify::eisenstein_general(poly1_of(A), poly1_of(B), p)));
    });
    m.def("verify_certificate", &io::verify_certificate_text);

    // numeric oracle
    m.def("all_roots", [](const std::string& f) {
        auto rep = oracle::all_roots(poly1_of(f));
        std::vector<std::complex<double>> roots(rep.roots.begin(), rep.roots.end());
        return py::make_tuple(roots, rep.all_converged);
    });
    m.def(
        "validate_cubic_slice",
        [](long k, double tol, long budget) {
            cubic::Slice slice = cubic::build_slice(k, budget);
            return dump(io::to_json(oracle::validate_cubic_slice(slice.s, k, tol)));
        },
        py::arg("k"), py::arg("tol") = 1e-8, py::arg("budget") = uni::default_budget());
    m.def(
        "validate_unicritical",
        [](long D, long k, long n, long d, double tol, long budget) {
            uni::Context ctx(D, budget);
            auto f = uni::preperiodic_factor(ctx, k, n, d);
            return dump(io::to_json(oracle::validate_unicritical(f.poly, D, k, n, d, tol)));
        },
        py::arg("D"), py::arg("k"), py::arg("n"), py::arg("d"), py::arg("tol") = 1e-8,
        py::arg("budget") = uni::default_budget());
}
