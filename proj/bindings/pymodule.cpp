#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contact_spectra/tables.hpp"

namespace py = pybind11;
namespace cs = contact_spectra;

namespace {

cs::FamilyDescriptor make_family(const std::string& family, long long p, long long n,
                                 const std::vector<long long>& exponents,
                                 const std::optional<std::vector<long long>>& cells) {
    return cs::FamilyDescriptor::parse(family, p, n, exponents, cells);
}

py::dict rank_to_dict(const cs::RankResult& r) {
    py::dict d;
    d["k"] = r.degree;
    d["rank_lo"] = r.rank.lo;
    d["rank_hi"] = r.rank.hi;
    d["justification"] = cs::justification_name(r.justification);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Reeb-orbit index spectra and contact invariants of Brieskorn manifolds";

    py::register_exception<cs::ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<cs::WindowError>(m, "WindowError", PyExc_RuntimeError);
    py::register_exception<cs::ParityError>(m, "ParityError", PyExc_ArithmeticError);

    m.def(
        "brieskorn_index",
        [](const std::vector<long long>& a, long long L, long long morse_index) {
            cs::IndexInput i;
            i.L = L;
            i.morse_index = morse_index;
            return cs::brieskorn_index(cs::ExponentVector(a), i);
        },
        py::arg("exponents"), py::arg("L"), py::arg("morse_index") = 0);

    m.def(
        "morse_bott_index",
        [](long long mu_cz, long long morse_index, long long stratum_dim, int hess_sign) {
            cs::IndexInput i;
            i.morse_index = morse_index;
            i.stratum_dim = stratum_dim;
            i.hess_sign = hess_sign;
            return cs::morse_bott_index(mu_cz, i);
        },
        py::arg("mu_cz"), py::arg("morse_index"), py::arg("stratum_dim"),
        py::arg("hess_sign") = 1);

    m.def(
        "mean_index",
        [](const std::vector<long long>& a, long long L) {
            return cs::mean_index(cs::ExponentVector(a), L).str();
        },
        py::arg("exponents"), py::arg("L"), "exact rational, as a string");

    m.def(
        "iteration_residual",
        [](const std::vector<long long>& a, long long L, long long k, long long morse_index) {
            return cs::iteration_residual(cs::ExponentVector(a), L, k, morse_index).str();
        },
        py::arg("exponents"), py::arg("L"), py::arg("k"), py::arg("morse_index") = 0);

    m.def("ladder_degree", &cs::ladder_degree, py::arg("p"), py::arg("l"), py::arg("n"));

    m.def(
        "spectrum",
        [](const std::string& family, long long p, long long n,
           const std::vector<long long>& exponents,
           const std::optional<std::vector<long long>>& cells, long long lmax) {
            auto table = cs::make_spectrum_table(make_family(family, p, n, exponents, cells),
                                                 lmax);
            py::list rows;
            for (const auto& r : table.rows) {
                py::dict d;
                d["L"] = r.L;
                d["stratum"] = r.stratum;
                d["branch"] = r.branch;
                d["cell"] = r.cell;
                d["degree"] = r.degree;
                d["length_std"] = r.length_std;
                d["length_inf"] = r.length_inf;
                d["label"] = r.label;
                rows.append(d);
            }
            return rows;
        },
        py::arg("family"), py::arg("p") = 0, py::arg("n") = 0,
        py::arg("exponents") = std::vector<long long>{}, py::arg("cells") = py::none(),
        py::arg("lmax") = 0);

    m.def(
        "afg_bound",
        [](const std::string& family, long long p, long long n,
           const std::vector<long long>& exponents, long long k) {
            auto b = cs::afg_bound(make_family(family, p, n, exponents, {}), k);
            py::dict d;
            d["k"] = b.degree;
            d["bound"] = b.bound;
            d["window_valid_up_to"] = b.window_valid_up_to;
            return d;
        },
        py::arg("family"), py::arg("p") = 0, py::arg("n") = 0,
        py::arg("exponents") = std::vector<long long>{}, py::arg("k") = 0);

    m.def(
        "sh_plus_rank",
        [](const std::string& family, long long p, long long n,
           const std::vector<long long>& exponents, long long k) {
            return rank_to_dict(cs::sh_plus_rank(make_family(family, p, n, exponents, {}), k));
        },
        py::arg("family"), py::arg("p") = 0, py::arg("n") = 0,
        py::arg("exponents") = std::vector<long long>{}, py::arg("k") = 0);

    m.def(
        "sh_rank",
        [](long long p, long long n, long long k) {
            return rank_to_dict(cs::sh_rank(cs::FamilyDescriptor::ustilovsky(p, n), k));
        },
        py::arg("p"), py::arg("n"), py::arg("k"));

    m.def("handle_spectrum", &cs::handle_spectrum, py::arg("n"), py::arg("k"),
          py::arg("count"));

    m.def(
        "periodic_flow_index",
        [](long long mu_cz_fix, long long fix_dim, long long morse_index) {
            return cs::periodic_flow_index(mu_cz_fix, fix_dim, morse_index).str();
        },
        py::arg("mu_cz_fix"), py::arg("fix_dim"), py::arg("morse_index"));

    m.def(
        "mean_euler",
        [](long long p, long long n, long long copies) {
            return cs::mean_euler_l_copies(p, n, copies).value.str();
        },
        py::arg("p"), py::arg("n"), py::arg("copies") = 1);

    m.def(
        "euler_matching_counts",
        [](const std::vector<long long>& primes, long long n) {
            auto match = cs::euler_matching_counts(primes, n);
            py::dict d;
            py::list counts;
            for (const auto& c : match.counts) counts.append(c.str());
            d["counts"] = counts;
            d["chi_m"] = match.chi.str();
            return d;
        },
        py::arg("primes"), py::arg("n"));

    m.def(
        "transport_afg_bound",
        [](long long b, long long n, long long k_handle, long long j) {
            return cs::transport_afg_bound(b, n, k_handle, j);
        },
        py::arg("b"), py::arg("n"), py::arg("k_handle"), py::arg("j"));

    m.def(
        "separating_copy_counts",
        [](long long b_xi, long long b_xik, long long n0, int steps) {
            std::vector<std::string> out;
            for (const auto& v : cs::separating_copy_counts(b_xi, b_xik, n0, steps))
                out.push_back(v.str());
            return out;
        },
        py::arg("b_xi"), py::arg("b_xik"), py::arg("n0"), py::arg("steps"));

    m.def(
        "distinguish",
        [](long long j, long long p, long long i, long long q, long long n,
           bool verify) -> py::object {
            auto cert = cs::distinguish({j, p}, {i, q}, n);
            if (!cert) return py::none();
            if (verify) cs::verify_certificate(*cert);
            py::dict d;
            d["k"] = cert->k;
            d["lower_rank"] = cert->lower_rank;
            d["upper_bound"] = cert->upper_bound;
            d["case"] = cs::Certificate::case_name(cert->kase);
            d["n"] = cert->n;
            d["excluded_form"] = cert->excluded_form_check.excluded;
            d["json"] = cs::render_json(*cert);
            return d;
        },
        py::arg("j"), py::arg("p"), py::arg("i"), py::arg("q"), py::arg("n"),
        py::arg("verify") = false);

    m.def(
        "inf_floor",
        [](const std::string& std_part, const std::string& inf_part) {
            return cs::inf_floor(cs::InfRat(cs::Rat::parse(std_part), cs::Rat::parse(inf_part)))
                .str();
        },
        py::arg("std"), py::arg("inf") = "0");

    m.def(
        "inf_ceil",
        [](const std::string& std_part, const std::string& inf_part) {
            return cs::inf_ceil(cs::InfRat(cs::Rat::parse(std_part), cs::Rat::parse(inf_part)))
                .str();
        },
        py::arg("std"), py::arg("inf") = "0");
}
