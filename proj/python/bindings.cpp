#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qshelf/axq.hpp"
#include "qshelf/errors.hpp"
#include "qshelf/matrices.hpp"
#include "qshelf/partitions.hpp"
#include "qshelf/shelves.hpp"
#include "qshelf/verify.hpp"

namespace py = pybind11;
using namespace qshelf;

namespace {

// arbitrary size: go through the decimal string
py::object to_py(const Integer& c)
{
    std::string s = c.to_string();
    return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

// coefficients of q^0 .. q^(prec-1)
py::list coeffs(const Series& s)
{
    py::list out;
    for (int e = 0; e < s.prec(); ++e)
        out.append(to_py(s.coeff(e)));
    return out;
}

py::dict poly(const LaurentPoly& p)
{
    py::dict d;
    for (const auto& [e, c] : p.terms())
        d[py::int_(e)] = to_py(c);
    return d;
}

py::list matrix(const PolyMatrix& m)
{
    py::list rows;
    for (int r = 1; r <= m.k(); ++r) {
        py::list row;
        for (int c = 1; c <= m.k(); ++c)
            row.append(poly(m.at(r, c)));
        rows.append(row);
    }
    return rows;
}

// {(a, x, q): c} over the nonzero terms
py::dict tri(const TriSeries& t)
{
    py::dict d;
    for (const auto& term : t.terms())
        d[py::make_tuple(term.a, term.x, term.q)] = to_py(term.c);
    return d;
}

Config make_config(const std::string& k, int degree, const std::string& shelves, const std::string& start_shelf,
                   int depth, int nmax, int nmax_over, int axq_degree, const std::vector<std::string>& faults)
{
    Config c;
    c.k = parse_range(k);
    c.degree = degree;
    c.shelves = parse_range(shelves);
    if (shelves.find("..") == std::string::npos)
        c.shelves.lo = 0;
    c.start_shelf = parse_range(start_shelf);
    c.depth = depth;
    c.nmax = nmax;
    c.nmax_over = nmax_over;
    c.axq_degree = axq_degree;
    for (const auto& f : faults)
        c.faults.push_back(parse_fault(f));
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact q-series for the shelf families, their oracles and the verification runner";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<NotDivisible>(m, "NotDivisible", base.ptr());
    py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", base.ptr());
    py::register_exception<RouteMismatch>(m, "RouteMismatch", base.ptr());
    py::register_exception<NoStabilization>(m, "NoStabilization", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ConfigError&) {
            throw;
        } catch (const NotDivisible&) {
            throw;
        } catch (const PrecisionExhausted&) {
            throw;
        } catch (const RouteMismatch&) {
            throw;
        } catch (const NoStabilization&) {
            throw;
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("product_side", [](int k, int i, int N) { return coeffs(product_side(k, i, N)); }, py::arg("k"),
          py::arg("i"), py::arg("N"));
    m.def("shelf0_sum_form", [](int k, int i, int N) { return coeffs(shelf0_sum_form(k, i, N)); }, py::arg("k"),
          py::arg("i"), py::arg("N"));
    m.def("closed_form_G", [](int k, int j, int i, int N) { return coeffs(closed_form_G(k, j, i, N)); },
          py::arg("k"), py::arg("j"), py::arg("i"), py::arg("N"));
    m.def("closed_form_ghost", [](int k, int j, int i, int N) { return coeffs(closed_form_ghost(k, j, i, N)); },
          py::arg("k"), py::arg("j"), py::arg("i"), py::arg("N"));
    m.def("ghost_position_one", [](int k, int j, int N) { return coeffs(ghost_position_one(k, j, N)); },
          py::arg("k"), py::arg("j"), py::arg("N"));
    m.def("triple_product_holds", [](int z, int s, int N) { return jacobi_triple_product_check(z, s, N).equal; },
          py::arg("z_exponent"), py::arg("q_step"), py::arg("N"));

    m.def(
        "iterate_shelves",
        [](int k, int j, int N) {
            ShelfPair p = shelf_from_closed_forms(k, 0, N);
            for (int t = 0; t < j; ++t)
                p = next_shelf(p);
            py::list off, gh;
            for (const auto& s : p.officials)
                off.append(coeffs(s));
            for (const auto& s : p.ghosts)
                gh.append(coeffs(s));
            py::dict d;
            d["officials"] = off;
            d["ghosts"] = gh;
            d["effective_prec"] = p.effective_prec;
            return d;
        },
        py::arg("k"), py::arg("j"), py::arg("N"), "shelf j reached from shelf 0 by the recursions");
    m.def("required_degree", &required_degree, py::arg("k"), py::arg("j_target"), py::arg("window"));
    m.def(
        "valuation",
        [](int k, int j, int i, int N, bool ghost) {
            ValuationReport r = empirical_hypothesis_check(k, j, i, N, ghost);
            py::dict d;
            d["valuation"] = r.valuation ? py::object(py::int_(*r.valuation)) : py::object(py::none());
            d["required"] = r.required;
            d["pass"] = r.pass;
            return d;
        },
        py::arg("k"), py::arg("j"), py::arg("i"), py::arg("N"), py::arg("ghost") = false);

    m.def("matrix_A", [](int k, int j) { return matrix(build_A(k, j)); }, py::arg("k"), py::arg("j"));
    m.def("matrix_B", [](int k, int j) { return matrix(build_B(k, j)); }, py::arg("k"), py::arg("j"));
    m.def("matrix_C", [](int k, int j) { return matrix(build_C(k, j)); }, py::arg("k"), py::arg("j"));
    m.def("matrix_Aprime", [](int k, int j) { return matrix(build_Aprime(k, j)); }, py::arg("k"), py::arg("j"));
    m.def("h_matrix", [](int k, int J, int j) { return matrix(h_by_recursion(k, J, j)); }, py::arg("k"),
          py::arg("J"), py::arg("j"));

    m.def("partition_count_G", [](int k, int i, int J, int n) { return coeffs(gen_fn(g_conditions(k, i, J), n)); },
          py::arg("k"), py::arg("i"), py::arg("J"), py::arg("n_max"));
    m.def("partition_count_ghost",
          [](int k, int i, int J, int n) { return coeffs(gen_fn(ghost_conditions(k, i, J), n)); }, py::arg("k"),
          py::arg("i"), py::arg("J"), py::arg("n_max"));
    m.def("partition_count_identity", [](int k, int i, int n) { return coeffs(gen_fn(bgg_conditions(k, i), n)); },
          py::arg("k"), py::arg("i"), py::arg("n_max"));
    m.def("partition_count_h", [](int k, int i, int l, int j, int J, int n) { return coeffs(h_oracle(k, i, l, j, J, n)); },
          py::arg("k"), py::arg("i"), py::arg("l"), py::arg("j"), py::arg("J"), py::arg("n_max"));
    m.def("partition_count_h12", [](int k, int i, int j, int J, int n) { return coeffs(h12_oracle(k, i, j, J, n)); },
          py::arg("k"), py::arg("i"), py::arg("j"), py::arg("J"), py::arg("n_max"));

    m.def("J", [](int k, int i, int q_prec) { return tri(J_tilde(k, i, q_prec)); }, py::arg("k"), py::arg("i"),
          py::arg("q_prec"));
    m.def("JJ", [](int k, int i, int q_prec) { return tri(J_tilde_ghost(k, i, q_prec)); }, py::arg("k"),
          py::arg("i"), py::arg("q_prec"));
    m.def("overpartition_count",
          [](int k, int i, int n, bool ghost) {
              return tri(overpartition_gen_fn(k, i, n, ghost ? 0 : 1, OverReading::literal));
          },
          py::arg("k"), py::arg("i"), py::arg("n_max"), py::arg("ghost") = false);
    m.def("specialize",
          [](int k, int i, int j, int N, bool ghost) {
              return coeffs(specialize_dictionary(ghost ? J_tilde_ghost(k, i, N) : J_tilde(k, i, N), j, N));
          },
          py::arg("k"), py::arg("i"), py::arg("j"), py::arg("N"), py::arg("ghost") = false,
          "J(k,i) or JJ(k,i) at a = 1/q, x = q^(2j), q -> q^2");

    m.def(
        "run_suite_json",
        [](const std::string& suite, const std::string& k, int degree, const std::string& shelves,
           const std::string& start_shelf, int depth, int nmax, int nmax_over, int axq_degree,
           const std::vector<std::string>& faults) {
            Config c = make_config(k, degree, shelves, start_shelf, depth, nmax, nmax_over, axq_degree, faults);
            Report r;
            {
                py::gil_scoped_release nogil;
                r = run_suite(suite, c);
            }
            return emit_json(r);
        },
        py::arg("suite"), py::arg("k") = "3", py::arg("degree") = 40, py::arg("shelves") = "0..3",
        py::arg("start_shelf") = "0..1", py::arg("depth") = 3, py::arg("nmax") = 20, py::arg("nmax_over") = 14,
        py::arg("axq_degree") = 30, py::arg("faults") = std::vector<std::string>{});
}
