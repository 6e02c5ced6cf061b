#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibnim/classifiers.hpp"
#include "fibnim/record.hpp"
#include "fibnim/solver.hpp"
#include "fibnim/verify.hpp"
#include "fibnim/word.hpp"

namespace py = pybind11;
using namespace fibnim;

namespace {

// None and "inf" both mean an unbounded first move.
ExtNat to_bound(const py::object& bound) {
    if (bound.is_none()) {
        return kInf;
    }
    if (py::isinstance<py::str>(bound)) {
        return ExtNat::parse(bound.cast<std::string>());
    }
    const auto v = bound.cast<long long>();
    if (v < 0) {
        throw py::value_error("bound must be nonnegative");
    }
    return ExtNat{static_cast<std::uint64_t>(v)};
}

py::object from_ext(const ExtNat& e) {
    if (e.is_inf()) {
        return py::none();
    }
    return py::int_(e.value());
}

Position make_position(std::vector<std::uint64_t> piles, const py::object& bound, int dynamic) {
    return Position::make(std::move(piles), to_bound(bound), dynamic_from_int(dynamic));
}

}  // namespace

PYBIND11_MODULE(_fibnim, m) {
    m.doc() = "Exhaustive solver and closed-form classifiers for Fibonacci nim variants";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_MemoryError);
    py::register_exception<WordRangeError>(m, "WordRangeError", PyExc_ValueError);
    py::register_exception<SigmaRangeError>(m, "SigmaRangeError", PyExc_ValueError);

    py::class_<Move>(m, "Move")
        .def(py::init<std::size_t, std::uint64_t, std::uint64_t>(), py::arg("pile_index"), py::arg("pile_size"),
             py::arg("take"))
        .def_readonly("pile_index", &Move::pile_index)
        .def_readonly("pile_size", &Move::pile_size)
        .def_readonly("take", &Move::take)
        .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
        .def("__repr__", [](const Move& mv) {
            return "Move(pile_index=" + std::to_string(mv.pile_index) + ", pile_size=" + std::to_string(mv.pile_size) +
                   ", take=" + std::to_string(mv.take) + ")";
        });

    py::class_<Solver>(m, "Solver")
        .def(py::init([](std::size_t budget) { return std::make_unique<Solver>(SolverOptions{budget}); }),
             py::arg("memo_budget") = SolverOptions{}.memo_budget)
        .def(
            "outcome",
            [](Solver& s, std::vector<std::uint64_t> piles, const py::object& bound, int dynamic) {
                const auto pos = make_position(std::move(piles), bound, dynamic);
                py::gil_scoped_release release;
                return std::string(to_string(s.outcome(pos)));
            },
            py::arg("piles"), py::arg("bound") = py::none(), py::arg("dynamic") = 2,
            "'N' or 'P'. bound=None means unbounded.")
        .def(
            "winning_moves",
            [](Solver& s, std::vector<std::uint64_t> piles, const py::object& bound, int dynamic) {
                const auto pos = make_position(std::move(piles), bound, dynamic);
                py::gil_scoped_release release;
                return s.winning_moves(pos);
            },
            py::arg("piles"), py::arg("bound") = py::none(), py::arg("dynamic") = 2)
        .def(
            "min_winning_take",
            [](Solver& s, const std::vector<std::uint64_t>& piles, int dynamic) {
                return from_ext(s.min_winning_take(piles, dynamic_from_int(dynamic)));
            },
            py::arg("piles"), py::arg("dynamic") = 2)
        .def(
            "engine_move",
            [](Solver& s, std::vector<std::uint64_t> piles, const py::object& bound, int dynamic) {
                return engine_move(s, make_position(std::move(piles), bound, dynamic));
            },
            py::arg("piles"), py::arg("bound") = py::none(), py::arg("dynamic") = 2)
        .def(
            "record",
            [](Solver& s, std::vector<std::uint64_t> piles, const py::object& bound, int dynamic) {
                OutcomeRecord rec;
                rec.position = make_position(std::move(piles), bound, dynamic);
                rec.outcome = s.outcome(rec.position);
                rec.winning_moves = s.winning_moves(rec.position);
                return to_line(rec);
            },
            py::arg("piles"), py::arg("bound") = py::none(), py::arg("dynamic") = 2,
            "The position's outcome record in line format.")
        .def_property_readonly("memo_size", &Solver::memo_size)
        .def("clear", &Solver::clear);

    m.def("fib", &fib, py::arg("i"));
    m.def("zeckendorf", [](std::uint64_t n) { return zeckendorf(n).terms; }, py::arg("n"),
          "Zeckendorf terms of n, ascending.");
    m.def("z1", [](std::uint64_t n) { return from_ext(z1(n)); }, py::arg("n"), "Smallest Zeckendorf term; None for 0.");
    m.def("beatty_class", [](std::uint64_t n) { return to_string(beatty_class(n)); }, py::arg("n"));

    m.def("sturm_word", [](int level, std::size_t length) { return sturm_word(level).values(length); },
          py::arg("level"), py::arg("length"));
    m.def(
        "sigma",
        [](std::uint64_t mm, std::uint64_t r, std::uint64_t bound) { return sigma(mm, r, bound).members; },
        py::arg("m"), py::arg("r"), py::arg("bound"), "Partial sums up to bound classifying (m, m+k; r).");

    m.def(
        "classify_one_pile",
        [](std::uint64_t n, const py::object& bound) {
            return std::string(to_string(classify_one_pile(n, to_bound(bound)).outcome));
        },
        py::arg("n"), py::arg("bound") = py::none());
    m.def(
        "classify_two_pile",
        [](std::uint64_t mm, std::uint64_t k, std::uint64_t r) {
            const auto v = classify_two_pile_zeck(mm, k, r);
            return py::make_tuple(std::string(to_string(v.outcome)), to_string(v.which.tag));
        },
        py::arg("m"), py::arg("k"), py::arg("r"), "(outcome, case) for the piles (m, m+k).");
    m.def(
        "classify_two_pile_word",
        [](std::uint64_t mm, std::uint64_t k, std::uint64_t r) {
            return std::string(to_string(classify_two_pile_word(mm, k, r)));
        },
        py::arg("m"), py::arg("k"), py::arg("r"));
    m.def(
        "classify_pow2",
        [](const std::vector<std::uint64_t>& piles, const py::object& bound) {
            return std::string(to_string(classify_pow2(piles, to_bound(bound)).outcome));
        },
        py::arg("piles"), py::arg("bound") = py::none());
    m.def(
        "three_four_reply",
        [](std::uint64_t n) {
            const auto v = classify_34n(n);
            return py::make_tuple(to_string(v.beatty), v.move);
        },
        py::arg("n"), "Beatty class of n and the recommended move in (3, 4, n; inf).");

    m.def(
        "complementary_value",
        [](Solver& s, const std::vector<std::uint64_t>& piles, std::uint64_t cap) -> py::object {
            const auto res = complementary_value(s, piles, cap);
            return res.found ? py::object(py::int_(res.value)) : py::object(py::none());
        },
        py::arg("solver"), py::arg("piles"), py::arg("cap"));

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, Solver& s, bool long_run) {
            VerifyOptions opts;
            opts.long_run = long_run;
            SuiteReport rep;
            {
                py::gil_scoped_release release;
                rep = run_suite(name, s, opts);
            }
            py::list checks;
            for (const auto& c : rep.checks) {
                checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed,
                                       py::arg("detail") = c.detail));
            }
            return py::dict(py::arg("suite") = rep.suite, py::arg("passed") = rep.passed(),
                            py::arg("seconds") = rep.seconds, py::arg("checks") = checks);
        },
        py::arg("name"), py::arg("solver"), py::arg("long_run") = false);
}
