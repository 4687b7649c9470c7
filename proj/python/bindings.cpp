#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlat/catalog.hpp"
#include "qlat/claims.hpp"
#include "qlat/errors.hpp"
#include "qlat/expr.hpp"
#include "qlat/morphisms.hpp"
#include "qlat/short_vectors.hpp"

namespace py = pybind11;
using namespace qlat;

namespace {

py::object to_py(const Int& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)); }

py::object to_py(const Rat& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(Int(v.get_num())), to_py(Int(v.get_den())));
}

// Accepts int, Fraction, or a "p/q" string.
Rat from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) {
    Rat r(h.cast<std::string>());
    r.canonicalize();
    return r;
  }
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return make_rat(Int(py::str(h.attr("numerator")).cast<std::string>()), Int(py::str(h.attr("denominator")).cast<std::string>()));
  throw py::type_error("expected int, Fraction or 'p/q' string");
}

py::list gram_to_py(const RatMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

Lattice lattice_from_rows(const py::sequence& rows, const std::string& label) {
  const std::size_t n = rows.size();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    py::sequence row = rows[i];
    if (row.size() != n) throw Error(ErrorCode::InvalidFormat, "Gram matrix must be square");
    for (std::size_t j = 0; j < n; ++j) g(i, j) = from_py(row[j]);
  }
  return make_lattice(g, label);
}

SearchOptions search(std::uint64_t budget) { return SearchOptions{budget, true}; }

}  // namespace

PYBIND11_MODULE(_qlat, m) {
  m.doc() = "Exact arithmetic on integral lattices";

  // Plain Python exception types; kept alive for the life of the interpreter.
  static PyObject* base = PyErr_NewException("qlat.Error", PyExc_ValueError, nullptr);
  static PyObject* budget = PyErr_NewException("qlat.BudgetExceeded", base, nullptr);
  static PyObject* syntax = PyErr_NewException("qlat.SyntaxError", base, nullptr);
  static PyObject* nonintegral = PyErr_NewException("qlat.NonIntegralError", base, nullptr);
  m.attr("Error") = py::handle(base);
  m.attr("BudgetExceeded") = py::handle(budget);
  m.attr("SyntaxError") = py::handle(syntax);
  m.attr("NonIntegralError") = py::handle(nonintegral);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NonIntegralError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(nonintegral)(e.what());
      exc.attr("norm") = to_py(e.norm());
      PyErr_SetObject(nonintegral, exc.ptr());
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::BoundTooLargeForBudget:
        case ErrorCode::SearchBudgetExceeded: py::set_error(budget, e.what()); break;
        case ErrorCode::SyntaxError: py::set_error(syntax, e.what()); break;
        default: py::set_error(base, e.what());
      }
    }
  });

  py::class_<Lattice>(m, "Lattice")
      .def(py::init([](const py::sequence& gram, const std::string& label) { return lattice_from_rows(gram, label); }),
           py::arg("gram"), py::arg("label") = "")
      .def_property_readonly("rank", &Lattice::rank)
      .def_property_readonly("gram", [](const Lattice& l) { return gram_to_py(l.gram()); })
      .def_property_readonly("label", &Lattice::label)
      .def("__eq__", &Lattice::operator==)
      .def("__repr__", [](const Lattice& l) { return "Lattice(" + to_string(l.gram()) + ")"; });

  m.def("evaluate", py::overload_cast<std::string_view>(&evaluate), py::arg("expression"));
  m.def("canonical", [](std::string_view text) { return print_expression(parse_expression(text)); },
        py::arg("expression"), "Parse and print an expression in canonical form.");
  m.def("to_json", &lattice_to_json);
  m.def("from_json", &lattice_from_json);

  m.def("discriminant", [](const Lattice& l) { return to_py(discriminant(l)); });
  m.def("scale", [](const Lattice& l) { return to_py(scale(l)); });
  m.def("is_integral", &is_integral);
  m.def("dual", &dual);
  m.def("orthogonal_sum", py::overload_cast<const std::vector<Lattice>&>(&orthogonal_sum), py::arg("parts"));
  m.def("lll_reduced", &lll_reduced);

  m.def("minimum", [](const Lattice& l, std::uint64_t b) { return to_py(minimum(l, {b})); }, py::arg("lattice"),
        py::arg("budget") = 100'000'000);
  m.def("dual_minimum", [](const Lattice& l, std::uint64_t b) { return to_py(dual_minimum(l, {b})); },
        py::arg("lattice"), py::arg("budget") = 100'000'000);
  m.def(
      "dual_minimum_outside",
      [](const Lattice& l, std::uint64_t b) -> py::object {
        auto v = dual_minimum_outside(l, {b});
        return v ? to_py(*v) : py::none();
      },
      py::arg("lattice"), py::arg("budget") = 100'000'000);
  m.def(
      "short_vectors",
      [](const Lattice& l, const py::handle& bound, std::uint64_t b) {
        py::list out;
        for (const auto& v : short_vectors(l, from_py(bound), {b})) out.append(py::make_tuple(v.coords, to_py(v.norm)));
        return out;
      },
      py::arg("lattice"), py::arg("bound"), py::arg("budget") = 100'000'000,
      "One (coords, norm) per +/- pair of nonzero vectors with norm <= bound.");
  m.def("roots", [](const Lattice& l) { return roots(l).size() * 2; }, "Number of norm-2 vectors.");
  m.def("represented_integers",
        [](const Lattice& l, long bound) {
          auto s = represented_integers(l, bound);
          return std::vector<long>(s.begin(), s.end());
        });

  m.def("represents", [](const Lattice& a, const Lattice& b, std::uint64_t n) { return represents(a, b, search(n)); },
        py::arg("source"), py::arg("target"), py::arg("budget") = 100'000'000);
  m.def("primitively_represents",
        [](const Lattice& a, const Lattice& b, std::uint64_t n) { return primitively_represents(a, b, search(n)); },
        py::arg("source"), py::arg("target"), py::arg("budget") = 100'000'000);
  m.def("is_isometric", [](const Lattice& a, const Lattice& b, std::uint64_t n) { return is_isometric(a, b, search(n)); },
        py::arg("a"), py::arg("b"), py::arg("budget") = 100'000'000);
  m.def(
      "isometry",
      [](const Lattice& a, const Lattice& b, std::uint64_t n) -> py::object {
        auto w = isometry(a, b, search(n));
        return w ? py::object(matrix_to_py(w->transform)) : py::none();
      },
      py::arg("a"), py::arg("b"), py::arg("budget") = 100'000'000,
      "Rows give the images of the basis of a in the basis of b, or None.");
  m.def(
      "decompose",
      [](const Lattice& l) {
        std::vector<Lattice> parts;
        for (auto& c : orthogonal_decomposition(l)) parts.push_back(std::move(c.lattice));
        return parts;
      },
      "Indecomposable orthogonal components.");
  m.def("identify", [](const Lattice& l) { return identify(l); });
  m.def(
      "enumerate_lattices",
      [](std::size_t n, long bound) {
        std::vector<Lattice> out;
        for (const auto& f : enumerate_lattices(n, bound)) out.push_back(f.lattice());
        return out;
      },
      py::arg("rank"), py::arg("bound"));

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& s : claim_manifest()) ids.push_back(s.id);
    return ids;
  });
  m.def(
      "run_claims",
      [](const std::string& prefix, unsigned threads) {
        RunOptions opts;
        opts.threads = threads;
        std::vector<ClaimReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_claims(prefix, opts);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["id"] = r.id;
          d["outcome"] = std::string(to_string(r.outcome));
          d["measured"] = r.measured;
          d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::none();
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("prefix") = "", py::arg("threads") = 1);
}
