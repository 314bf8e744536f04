#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsc/bases.hpp"
#include "qsc/divsym.hpp"
#include "qsc/error.hpp"
#include "qsc/gz.hpp"
#include "qsc/perm.hpp"
#include "qsc/rtword.hpp"
#include "qsc/verify.hpp"

namespace py = pybind11;
using namespace qsc;

namespace {

py::int_ to_py(const Integer& a) { return py::int_(py::module_::import("builtins").attr("int")(a.get_str())); }

py::dict expansion_dict(const std::vector<std::pair<std::string, Integer>>& terms) {
  py::dict d;
  for (const auto& [k, c] : terms) d[py::str(k)] = to_py(c);
  return d;
}

std::string tuple_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

// Entries given as ints, Fractions or "p/q" strings.
RVector rationals(const py::sequence& seq) {
  std::string text;
  for (const auto& item : seq) text += (text.empty() ? "" : ",") + py::str(item).cast<std::string>();
  return parse_rational_vector(text);
}

Poly poly(const std::string& s) { return parse_poly(s); }
Word word(const std::string& s) { return parse_word(s); }
Permutation perm(const std::string& s) { return parse_permutation(s); }

}  // namespace

PYBIND11_MODULE(qsc, m) {
  m.doc() = "Exact quasisymmetric Schubert calculus";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  // Polynomials travel as canonical text.
  m.def("normalize", [](const std::string& f) { return format_poly(poly(f)); });
  m.def("t_op", [](int i, const std::string& f) { return format_poly(t_op(i, poly(f))); });
  m.def("r_op", [](int i, const std::string& f) { return format_poly(r_op(i, poly(f))); });
  m.def("divided_difference", [](int i, const std::string& f) { return format_poly(divided_difference(i, poly(f))); });
  m.def("apply_word", [](const std::string& w, const std::string& f) { return format_poly(apply_word(word(w), poly(f))); },
        py::arg("word"), py::arg("f"));
  m.def("is_quasisymmetric", [](const std::string& f, int n) { return is_quasisymmetric(poly(f), n); });

  m.def("schubert", [](const std::string& w) { return format_poly(schubert(perm(w))); });
  m.def("schubert_expand", [](const std::string& f) {
    std::vector<std::pair<std::string, Integer>> t;
    for (const auto& [w, c] : schubert_expand(poly(f))) t.emplace_back(w.to_string(), c);
    return expansion_dict(t);
  });
  m.def("forest_poly", [](const std::vector<int>& code) {
    return format_poly(forest_poly(IndexedForest::from_code(code)));
  });
  m.def("forest_expand", [](const std::string& f) {
    std::vector<std::pair<std::string, Integer>> t;
    for (const auto& [c, a] : forest_expand(poly(f))) t.emplace_back("c=" + tuple_str(c), a);
    return expansion_dict(t);
  });
  m.def("gessel_coeffs", [](const std::string& f, int n) {
    std::vector<std::pair<std::string, Integer>> t;
    for (const auto& [a, c] : gessel_coeffs(poly(f), n)) t.emplace_back(tuple_str(a), c);
    return expansion_dict(t);
  });

  m.def(
      "ds",
      [](const std::string& f, int n, const std::string& mode) {
        if (mode == "direct") return format_poly(ds_direct(poly(f), n));
        if (mode == "factorized") return format_poly(ds_factorized(poly(f), n));
        throw PreconditionError("mode must be 'direct' or 'factorized'");
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "factorized");
  m.def(
      "qds",
      [](const std::string& f, int n, const std::string& mode) {
        if (mode == "direct") return format_poly(qds_direct(poly(f), n));
        if (mode == "factorized") return format_poly(qds_factorized(poly(f), n));
        throw PreconditionError("mode must be 'direct' or 'factorized'");
      },
      py::arg("f"), py::arg("n"), py::arg("mode") = "factorized");

  m.def("lr_coeff", [](const std::string& u, const std::string& w, const std::string& v) {
    return to_py(lr_coeff(perm(u), perm(w), perm(v)));
  });
  m.def("lr_via_word", [](const std::string& omega, const std::string& w) { return to_py(lr_via_word(word(omega), perm(w))); });
  m.def("ins", [](int i, const std::string& w) { return ins(i, perm(w)).to_string(); });

  m.def("uv_of", [](const std::string& omega) {
    Word w = word(omega);
    require_rtseq(w, static_cast<int>(w.size()));
    auto [u, v] = uv_of(w);
    int n = static_cast<int>(w.size());
    return py::make_tuple(u.to_string(n), v.to_string(n));
  });
  m.def("trim_set", [](const std::string& forest, int n) {
    std::vector<std::string> out;
    for (const auto& w : trim_set(parse_nested_forest(forest), n)) out.push_back(format_word(w));
    return out;
  });
  m.def("nested_forest_of", [](const std::string& omega) { return nested_forest_of(word(omega)).to_string(); });
  m.def("star_matrix", [](const std::string& omega) { return star_matrix(word(omega)).rows(); });
  m.def("hhmp_locate", [](const py::sequence& lambda, const py::sequence& point) {
    return format_word(hhmp_locate(rationals(point), rationals(lambda)));
  });

  m.def(
      "verify",
      [](const std::string& suite, int max_n, std::uint64_t seed) {
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(suite, VerifyOptions{max_n, seed});
        }
        py::dict d;
        d["suite"] = r.suite;
        d["passed"] = r.passed;
        d["checks"] = r.checks;
        d["counterexample"] = r.counterexample;
        return d;
      },
      py::arg("suite"), py::arg("max_n") = 0, py::arg("seed") = 7);
}
