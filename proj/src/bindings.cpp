#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "wheelzeta/combinatorics.hpp"
#include "wheelzeta/eir_conformal.hpp"
#include "wheelzeta/errors.hpp"
#include "wheelzeta/numeric_oracle.hpp"
#include "wheelzeta/residue_engine.hpp"
#include "wheelzeta/special_functions.hpp"
#include "wheelzeta/verification.hpp"
#include "wheelzeta/version.hpp"

namespace py = pybind11;
using namespace wheelzeta;

namespace {

py::int_ to_py(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
  static py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(BigCount(boost::multiprecision::numerator(v))),
                  to_py(BigCount(boost::multiprecision::denominator(v))));
}

Permutation as_permutation(const std::vector<int>& entries) {
  return Permutation(entries);
}

py::dict eir_to_dict(const EIRTriple& chi) {
  py::dict d;
  d["d"] = to_py(chi.d);
  d["j1"] = to_py(chi.j1);
  d["j2"] = to_py(chi.j2);
  d["twist"] = to_py(twist(chi));
  d["gci"] = is_gci(chi);
  d["label"] = to_string(chi);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "wheel-graph period engine: exact sector sweep, censuses, "
            "residues, numeric oracles and conformal representation labels";
  m.attr("__version__") = kVersion;

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError",
                                         PyExc_ArithmeticError);

  // combinatorics
  m.def("catalan", [](int L) { return to_py(catalan(L)); }, py::arg("L"));
  m.def("factorial", &factorial_u64, py::arg("L"));
  m.def(
      "permutations",
      [](int L) {
        std::vector<std::vector<int>> out;
        enumerate_permutations(L, [&](const Permutation& s) {
          out.push_back(s.entries());
          return true;
        });
        return out;
      },
      py::arg("L"), "all of S_L in lexicographic order (use small L)");
  m.def(
      "contains_forbidden_pattern",
      [](const std::vector<int>& sigma) {
        return contains_forbidden_pattern(as_permutation(sigma));
      },
      py::arg("sigma"));
  m.def(
      "reflect",
      [](const std::vector<int>& sigma) {
        return reflect(as_permutation(sigma)).entries();
      },
      py::arg("sigma"));
  m.def(
      "s1_generate",
      [](int L) {
        std::vector<std::vector<int>> out;
        for (const auto& s : s1_generate(L)) out.push_back(s.entries());
        return out;
      },
      py::arg("L"));
  m.def(
      "min_class_representative",
      [](int L) { return min_class_representative(L).entries(); },
      py::arg("L"));

  // residue engine
  m.def(
      "exponent_slopes",
      [](const std::vector<int>& sigma) {
        return exponent_slopes(as_permutation(sigma));
      },
      py::arg("sigma"));
  m.def(
      "n_sigma",
      [](const std::vector<int>& sigma) {
        const SectorEvaluation e = evaluate_sector(as_permutation(sigma));
        py::dict d;
        d["sigma"] = e.sigma.entries();
        d["slopes"] = e.slopes;
        d["divisors"] = e.divisors;
        d["n_sigma"] = to_py(e.n_sigma);
        return d;
      },
      py::arg("sigma"),
      "exact sector evaluation: I_sigma = 2 zeta(2L-1) / n_sigma");
  m.def(
      "class_table",
      [](int L, int workers) {
        const ClassTable t = class_table(L, workers);
        py::dict d;
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict row;
          row["n_s"] = r.n_s;
          row["size"] = to_py(r.size);
          row["N"] = to_py(r.quotient);
          row["avoiders"] = to_py(r.avoiders);
          rows.append(row);
        }
        d["L"] = t.L;
        d["rows"] = rows;
        d["catalan"] = to_py(t.catalan_number);
        d["sum_check"] = t.sum_check;
        return d;
      },
      py::arg("L"), py::arg("workers") = 0);
  m.def(
      "closed_form_N",
      [](int L, std::uint64_t n_s) -> py::object {
        const auto v = closed_form_N(L, n_s);
        if (!v) return py::none();
        return to_py(*v);
      },
      py::arg("L"), py::arg("n_s"));
  m.def(
      "min_fraction",
      [](int L) {
        const MinFraction mf = min_fraction(L);
        return py::make_tuple(to_py(mf.n_max), to_py(mf.multiplicity));
      },
      py::arg("L"));
  m.def(
      "wheel_residue",
      [](int n, bool cross_check) {
        const WheelResidue r = wheel_residue(n, cross_check);
        py::dict d;
        d["spokes"] = r.spokes;
        d["coefficient"] = to_py(r.coefficient);
        d["pi_power"] = r.pi_power;
        d["zeta_argument"] = r.zeta_argument;
        d["numeric"] = r.numeric;
        return d;
      },
      py::arg("n"), py::arg("cross_check") = true);

  // special functions
  m.def("gegenbauer", &gegenbauer, py::arg("m"), py::arg("lam"), py::arg("x"));
  m.def(
      "polylog",
      [](int k, double xi, double rel_tol, std::int64_t max_terms) {
        return polylog(k, xi, PrecisionBudget{rel_tol, max_terms});
      },
      py::arg("k"), py::arg("xi"), py::arg("rel_tol") = 1e-12,
      py::arg("max_terms") = 10'000'000);
  m.def(
      "zeta_odd",
      [](int k) { return zeta_odd(k); },
      py::arg("k"));
  m.def(
      "binomial",
      [](long long a, long long b) { return to_py(binomial(a, b)); },
      py::arg("a"), py::arg("b"));

  // numeric oracles
  m.def(
      "radial_kernel",
      [](const std::vector<double>& radii, int M) {
        return radial_kernel(radii, M);
      },
      py::arg("radii"), py::arg("M"));
  m.def(
      "quad_sector_integral",
      [](const std::vector<int>& sigma, double rel_tol, int terms) {
        return quad_sector_integral(as_permutation(sigma), rel_tol, terms);
      },
      py::arg("sigma"), py::arg("rel_tol") = 1e-9, py::arg("terms") = 0);
  m.def(
      "mc_full_residue",
      [](std::int64_t samples, std::uint64_t seed, int workers) {
        const McEstimate e = mc_full_residue(samples, seed, workers);
        py::dict d;
        d["value"] = e.value;
        d["stderr"] = e.stderr_value;
        d["samples"] = e.samples;
        d["seed"] = e.seed;
        return d;
      },
      py::arg("samples"), py::arg("seed"), py::arg("workers") = 0);
  m.def("broadhurst_coeff", &broadhurst_coeff, py::arg("n"), py::arg("L"),
        py::arg("r"));
  m.def("pl_series_residue", &pl_series_residue, py::arg("L"),
        py::arg("terms"));

  // conformal representation labels
  m.def(
      "twist",
      [](const std::string& d, const std::string& j1, const std::string& j2) {
        return to_py(twist(EIRTriple(Rational(d), Rational(j1), Rational(j2))));
      },
      py::arg("d"), py::arg("j1"), py::arg("j2"),
      "twist of [d; j1, j2]; arguments are rational strings like '3/2'");
  m.def(
      "dual",
      [](const std::string& d, const std::string& j1, const std::string& j2) {
        return eir_to_dict(
            dual(EIRTriple(Rational(d), Rational(j1), Rational(j2))));
      },
      py::arg("d"), py::arg("j1"), py::arg("j2"));
  m.def(
      "sextuplet",
      [](int nu, int ell, int n) {
        const Sextuplet s = sextuplet(nu, ell, n);
        py::dict d;
        d["nu"] = s.nu;
        d["ell"] = s.ell;
        d["n"] = s.n_label;
        d["chi_minus_nu"] = eir_to_dict(s.chi_minus_nu);
        d["chi_zero"] = eir_to_dict(s.chi_zero);
        d["chi_n"] = eir_to_dict(s.chi_n);
        d["chi_minus_nu_dual"] = eir_to_dict(s.chi_minus_nu_dual);
        d["chi_zero_dual"] = eir_to_dict(s.chi_zero_dual);
        d["chi_n_dual"] = eir_to_dict(s.chi_n_dual);
        d["intertwiner_orders"] = s.intertwiner_orders;
        py::list cs;
        for (const auto& c : s.casimirs) cs.append(to_py(c));
        d["casimirs"] = cs;
        return d;
      },
      py::arg("nu"), py::arg("ell"), py::arg("n"));
  m.def(
      "casimirs",
      [](int nu, int ell, int n) {
        const auto c = casimirs(nu, ell, n);
        return py::make_tuple(to_py(c[0]), to_py(c[1]), to_py(c[2]));
      },
      py::arg("nu"), py::arg("ell"), py::arg("n"));

  // verification suites
  m.def(
      "verify",
      [](int L_max, const std::string& level, std::int64_t samples,
         std::uint64_t seed, int workers) {
        const auto checks = (level == "full")
                                ? verify_full(L_max, samples, seed, workers)
                                : verify_fast(L_max, workers);
        py::list out;
        for (const auto& c : checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("L_max") = 6, py::arg("level") = "fast",
      py::arg("samples") = 1'000'000, py::arg("seed") = 12345,
      py::arg("workers") = 0);
}
