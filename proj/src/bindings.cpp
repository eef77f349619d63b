#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fatpoints/cli_util.hpp"

namespace py = pybind11;
using namespace fatpoints;

namespace {

Uple uple_of(const std::vector<long long>& entries) {
  Uple a;
  a.entries = entries;
  return a;
}

// Route structured results through the json module so Python sees plain
// dicts/lists; arbitrary-precision values arrive as decimal strings.
py::object as_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "exact conjectural Hilbert functions of fat point schemes";

  mod.def("binomial",
          [](long long a, long long b) { return binomial(a, b).get_str(); },
          py::arg("a"), py::arg("b"));

  mod.def("f_prime",
          [](long long n, const std::vector<long long>& A, long long m) {
            return f_prime(n, uple_of(A), m).get_str();
          },
          py::arg("n"), py::arg("A"), py::arg("m"));

  mod.def("g",
          [](long long n, const std::vector<long long>& A, long long m) {
            return as_py(to_json(g(n, uple_of(A), m)));
          },
          py::arg("n"), py::arg("A"), py::arg("m"));

  mod.def("g_obstruction_sum",
          [](long long n, const std::vector<long long>& A, long long m) {
            return g_obstruction_sum(n, uple_of(A), m).get_str();
          },
          py::arg("n"), py::arg("A"), py::arg("m"));

  mod.def("g_recursion",
          [](long long n, const std::vector<long long>& A, long long m) {
            return g_recursion(n, uple_of(A), m).get_str();
          },
          py::arg("n"), py::arg("A"), py::arg("m"));

  mod.def("hpts",
          [](long long n, const std::vector<long long>& A, long long m,
             std::uint64_t modulus, std::uint64_t seed, long long trials) {
            return as_py(
                to_json(hpts_generic(n, uple_of(A), m, modulus, seed, trials)));
          },
          py::arg("n"), py::arg("A"), py::arg("m"),
          py::arg("modulus") = kDefaultModulus, py::arg("seed") = 0,
          py::arg("trials") = 3);

  mod.def("duality_residual",
          [](long long n, const std::vector<long long>& A, long long m,
             std::uint64_t modulus, std::uint64_t seed) {
            return duality_residual(n, uple_of(A), m, modulus, seed);
          },
          py::arg("n"), py::arg("A"), py::arg("m"),
          py::arg("modulus") = kDefaultModulus, py::arg("seed") = 0);

  mod.def("ubda",
          [](long long n, const std::vector<long long>& A, long long m,
             std::uint64_t modulus, std::uint64_t seed, long long trials) {
            return as_py(
                to_json(ubda_generic(n, uple_of(A), m, modulus, seed, trials)));
          },
          py::arg("n"), py::arg("A"), py::arg("m"),
          py::arg("modulus") = kDefaultModulus, py::arg("seed") = 0,
          py::arg("trials") = 3);

  mod.def("m_of", &m_of, py::arg("n"), py::arg("k"));

  mod.def("ctr_inequalities",
          [](long long n, long long k, long long m, long long d) {
            CtrFlags fl = ctr_inequalities(n, k, m, d);
            return py::dict(py::arg("max_ok") = fl.max_ok,
                            py::arg("rn1") = fl.rn1, py::arg("rn2") = fl.rn2,
                            py::arg("kn_surrogate") = fl.kn_surrogate);
          },
          py::arg("n"), py::arg("k"), py::arg("m"), py::arg("d"));

  mod.def("k_of",
          [](long long n, long long k_max, bool odd_only) {
            return as_py(to_json(k_of(n, k_max, odd_only)));
          },
          py::arg("n"), py::arg("k_max"), py::arg("odd_only") = false);

  mod.def("scan",
          [](const std::string& mode, long long n, long long dmax,
             long long kmax, long long mmax, bool homogeneous, long long cap,
             std::uint64_t modulus, std::uint64_t seed, long long trials) {
            GridSpec grid;
            grid.n = n;
            grid.dmax = dmax;
            grid.kmax = kmax;
            grid.mmax = mmax;
            grid.homogeneous = homogeneous;
            grid.cap = cap;
            std::vector<ScanRecord> recs =
                mode == "strong" ? strong_scan(grid, modulus, seed, trials)
                                 : weak_scan(grid, modulus, seed, trials);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : recs) arr.push_back(to_json(r));
            return as_py(arr);
          },
          py::arg("mode"), py::arg("n"), py::arg("dmax"), py::arg("kmax"),
          py::arg("mmax"), py::arg("homogeneous") = false,
          py::arg("cap") = 5000, py::arg("modulus") = kDefaultModulus,
          py::arg("seed") = 0, py::arg("trials") = 3);
}
