#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fanqec/chebyshev.hpp"
#include "fanqec/cli.hpp"
#include "fanqec/error.hpp"
#include "fanqec/graphs.hpp"
#include "fanqec/qec.hpp"
#include "fanqec/roots.hpp"

namespace py = pybind11;
using namespace fanqec;

namespace {

py::object to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeffs(const Poly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

FamilyTag tag_of(const std::string& name) {
  auto t = parse_family(name);
  if (!t) throw InvalidArgument("unknown family '" + name + "'");
  return *t;
}

py::dict zero_dict(const ZeroCert& z) {
  py::dict d;
  d["value"] = z.value;
  d["lo"] = z.bracket.lo.get_str();
  d["hi"] = z.bracket.hi.get_str();
  d["exact"] = z.exact();
  d["simple"] = z.simple;
  return d;
}

py::dict qec_dict(const QecResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["method"] = std::string(method_name(r.method));
  if (const auto* z = std::get_if<ZeroCert>(&r.certificate)) d["bracket"] = zero_dict(*z);
  if (const auto* e = std::get_if<EigenCert>(&r.certificate)) d["off_norm"] = e->off_norm;
  return d;
}

QecRequest request_of(const std::string& name) {
  auto r = parse_request(name);
  if (!r) throw InvalidArgument("unknown method '" + name + "'");
  return *r;
}

Graph graph_of(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n_vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

PYBIND11_MODULE(_fanqec, m) {
  m.doc() = "Partial Chebyshev polynomials and the QEC of fan graphs";

  py::register_exception<Error>(m, "FanqecError", PyExc_ValueError);

  m.def("poly", [](const std::string& fam, int n) { return coeffs(family(tag_of(fam), n)); },
        py::arg("family"), py::arg("n"), "Ascending integer coefficients of a family member.");
  m.def("families", [] {
    std::vector<std::string> out;
    for (auto t : {FamilyTag::U, FamilyTag::T, FamilyTag::V, FamilyTag::W, FamilyTag::Ue, FamilyTag::Uo,
                   FamilyTag::Ucomp, FamilyTag::UeComp, FamilyTag::UoComp, FamilyTag::S, FamilyTag::Phi}) {
      out.emplace_back(family_name(t));
    }
    return out;
  });

  m.def("identity_suite", [](int max_n) {
    IdentityReport r;
    {
      py::gil_scoped_release nogil;
      r = identity_suite(max_n);
    }
    py::list failures;
    for (const auto& f : r.failures()) failures.append(py::make_tuple(f.identity, f.n));
    py::dict d;
    d["max_n"] = r.max_n;
    d["checked"] = r.checked.size();
    d["failures"] = failures;
    return d;
  }, py::arg("max_n"));

  m.def("beta", &beta, py::arg("n"));
  m.def("gamma", [](int n, double tol) { return zero_dict(gamma(n, tol)); }, py::arg("n"),
        py::arg("tol") = kDefaultRootTol);
  m.def("alpha", &alpha, py::arg("n"), py::arg("tol") = kDefaultRootTol);
  m.def("zeros_of_s", [](int n, double tol) {
    std::vector<double> out;
    for (const auto& z : zeros_of_s(n, tol)) out.push_back(z.value);
    return out;
  }, py::arg("n"), py::arg("tol") = kDefaultRootTol);

  m.def("fan_edges", [](int n) { return fan(n).edges(); }, py::arg("n"));
  m.def("distance_matrix", [](int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    const DistMatrix d = distance_matrix(graph_of(n_vertices, edges));
    std::vector<std::vector<int>> out(d.size(), std::vector<int>(d.size()));
    for (int i = 0; i < d.size(); ++i)
      for (int j = 0; j < d.size(); ++j) out[i][j] = d(i, j);
    return out;
  }, py::arg("n_vertices"), py::arg("edges"));

  m.def("qec_fan", [](int n, const std::string& method, double tol) { return qec_dict(qec_fan(n, request_of(method), tol)); },
        py::arg("n"), py::arg("method") = "auto", py::arg("tol") = kDefaultRootTol);
  m.def("qec_graph", [](int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    return qec_dict(qec_numeric(graph_of(n_vertices, edges)));
  }, py::arg("n_vertices"), py::arg("edges"));
  m.def("tau", &tau, py::arg("n"));
  m.def("sigma", &sigma, py::arg("n"), py::arg("tol") = kDefaultRootTol);
  m.def("key_identity_residual", [](int n, long num, long den) { return key_identity_check(n, Rat(num, den)); },
        py::arg("n"), py::arg("num"), py::arg("den") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"fanqec"};
    full.insert(full.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run_cli(full, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
