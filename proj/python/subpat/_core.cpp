#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subpat/bases.hpp"
#include "subpat/classes.hpp"
#include "subpat/containment.hpp"
#include "subpat/errors.hpp"
#include "subpat/polygeo.hpp"
#include "subpat/verify.hpp"
#include "subpat/wilfkit.hpp"

namespace py = pybind11;
using namespace subpat;

namespace {

GroundSet ground(const std::string& name) {
  const auto g = parse_ground_set(name);
  if (!g) throw std::invalid_argument("unknown ground set: " + name);
  return *g;
}

// Python side passes matrices as lists of '0'/'1' strings, top row first.
BinaryMatrix to_matrix(const std::vector<std::string>& rows) { return BinaryMatrix::from_rows(rows); }

std::vector<std::string> to_rows(const BinaryMatrix& m) {
  std::vector<std::string> out;
  for (int r = m.rows(); r >= 1; --r) {
    std::string s;
    for (int c = 1; c <= m.cols(); ++c) s += m.at(r, c) ? '1' : '0';
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<std::string>> to_rows(const std::vector<BinaryMatrix>& ms) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : ms) out.push_back(to_rows(m));
  return out;
}

ClassSpec make_spec(const std::string& g, const std::vector<std::vector<std::string>>& avoid) {
  std::vector<BinaryMatrix> ms;
  for (const auto& a : avoid) ms.push_back(to_matrix(a));
  return ClassSpec(ground(g), std::move(ms));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "submatrix pattern classes";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<WrongGroundSet>(m, "WrongGroundSet", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotAPermutationMatrix>(m, "NotAPermutationMatrix", PyExc_ValueError);

  m.def("contains", [](const std::vector<std::string>& host, const std::vector<std::string>& pattern) {
    return contains(to_matrix(host), to_matrix(pattern));
  }, py::arg("host"), py::arg("pattern"));

  m.def("perm_matrix", [](const std::string& p) { return to_rows(permutation_to_matrix(Permutation::parse(p))); },
        py::arg("perm"));

  m.def("in_ground_set", [](const std::string& g, const std::vector<std::string>& x) {
    return in_ground_set(ground(g), to_matrix(x));
  }, py::arg("ground"), py::arg("matrix"));

  m.def("avoids", [](const std::string& g, const std::vector<std::vector<std::string>>& avoid,
                     const std::vector<std::string>& x) { return avoids(make_spec(g, avoid), to_matrix(x)); },
        py::arg("ground"), py::arg("avoid"), py::arg("matrix"));

  m.def("members", [](const std::string& g, const std::vector<std::vector<std::string>>& avoid, int rank,
                      int shards) { return to_rows(members(make_spec(g, avoid), rank, shards)); },
        py::arg("ground"), py::arg("avoid"), py::arg("rank"), py::arg("shards") = 1);

  m.def("count_sequence", [](const std::string& g, const std::vector<std::vector<std::string>>& avoid, int rmax,
                             int shards) {
    CountOptions opts;
    opts.shards = shards;
    py::gil_scoped_release release;
    return count_sequence(make_spec(g, avoid), rmax, opts).terms;
  }, py::arg("ground"), py::arg("avoid"), py::arg("rmax"), py::arg("shards") = 1);

  m.def("p_basis", [](const std::string& g, const std::vector<std::vector<std::string>>& avoid, int rmax) {
    const auto pb = p_basis(make_spec(g, avoid), rmax);
    return py::make_tuple(to_rows(pb.members.members()), pb.complete_upto);
  }, py::arg("ground"), py::arg("avoid"), py::arg("rmax"));

  m.def("canonical_m_basis", [](const std::string& g, const std::vector<std::vector<std::string>>& avoid, int dmax,
                                int budget) {
    const auto spec = make_spec(g, avoid);
    const auto cb = canonical_m_basis(spec, dmax > 0 ? dmax : default_dmax(spec.ground),
                                      budget > 0 ? budget : default_plus_budget(spec.ground));
    return py::make_tuple(to_rows(cb.members.members()), cb.exact);
  }, py::arg("ground"), py::arg("avoid"), py::arg("dmax") = 0, py::arg("budget") = 0);

  m.def("minimal_perms_containing", [](const std::vector<std::string>& x) {
    std::vector<std::string> out;
    for (const auto& p : minimal_perms_containing(to_matrix(x))) out.push_back(p.to_compact());
    return out;
  }, py::arg("matrix"));

  m.def("is_convex", [](const std::vector<std::string>& x) { return is_convex(to_matrix(x)); });
  m.def("is_directed", [](const std::vector<std::string>& x) { return is_directed(to_matrix(x)); });
  m.def("is_parallelogram", [](const std::vector<std::string>& x) { return is_parallelogram(to_matrix(x)); });
  m.def("convexity_degree", [](const std::vector<std::string>& x) { return convexity_degree(to_matrix(x)); });
  m.def("is_unique_for_projections",
        [](const std::vector<std::string>& x) { return is_unique_for_projections(to_matrix(x)); });

  m.def("border", [](const std::string& tau, const std::string& side) {
    const auto s = parse_border_side(side);
    if (!s) throw std::invalid_argument("unknown side: " + side);
    return to_rows(border(Permutation::parse(tau), *s));
  }, py::arg("tau"), py::arg("side"));

  m.def("suite_names", &suite_names);
  m.def("run_suite", [](const std::string& name, int max_rank, int max_size) {
    SuiteOptions opts;
    opts.max_rank = max_rank;
    opts.max_size = max_size;
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, opts);
    }
    return py::make_tuple(r.pass(), r.to_text());
  }, py::arg("name"), py::arg("max_rank") = 0, py::arg("max_size") = 0);
}
