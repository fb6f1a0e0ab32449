#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wrank/errors.hpp"
#include "wrank/incidence.hpp"
#include "wrank/rank_formulas.hpp"
#include "wrank/smith.hpp"
#include "wrank/specht.hpp"

namespace py = pybind11;
using namespace wrank;

namespace {

py::int_ to_py(const BigInt& x) { return py::int_(py::module_::import("builtins").attr("int")(x.str())); }

py::list to_py(const std::vector<BigInt>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(to_py(x));
  return out;
}

std::vector<int> zero_based(std::vector<int> xs) {
  for (int& x : xs) --x;
  return xs;
}

std::vector<int> one_based(std::vector<int> xs) {
  for (int& x : xs) ++x;
  return xs;
}

FieldSpec field(std::uint64_t c) { return FieldSpec::from_characteristic(c); }

py::dict spec_dict(const IncidenceSpec& s) {
  py::dict d;
  d["m"] = s.m;
  d["k"] = s.k;
  d["n"] = s.n;
  d["i"] = s.i;
  return d;
}

py::object layers_tuple(const LayerDims& l) { return py::make_tuple(l.l0, l.l1, l.l2); }

}  // namespace

PYBIND11_MODULE(_wrank, mod) {
  mod.doc() = "Ranks of subset-intersection matrices over Q and GF(p)";
  py::register_exception<SizeCapError>(mod, "SizeCapError", PyExc_ValueError);

  mod.def("binomial", [](std::int64_t n, std::int64_t k) { return to_py(binomial(n, k)); }, py::arg("n"), py::arg("k"));
  mod.def(
      "subset_rank",
      [](std::vector<int> elements, int m) { return subset_rank(KSubset(zero_based(std::move(elements)), m)); },
      py::arg("elements"), py::arg("m"), "Colex rank of a 1-based subset of {1..m}.");
  mod.def(
      "subset_unrank", [](std::uint64_t r, int k, int m) { return one_based(subset_unrank(r, k, m).elements()); },
      py::arg("rank"), py::arg("k"), py::arg("m"));

  mod.def(
      "predicted_rank", [](int m, int n, std::uint64_t c) { return predicted_rank(m, n, field(c)); }, py::arg("m"),
      py::arg("n"), py::arg("char") = 0);
  mod.def(
      "rank_case", [](int m, int n, std::uint64_t c) { return to_string(rank_case(m, n, field(c))); }, py::arg("m"),
      py::arg("n"), py::arg("char") = 0);
  mod.def(
      "rank_lower_bound",
      [](int m, int k, int n, int i, std::uint64_t c) { return to_py(rank_lower_bound(m, k, n, i, field(c))); },
      py::arg("m"), py::arg("k"), py::arg("n"), py::arg("i"), py::arg("char") = 0);

  mod.def(
      "incidence_rank",
      [](int m, int n, int k, int i, std::uint64_t c, std::uint64_t seed) {
        RankOptions options;
        options.seed = seed;
        return incidence_rank({m, k, n, i}, field(c), options);
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 2, py::arg("i") = 1, py::arg("char") = 0,
      py::arg("seed") = kDefaultSeed, py::call_guard<py::gil_scoped_release>());
  mod.def(
      "rank_report",
      [](int m, int n, int k, int i, std::uint64_t c, bool layers, std::uint64_t seed) {
        RankOptions options;
        options.seed = seed;
        options.with_layers = layers;
        RankReport r;
        {
          py::gil_scoped_release release;
          r = compute_rank_report({m, k, n, i}, field(c), options);
        }
        py::dict d;
        d["spec"] = spec_dict(r.spec);
        d["normalized"] = spec_dict(r.normalized);
        d["normalization"] = r.normalization;
        d["field"] = r.field.characteristic();
        d["computed_rank"] = r.computed_rank;
        d["predicted_rank"] = r.predicted_rank ? py::cast(*r.predicted_rank) : py::none();
        d["lower_bound"] = r.lower_bound ? py::object(to_py(*r.lower_bound)) : py::none();
        d["layers"] = r.layers ? layers_tuple(*r.layers) : py::none();
        d["verdict"] = to_string(r.verdict);
        d["elapsed_ms"] = r.elapsed_ms;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 2, py::arg("i") = 1, py::arg("char") = 0, py::arg("layers") = false,
      py::arg("seed") = kDefaultSeed);
  mod.def(
      "incidence_matrix",
      [](int m, int n, int k, int i) {
        const IntMatrix a = incidence_matrix({m, k, n, i});
        std::vector<std::vector<int>> out(a.rows(), std::vector<int>(a.cols()));
        for (std::size_t r = 0; r < a.rows(); ++r) {
          for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = static_cast<int>(a(r, c));
        }
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 2, py::arg("i") = 1, "Dense 0/1 rows, both axes in colex order.");

  mod.def(
      "smith_normal_form",
      [](const std::vector<std::vector<py::int_>>& rows, std::size_t cap) {
        const std::size_t cols = rows.empty() ? 0 : rows[0].size();
        IntMatrix a(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
          if (rows[r].size() != cols) throw StructuralError("ragged matrix");
          for (std::size_t c = 0; c < cols; ++c) a(r, c) = BigInt(std::string(py::str(py::handle(rows[r][c]))));
        }
        return to_py(smith_normal_form(std::move(a), cap).diagonal);
      },
      py::arg("matrix"), py::arg("cap") = kDefaultSnfCap);
  mod.def(
      "incidence_snf",
      [](int m, int n, int k, int i, std::size_t cap) {
        return to_py(smith_normal_form(incidence_matrix({m, k, n, i}), cap).diagonal);
      },
      py::arg("m"), py::arg("n"), py::arg("k") = 2, py::arg("i") = 1, py::arg("cap") = kDefaultSnfCap);

  mod.def("specht_dim", [](int m, int j) { return to_py(specht_dim(m, j)); }, py::arg("m"), py::arg("j"));
  mod.def(
      "lemma_coefficient", [](int m, int n, int k, int i, int j) { return to_py(lemma_coefficient(m, n, k, i, j)); },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("i"), py::arg("j"));
  mod.def(
      "verify_lemma_image",
      [](int k, int i, int j, std::vector<int> first_row, std::vector<int> second_row) {
        const int m = static_cast<int>(first_row.size() + second_row.size());
        const int n = static_cast<int>(second_row.size());
        const TwoRowTableau t(m, zero_based(std::move(first_row)), zero_based(std::move(second_row)));
        return verify_lemma_image(m, n, k, i, j, t, FieldSpec::rational()).match;
      },
      py::arg("k"), py::arg("i"), py::arg("j"), py::arg("first_row"), py::arg("second_row"),
      "Rows are 1-based; m and n are read off the tableau.");
  mod.def(
      "james_multiplicity", [](int m, std::uint64_t p, int i, int j) { return james_multiplicity(m, p, i, j); },
      py::arg("m"), py::arg("p"), py::arg("i_top"), py::arg("j_factor"));
  mod.def(
      "layer_dims",
      [](int m, int n, std::uint64_t c, int cap) {
        return layers_tuple(layer_dims(normalize_spec({m, 2, n, 1}).spec, field(c), cap));
      },
      py::arg("m"), py::arg("n"), py::arg("char") = 0, py::arg("cap") = kDefaultLayerCap);

  mod.def(
      "diagonal_form_compare",
      [](int m, int n, std::size_t cap) {
        const DiagonalComparison cmp = diagonal_form_compare(m, n, cap);
        py::dict d;
        d["m"] = cmp.m;
        d["n"] = cmp.n;
        d["candidate"] = to_py(cmp.candidate);
        d["snf"] = to_py(cmp.snf);
        d["multisets_equal"] = cmp.multisets_equal;
        d["equivalent"] = cmp.equivalent;
        py::list primes;
        for (const auto& p : cmp.primes) {
          py::dict e;
          e["p"] = p.p;
          e["candidate_units"] = p.candidate_units;
          e["snf_p_rank"] = p.snf_p_rank;
          e["streaming_rank"] = p.streaming_rank;
          primes.append(e);
        }
        d["primes"] = primes;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("cap") = kDefaultSnfCap);
}
