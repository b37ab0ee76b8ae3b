/*
  Python bindings for the core operations: root systems, Weyl-group
  combinatorics, Kazhdan-Lusztig polynomials and Jordan-Hoelder series.

  Subsets of simple roots cross the boundary as sorted lists of 1-based
  indices, words as lists of 1-based letters, weights as lists of integer
  fundamental coordinates.
*/

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steinberg/cache.hpp"
#include "steinberg/render.hpp"

namespace py = pybind11;
using namespace steinberg;

namespace {

// pybind11 holders cannot be shared_ptr<const T>; the binding layer holds
// root systems non-const (the class API is entirely const anyway).
std::shared_ptr<RootSystem> unconst(const RootSystemPtr& rs) {
  return std::const_pointer_cast<RootSystem>(rs);
}

SimpleSubset subset_arg(const std::vector<int>& indices, const RootSystemPtr& rs) {
  return SimpleSubset::of(indices, rs->rank());
}

Weight weight_arg(const std::optional<std::vector<Int>>& coords, const RootSystemPtr& rs) {
  if (!coords) return zero_weight(*rs);
  if (static_cast<int>(coords->size()) != rs->rank())
    throw ValidationError("weight must have one coordinate per simple root");
  return Weight{*coords};
}

std::string factor_repr(const JHFactor& f) {
  return "Factor(w=" + render_word(to_word(f.w)) + ", J=" + render_subset(f.J) +
         ", mult=" + std::to_string(f.mult) + ")";
}

}  // namespace

PYBIND11_MODULE(_steinberg, m) {
  m.doc() = "Jordan-Hoelder factors of locally analytic Steinberg representations";

  // translators run newest-first: register the base before the leaves
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NotDominantError>(m, "NotDominantError", PyExc_ValueError);
  py::register_exception<NotMinimalRepresentativeError>(m, "NotMinimalRepresentativeError",
                                                        PyExc_ValueError);
  py::register_exception<SizeGuardExceededError>(m, "SizeGuardExceededError", PyExc_RuntimeError);
  py::register_exception<CoefficientOverflowError>(m, "CoefficientOverflowError",
                                                   PyExc_OverflowError);
  py::register_exception<InternalInconsistencyError>(m, "InternalInconsistencyError",
                                                     PyExc_RuntimeError);

  py::class_<RootSystem, std::shared_ptr<RootSystem>>(m, "RootSystem")
      .def_property_readonly("type", [](const RootSystem& rs) { return rs.type().to_string(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("rho", [](const RootSystem& rs) { return rs.rho().coords; })
      .def_property_readonly("positive_roots",
                             [](const RootSystem& rs) { return rs.positive_roots(); })
      .def_property_readonly("cartan_matrix",
                             [](const RootSystem& rs) {
                               std::vector<std::vector<int>> rows;
                               for (int i = 0; i < rs.rank(); ++i) {
                                 std::vector<int> row;
                                 for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
                                 rows.push_back(std::move(row));
                               }
                               return rows;
                             })
      .def("__repr__",
           [](const RootSystem& rs) { return "RootSystem(" + rs.type().to_string() + ")"; });

  m.def("root_system",
        [](const std::string& type) { return unconst(build_root_system(type)); }, py::arg("type"),
        "Build the root system of a Cartan type such as 'A3'.");

  py::class_<WeylElem>(m, "WeylElem")
      .def_property_readonly("length", &WeylElem::length)
      .def_property_readonly("word", [](const WeylElem& w) { return to_word(w); })
      .def_property_readonly("root_system",
                             [](const WeylElem& w) { return unconst(w.root_system()); })
      .def("inverse", [](const WeylElem& w) { return inverse(w); })
      .def("is_identity", &WeylElem::is_identity)
      .def(
          "__mul__", [](const WeylElem& a, const WeylElem& b) { return multiply(a, b); },
          py::is_operator())
      .def("__eq__", [](const WeylElem& a, const WeylElem& b) { return a == b; })
      .def("__hash__", &WeylElem::hash)
      .def("__repr__", [](const WeylElem& w) { return render_word(to_word(w)); });

  m.def("identity", &WeylElem::identity, py::arg("rs"));
  m.def("simple_reflection", &WeylElem::simple_reflection, py::arg("rs"), py::arg("i"));
  m.def("from_word", &from_word, py::arg("rs"), py::arg("word"));
  m.def("left_descents", [](const WeylElem& w) { return left_descents(w).indices(); });
  m.def("support", [](const WeylElem& w) { return support(w).indices(); });
  m.def("i_max", [](const WeylElem& w) { return i_max(w).indices(); });
  m.def("bruhat_leq", &bruhat_leq, py::arg("x"), py::arg("y"));
  m.def("dot_action",
        [](const WeylElem& w, const std::vector<Int>& lambda) {
          return dot_action(w, Weight{lambda}).coords;
        },
        py::arg("w"), py::arg("lam"));
  m.def("is_dominant",
        [](const RootSystemPtr& rs, const std::vector<Int>& lambda,
           const std::optional<std::vector<int>>& indices) {
          Weight w{lambda};
          if (indices) return is_dominant(*rs, w, *indices);
          return is_dominant(*rs, w);
        },
        py::arg("rs"), py::arg("lam"), py::arg("indices") = std::nullopt);

  m.def("enumerate_group",
        [](const RootSystemPtr& rs) { return enumerate_group(rs); }, py::arg("rs"));
  m.def("min_coset_reps",
        [](const RootSystemPtr& rs, const std::vector<int>& I) {
          return min_coset_reps(rs, subset_arg(I, rs));
        },
        py::arg("rs"), py::arg("I"));
  m.def("enumerate_parabolic",
        [](const RootSystemPtr& rs, const std::vector<int>& I) {
          return enumerate_parabolic(rs, subset_arg(I, rs));
        },
        py::arg("rs"), py::arg("I"));
  m.def("longest_element",
        [](const RootSystemPtr& rs, const std::vector<int>& I) {
          return longest_element(rs, subset_arg(I, rs));
        },
        py::arg("rs"), py::arg("I"));
  m.def("coxeter_elements",
        [](const RootSystemPtr& rs, const std::vector<int>& I) {
          return coxeter_elements(rs, subset_arg(I, rs));
        },
        py::arg("rs"), py::arg("I"));
  m.def("parabolic_class_count",
        [](const RootSystemPtr& rs, const std::vector<int>& I) {
          return parabolic_class_count(rs, subset_arg(I, rs));
        },
        py::arg("rs"), py::arg("I"));

  py::class_<KLStore>(m, "KLStore")
      .def(py::init([](const RootSystemPtr& rs) { return KLStore(rs); }), py::arg("rs"))
      .def_property_readonly("entries", &KLStore::entries)
      .def_property_readonly("hits", &KLStore::hits)
      .def_property_readonly("root_system",
                             [](const KLStore& s) { return unconst(s.root_system()); });

  m.def("kl_polynomial",
        [](const WeylElem& x, const WeylElem& y, KLStore& store) {
          return kl_polynomial(x, y, store).coeffs();
        },
        py::arg("x"), py::arg("y"), py::arg("store"),
        "Coefficients of P_{x,y}, ascending degree; [] when x is not below y.");
  m.def("mu", &mu, py::arg("x"), py::arg("y"), py::arg("store"));
  m.def("verma_multiplicity", &verma_multiplicity, py::arg("x"), py::arg("y"), py::arg("store"));
  m.def("parabolic_verma_multiplicity",
        [](const std::vector<int>& K, const WeylElem& w, const WeylElem& y, KLStore& store) {
          return parabolic_verma_multiplicity(subset_arg(K, w.root_system()), w, y, store);
        },
        py::arg("K"), py::arg("w"), py::arg("y"), py::arg("store"));

  py::class_<JHFactor>(m, "Factor")
      .def_property_readonly("w", [](const JHFactor& f) { return f.w; })
      .def_property_readonly("I", [](const JHFactor& f) { return f.I.indices(); })
      .def_property_readonly("J", [](const JHFactor& f) { return f.J.indices(); })
      .def_property_readonly("highest_weight",
                             [](const JHFactor& f) { return f.highest_weight.coords; })
      .def_property_readonly("smooth_part",
                             [](const JHFactor& f) { return smooth_part_symbol(f.I, f.J); })
      .def_readonly("mult", &JHFactor::mult)
      .def("__repr__", &factor_repr);

  py::class_<FactorMultiset>(m, "FactorMultiset")
      .def_property_readonly("factors", &FactorMultiset::factors)
      .def_property_readonly("length", &FactorMultiset::length)
      .def_property_readonly("distinct", &FactorMultiset::distinct)
      .def("__eq__",
           [](const FactorMultiset& a, const FactorMultiset& b) { return a == b; })
      .def("__len__", &FactorMultiset::distinct)
      .def("__iter__",
           [](const FactorMultiset& m) {
             return py::make_iterator(m.factors().begin(), m.factors().end());
           },
           py::keep_alive<0, 1>())
      .def("__repr__", [](const FactorMultiset& m) {
        return "FactorMultiset(distinct=" + std::to_string(m.distinct()) +
               ", length=" + std::to_string(m.length()) + ")";
      });

  m.def("steinberg_multiplicity",
        [](const WeylElem& w, const std::vector<int>& J, KLStore& store) {
          return steinberg_multiplicity(w, subset_arg(J, w.root_system()), store);
        },
        py::arg("w"), py::arg("J"), py::arg("store"));
  m.def("jh_steinberg",
        [](const RootSystemPtr& rs, const std::optional<std::vector<Int>>& lambda,
           std::optional<std::reference_wrapper<KLStore>> store) {
          if (store) return jh_steinberg(rs, weight_arg(lambda, rs), store->get());
          KLStore local(rs);
          return jh_steinberg(rs, weight_arg(lambda, rs), local);
        },
        py::arg("rs"), py::arg("lam") = std::nullopt, py::arg("store") = std::nullopt);
  m.def("jh_induced",
        [](const std::vector<int>& K, const WeylElem& w,
           const std::optional<std::vector<Int>>& lambda,
           std::optional<std::reference_wrapper<KLStore>> store) {
          const RootSystemPtr& rs = w.root_system();
          if (store) return jh_induced(subset_arg(K, rs), w, weight_arg(lambda, rs), store->get());
          KLStore local(rs);
          return jh_induced(subset_arg(K, rs), w, weight_arg(lambda, rs), local);
        },
        py::arg("K"), py::arg("w"), py::arg("lam") = std::nullopt,
        py::arg("store") = std::nullopt);
  m.def("jh_generalized_steinberg",
        [](const std::vector<int>& I, const WeylElem& w,
           const std::optional<std::vector<Int>>& lambda,
           std::optional<std::reference_wrapper<KLStore>> store) {
          const RootSystemPtr& rs = w.root_system();
          if (store)
            return jh_generalized_steinberg(subset_arg(I, rs), w, weight_arg(lambda, rs),
                                            store->get());
          KLStore local(rs);
          return jh_generalized_steinberg(subset_arg(I, rs), w, weight_arg(lambda, rs), local);
        },
        py::arg("I"), py::arg("w"), py::arg("lam") = std::nullopt,
        py::arg("store") = std::nullopt);
  m.def("coxeter_criterion",
        [](const std::vector<int>& I, const WeylElem& w) {
          return coxeter_criterion(subset_arg(I, w.root_system()), w);
        },
        py::arg("I"), py::arg("w"));

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("ok", &VerifyReport::ok)
      .def_readonly("lines", &VerifyReport::lines)
      .def_readonly("violations", &VerifyReport::violations)
      .def("__bool__", [](const VerifyReport& r) { return r.ok; });

  m.def("verify_tits_euler",
        [](const RootSystemPtr& rs, const std::vector<int>& I,
           const std::optional<std::vector<Int>>& lambda, KLStore& store) {
          return verify_tits_euler(rs, subset_arg(I, rs), weight_arg(lambda, rs), store);
        },
        py::arg("rs"), py::arg("I"), py::arg("lam"), py::arg("store"));
  m.def("verify_smooth_complex",
        [](const RootSystemPtr& rs, const std::vector<int>& I,
           const std::optional<std::vector<Int>>& lambda, KLStore& store) {
          return verify_smooth_complex(rs, subset_arg(I, rs), weight_arg(lambda, rs), store);
        },
        py::arg("rs"), py::arg("I"), py::arg("lam"), py::arg("store"));

  m.def("cache_save", &cache_save, py::arg("store"), py::arg("path"));
  m.def("cache_load", &cache_load, py::arg("path"), py::arg("rs"));

  m.def("jh_to_json",
        [](const RootSystemPtr& rs, const FactorMultiset& mset,
           const std::optional<std::vector<Int>>& lambda) {
          RenderContext ctx{rs, weight_arg(lambda, rs), SimpleSubset::empty(), {}};
          return multiset_to_json(ctx, mset).dump(1);
        },
        py::arg("rs"), py::arg("mset"), py::arg("lam") = std::nullopt,
        "JSON rendering of a factor multiset, matching the CLI schema.");
}
