#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kls/bruhat.hpp"
#include "kls/engine.hpp"
#include "kls/error.hpp"
#include "kls/hypertoric.hpp"
#include "kls/json_io.hpp"
#include "kls/matroid.hpp"
#include "kls/point_count.hpp"
#include "kls/polytope.hpp"

namespace py = pybind11;
using namespace kls;

namespace {

// Coefficients cross the boundary as Python ints of any size.
py::list to_py(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(py::int_(py::str(c.str())));
  return out;
}

IntPolynomial from_py(const py::sequence& seq) {
  std::vector<Integer> c;
  for (const auto& item : seq) {
    if (!py::isinstance<py::int_>(item)) throw Error(ErrorKind::ParseError, "coefficients must be integers");
    c.emplace_back(py::str(item).cast<std::string>());
  }
  return IntPolynomial(std::move(c));
}

ElementIndex index(const RankedPoset& p, const std::string& label) { return p.index_of(label); }

py::dict entries(const IncidenceElement& f, bool include_diagonal) {
  py::dict out;
  const auto& P = f.poset();
  for (PairIndex i = 0; i < P.num_pairs(); ++i) {
    auto [x, y] = P.pairs()[i];
    if (x == y && !include_diagonal) continue;
    out[py::str(P.label(x) + "<" + P.label(y))] = to_py(f[i]);
  }
  return out;
}

IncidenceElement element_from_dict(const PosetPtr& poset, const py::dict& table, bool unit_diagonal) {
  IncidenceElement f(poset);
  if (unit_diagonal)
    for (ElementIndex x = 0; x < poset->size(); ++x) f.set(x, x, IntPolynomial{1});
  for (const auto& [key, value] : table) {
    auto [a, b] = split_pair_key(py::str(key).cast<std::string>());
    ElementIndex x = poset->index_of(a), y = poset->index_of(b);
    if (!poset->leq(x, y)) throw Error(ErrorKind::NotComparable, a + " is not below " + b);
    f.set(x, y, from_py(py::reinterpret_borrow<py::sequence>(value)));
  }
  return f;
}

py::dict check_to_py(const RankedPoset& P, const Check& c) {
  py::dict d;
  d["property"] = c.property;
  d["passed"] = c.passed;
  d["counterexample"] = c.counterexample
                            ? py::object(py::str(P.label(c.counterexample->first) + "<" + P.label(c.counterexample->second)))
                            : py::object(py::none());
  d["detail"] = c.detail;
  return d;
}

Field field_of(std::optional<long long> prime) { return prime ? Field::mod(*prime) : Field::rationals(); }

ComputeOptions opts(unsigned threads, bool strict) { return {threads, strict, std::nullopt}; }

// Python-side handle on an immutable poset.
struct Poset {
  PosetPtr ptr;
  const RankedPoset& operator*() const { return *ptr; }
};

}  // namespace

PYBIND11_MODULE(_kls, m) {
  m.doc() = "Kazhdan-Lusztig-Stanley polynomials of weakly ranked posets";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> kls_error;
  kls_error.call_once_and_store_result([&]() {
    return py::reinterpret_steal<py::object>(PyErr_NewException("kls.KlsError", PyExc_ValueError, nullptr));
  });
  m.attr("KlsError") = kls_error.get_stored();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = kls_error.get_stored();
      py::object err = type(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& relations,
                       const std::map<std::string, int>& ranks) {
             RankPairs pairs;
             for (const auto& [key, r] : ranks) pairs[split_pair_key(key)] = r;
             return Poset{build_poset(elements, relations, pairs)};
           }),
           py::arg("elements"), py::arg("relations"), py::arg("ranks"),
           "Strict relations a < b and ranks keyed \"a<b\" on enough pairs to determine the rest.")
      .def_static("from_json", [](const std::string& text) { return Poset{poset_from_json(Json::parse(text))}; })
      .def("to_json", [](const Poset& p) { return poset_to_json(*p).dump(); })
      .def("__len__", [](const Poset& p) { return p.ptr->size(); })
      .def_property_readonly("labels", [](const Poset& p) { return p.ptr->labels(); })
      .def("leq", [](const Poset& p, const std::string& x, const std::string& y) {
        return p.ptr->leq(index(*p, x), index(*p, y));
      })
      .def("rank", [](const Poset& p, const std::string& x, const std::string& y) {
        return p.ptr->rank(index(*p, x), index(*p, y));
      })
      .def("interval", [](const Poset& p, const std::string& x, const std::string& y) { return p.ptr->interval(x, y); })
      .def("opposite", [](const Poset& p) { return Poset{opposite(*p)}; })
      .def("scale_rank", [](const Poset& p, int factor) { return Poset{scale_rank(*p, factor)}; })
      .def("is_locally_eulerian", [](const Poset& p) { return is_locally_eulerian(p.ptr); })
      .def("__eq__", [](const Poset& a, const Poset& b) { return *a == *b; });

  py::class_<IncidenceElement>(m, "Element")
      .def(py::init([](const Poset& poset, const py::dict& table, bool unit_diagonal) {
             return element_from_dict(poset.ptr, table, unit_diagonal);
           }),
           py::arg("poset"), py::arg("entries"), py::arg("unit_diagonal") = true)
      .def_property_readonly("poset", [](const IncidenceElement& f) { return Poset{f.poset_ptr()}; })
      .def("__getitem__",
           [](const IncidenceElement& f, const std::pair<std::string, std::string>& xy) {
             return to_py(f.at(xy.first, xy.second));
           })
      .def("entries", &entries, py::arg("include_diagonal") = false)
      .def("__eq__", [](const IncidenceElement& a, const IncidenceElement& b) { return a == b; })
      .def("__mul__", [](const IncidenceElement& a, const IncidenceElement& b) { return convolve(a, b); });

  m.def("zeta", [](const Poset& p) { return zeta(p.ptr); });
  m.def("mobius", [](const Poset& p) { return mobius(p.ptr); });
  m.def("delta", [](const Poset& p) { return identity_delta(p.ptr); });
  m.def("convolve", [](const IncidenceElement& a, const IncidenceElement& b) { return convolve(a, b); });
  m.def("invert", [](const IncidenceElement& f) { return invert(f); });
  m.def("bar", &bar);
  m.def("hat", &hat);
  m.def("is_symmetric", &is_symmetric);
  m.def("is_alternating", &is_alternating);
  m.def("in_half_subring", &in_half_subring);
  m.def("transport_to_opposite", py::overload_cast<const IncidenceElement&>(&transport_to_opposite));

  m.def("check_kernel", [](const IncidenceElement& k) { return check_to_py(k.poset(), check_kernel(k)); });
  m.def("is_kernel", [](const IncidenceElement& k) { return is_kernel(k); });
  m.def("right_kls", [](const IncidenceElement& k, unsigned t, bool s) { return right_kls(k, opts(t, s)); },
        py::arg("kernel"), py::arg("threads") = 1, py::arg("strict") = false);
  m.def("left_kls", [](const IncidenceElement& k, unsigned t, bool s) { return left_kls(k, opts(t, s)); },
        py::arg("kernel"), py::arg("threads") = 1, py::arg("strict") = false);
  m.def("z_function", [](const IncidenceElement& k, unsigned t, bool s) { return z_function(k, opts(t, s)); },
        py::arg("kernel"), py::arg("threads") = 1, py::arg("strict") = false);
  m.def("batyrev_borisov", [](const IncidenceElement& k) { return batyrev_borisov(k); });
  m.def("kernel_from_right", [](const IncidenceElement& f) { return kernel_from_right(f); });
  m.def("kernel_from_left", [](const IncidenceElement& g) { return kernel_from_left(g); });
  m.def("recover_fg_from_z", [](const IncidenceElement& z) {
    auto fg = recover_fg_from_z(z);
    return py::make_tuple(fg.f, fg.g);
  });
  m.def("alternating_duality", [](const IncidenceElement& k) {
    auto res = alternating_duality(k);
    py::list checks;
    for (const auto& c : res.checks) checks.append(check_to_py(k.poset(), c));
    return checks;
  });

  py::class_<Matroid>(m, "Matroid")
      .def_static("uniform", &Matroid::uniform, py::arg("n"), py::arg("k"))
      .def_static("graphic", &Matroid::graphic, py::arg("edges"))
      .def_static(
          "from_matrix",
          [](const Columns& columns, std::optional<long long> prime) {
            return Matroid::from_matrix(columns, field_of(prime));
          },
          py::arg("columns"), py::arg("prime") = py::none(), "Columns over F_p, or over Q when prime is None.")
      .def("rank", [](const Matroid& mat, const std::vector<int>& subset) {
        ElementSet s = 0;
        for (int i : subset) s |= ElementSet{1} << i;
        return mat.rank(s);
      })
      .def_property_readonly("full_rank", &Matroid::full_rank)
      .def_property_readonly("ground_size", &Matroid::ground_size)
      .def("lattice_of_flats", [](const Matroid& mat) { return Poset{lattice_of_flats(mat).poset}; })
      .def("kl_polynomial", [](const Matroid& mat) { return to_py(matroid_kl(mat)); })
      .def("z_polynomial", [](const Matroid& mat) { return to_py(matroid_z(mat)); })
      .def("hypertoric_kernel", [](const Matroid& mat) { return hypertoric_kernel(lattice_of_flats(mat)); })
      .def("broken_circuit_h", [](const Matroid& mat) { return broken_circuit_h(lattice_of_flats(mat)); });

  m.def("characteristic_kernel", [](const Poset& p) { return characteristic_kernel(p.ptr); });
  m.def("eulerian_kernel", [](const Poset& p) { return eulerian_kernel(p.ptr); });

  auto polytope = [](const PolytopeIncidence& p) { return py::make_tuple(p.num_vertices, p.facets); };
  m.def("simplex", [=](int d) { return polytope(simplex(d)); });
  m.def("cube", [=](int d) { return polytope(cube(d)); });
  m.def("cross_polytope", [=](int d) { return polytope(cross_polytope(d)); });
  m.def("polygon", [=](int n) { return polytope(polygon(n)); });
  m.def(
      "face_poset",
      [](int num_vertices, const std::vector<std::vector<int>>& facets) {
        return Poset{face_poset({num_vertices, facets}).poset};
      },
      py::arg("num_vertices"), py::arg("facets"));
  m.def(
      "g_polynomial",
      [](int num_vertices, const std::vector<std::vector<int>>& facets) {
        return to_py(g_polynomial(face_poset({num_vertices, facets})));
      },
      py::arg("num_vertices"), py::arg("facets"));

  m.def("bruhat", [](int n) {
    auto b = bruhat(n);
    return py::make_tuple(Poset{b.poset}, b.r_polynomials);
  }, "S_n under Bruhat order and its R-polynomial kernel.");

  m.def(
      "crapo_cross_check",
      [](const Columns& columns, std::optional<long long> prime, const std::vector<long long>& qs) {
        auto checks = crapo_cross_check(columns, field_of(prime), qs);
        py::list out;
        auto lattice = lattice_of_flats(Matroid::from_matrix(columns, field_of(prime)));
        for (const auto& c : checks) out.append(check_to_py(*lattice.poset, c));
        return out;
      },
      py::arg("columns"), py::arg("prime") = py::none(), py::arg("qs") = std::vector<long long>{2, 3, 5});
  m.def("count_complement_points", [](const Columns& columns, long long p, const std::vector<int>& F,
                                      const std::vector<int>& G) {
    auto mask = [](const std::vector<int>& v) {
      ElementSet s = 0;
      for (int i : v) s |= ElementSet{1} << i;
      return s;
    };
    return count_complement_points(columns, p, mask(F), mask(G));
  });
}
