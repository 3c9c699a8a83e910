#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "tpalg/algebra_io.hpp"
#include "tpalg/catalog.hpp"
#include "tpalg/derivations.hpp"
#include "tpalg/lie_algebra.hpp"
#include "tpalg/linear_map.hpp"
#include "tpalg/product.hpp"
#include "tpalg/product_io.hpp"
#include "tpalg/transposed_poisson.hpp"

namespace py = pybind11;
using namespace tpalg;

namespace {

py::object to_pyint(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

std::string vector_repr(const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + "]";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact structure-constant computations: delta-derivation spaces, transposed "
              "Poisson products, Hom-Lie checks";
    m.attr("__version__") = TPALG_VERSION;

    py::class_<Rational>(m, "Rational")
        .def(py::init<long>(), py::arg("n"))
        .def(py::init([](const std::string& text) { return Rational::parse(text); }),
             py::arg("text"))
        .def_property_readonly("num", [](const Rational& r) { return to_pyint(r.num()); })
        .def_property_readonly("den", [](const Rational& r) { return to_pyint(r.den()); })
        .def("is_zero", &Rational::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational(" + r.str() + ")"; });
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<Vector>(m, "Vector")
        .def(py::init<std::size_t>(), py::arg("dim"))
        .def(py::init([](const std::vector<Rational>& coords) { return Vector(coords); }),
             py::arg("coords"))
        .def("__len__", &Vector::dim)
        .def("__getitem__",
             [](const Vector& v, std::size_t i) {
                 if (i >= v.dim()) throw py::index_error();
                 return v[i];
             })
        .def("is_zero", &Vector::is_zero)
        .def("coords", &Vector::coords)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__repr__", &vector_repr);
    m.def("unit_vector", &unit_vector, py::arg("dim"), py::arg("i"));

    py::class_<LinearMap>(m, "LinearMap")
        .def(py::init<std::size_t>(), py::arg("dim"))
        .def_static("identity", &LinearMap::identity, py::arg("dim"))
        .def_property_readonly("dim", &LinearMap::dim)
        .def("at", [](const LinearMap& p, std::size_t r, std::size_t c) { return p.at(r, c); },
             py::arg("row"), py::arg("col"))
        .def("set",
             [](LinearMap& p, std::size_t r, std::size_t c, const Rational& v) { p.at(r, c) = v; },
             py::arg("row"), py::arg("col"), py::arg("value"))
        .def("column", &LinearMap::column, py::arg("i"))
        .def("apply", &LinearMap::apply, py::arg("v"))
        .def("is_zero", &LinearMap::is_zero)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const LinearMap& p) {
            return "<LinearMap dim=" + std::to_string(p.dim()) + ">";
        });

    py::class_<LieAlgebra>(m, "LieAlgebra")
        .def_property_readonly("name", &LieAlgebra::name)
        .def_property_readonly("dim", &LieAlgebra::dim)
        .def_property_readonly("labels", &LieAlgebra::labels)
        .def("index_of", &LieAlgebra::index_of, py::arg("label"))
        .def("bracket_basis", &LieAlgebra::bracket_basis, py::arg("i"), py::arg("j"))
        .def("bracket", &LieAlgebra::bracket, py::arg("x"), py::arg("y"))
        .def("table",
             [](const LieAlgebra& alg) {
                 py::list out;
                 for (const auto& [key, value] : alg.table())
                     out.append(py::make_tuple(key.first, key.second, value));
                 return out;
             })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const LieAlgebra& alg) {
            return "<LieAlgebra " + alg.name() + " dim=" + std::to_string(alg.dim()) + ">";
        });

    m.def("schrodinger_dim", &schrodinger_dim, py::arg("n"));
    m.def("build_schrodinger", &build_schrodinger, py::arg("n"));
    m.def("build_catalog", &build_catalog, py::arg("name"), py::arg("n") = py::none());

    py::class_<JacobiViolation>(m, "JacobiViolation")
        .def_readonly("i", &JacobiViolation::i)
        .def_readonly("j", &JacobiViolation::j)
        .def_readonly("k", &JacobiViolation::k)
        .def_readonly("residual", &JacobiViolation::residual);
    py::class_<JacobiReport>(m, "JacobiReport")
        .def_readonly("ok", &JacobiReport::ok)
        .def_readonly("violations", &JacobiReport::violations);
    m.def("check_jacobi", &check_jacobi, py::arg("algebra"));

    py::class_<AntisymmetryViolation>(m, "AntisymmetryViolation")
        .def_readonly("i", &AntisymmetryViolation::i)
        .def_readonly("j", &AntisymmetryViolation::j)
        .def_readonly("residual", &AntisymmetryViolation::residual);
    py::class_<AntisymmetryReport>(m, "AntisymmetryReport")
        .def_readonly("ok", &AntisymmetryReport::ok)
        .def_readonly("violations", &AntisymmetryReport::violations);
    m.def("check_antisymmetry", &check_antisymmetry, py::arg("algebra"));

    py::class_<Grading>(m, "Grading")
        .def_property_readonly("group", [](const Grading& g) { return g.group().str(); })
        .def_property_readonly("dim", &Grading::dim)
        .def("degree", [](const Grading& g, std::size_t i) {
            return Grading::degree_str(g.degree(i));
        },
             py::arg("i"));
    m.def("standard_grading", &standard_grading, py::arg("algebra"));
    m.def("check_grading",
          [](const LieAlgebra& alg, const Grading& g) { return check_grading(alg, g).ok; },
          py::arg("algebra"), py::arg("grading"));

    py::class_<DerivationSpace>(m, "DerivationSpace")
        .def_readonly("algebra", &DerivationSpace::algebra)
        .def_readonly("delta", &DerivationSpace::delta)
        .def_readonly("basis", &DerivationSpace::basis)
        .def_readonly("constraint_rank", &DerivationSpace::constraint_rank)
        .def("__repr__", [](const DerivationSpace& ds) {
            return "<DerivationSpace delta=" + ds.delta.str() +
                   " dim=" + std::to_string(ds.basis.size()) + ">";
        });
    m.def("derivation_space", &derivation_space, py::arg("algebra"), py::arg("delta"));
    m.def("is_delta_derivation",
          [](const LieAlgebra& alg, const LinearMap& phi, const Rational& delta) {
              return is_delta_derivation(alg, phi, delta).ok;
          },
          py::arg("algebra"), py::arg("phi"), py::arg("delta"));
    m.def("decompose_derivation_space",
          [](const DerivationSpace& ds, const Grading& g) {
              py::dict out;
              for (const auto& [degree, maps] : decompose_derivation_space(ds, g))
                  out[py::str(Grading::degree_str(degree))] = maps;
              return out;
          },
          py::arg("space"), py::arg("grading"));

    py::class_<Product>(m, "Product")
        .def(py::init<std::size_t>(), py::arg("dim"))
        .def_property_readonly("dim", &Product::dim)
        .def("set", &Product::set, py::arg("i"), py::arg("j"), py::arg("value"))
        .def("multiply_basis", &Product::multiply_basis, py::arg("i"), py::arg("j"))
        .def("multiply", &Product::multiply, py::arg("v"), py::arg("w"))
        .def("is_zero", &Product::is_zero)
        .def("tensor",
             [](const Product& p) {
                 py::list out;
                 for (const auto& [key, value] : p.tensor())
                     out.append(py::make_tuple(key.first, key.second, value));
                 return out;
             })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const Product& p) {
            return "<Product dim=" + std::to_string(p.dim()) +
                   " entries=" + std::to_string(p.tensor().size()) + ">";
        });

    py::class_<TripleViolation>(m, "TripleViolation")
        .def_readonly("a", &TripleViolation::a)
        .def_readonly("b", &TripleViolation::b)
        .def_readonly("c", &TripleViolation::c)
        .def_readonly("residual", &TripleViolation::residual);
    py::class_<TransposedPoissonReport>(m, "TransposedPoissonReport")
        .def_readonly("associative", &TransposedPoissonReport::associative)
        .def_readonly("compatible", &TransposedPoissonReport::compatible)
        .def_property_readonly("associative_ok", &TransposedPoissonReport::associative_ok)
        .def_property_readonly("compatible_ok", &TransposedPoissonReport::compatible_ok)
        .def_property_readonly("ok", &TransposedPoissonReport::ok);
    m.def("check_transposed_poisson", &check_transposed_poisson, py::arg("algebra"),
          py::arg("product"));
    m.def("left_multiplication", &left_multiplication, py::arg("product"), py::arg("k"));

    py::class_<ClassifiedFamily>(m, "ClassifiedFamily")
        .def_readonly("description", &ClassifiedFamily::description)
        .def_readonly("parameter_basis", &ClassifiedFamily::parameter_basis)
        .def_readonly("representative", &ClassifiedFamily::representative)
        .def_readonly("nontrivial", &ClassifiedFamily::nontrivial);
    py::class_<SearchResult> search_result(m, "SearchResult");
    py::enum_<SearchResult::Status>(search_result, "Status")
        .value("complete", SearchResult::Status::complete)
        .value("unresolved", SearchResult::Status::unresolved);
    search_result.def_readonly("parameter_names", &SearchResult::parameter_names)
        .def_readonly("base", &SearchResult::base)
        .def_readonly("directions", &SearchResult::directions)
        .def_property_readonly("residual_constraints",
                               [](const SearchResult& r) {
                                   std::vector<std::string> out;
                                   out.reserve(r.residual_constraints.size());
                                   for (const auto& q : r.residual_constraints)
                                       out.push_back(q.str(r.parameter_names));
                                   return out;
                               })
        .def_readonly("classified", &SearchResult::classified)
        .def_readonly("status", &SearchResult::status);
    m.def("search_structures", &search_structures, py::arg("algebra"), py::arg("space"));

    py::class_<HomLieReport>(m, "HomLieReport")
        .def_readonly("ok", &HomLieReport::ok)
        .def_readonly("violations", &HomLieReport::violations);
    m.def("check_hom_lie", &check_hom_lie, py::arg("algebra"), py::arg("phi"));

    py::class_<AlgebraFile>(m, "AlgebraFile")
        .def_readonly("algebra", &AlgebraFile::algebra)
        .def_readonly("grading", &AlgebraFile::grading);
    m.def("parse_algebra", &parse_algebra, py::arg("text"));
    m.def("serialize_algebra", &serialize_algebra, py::arg("algebra"),
          py::arg("grading") = py::none());
    m.def("parse_product", &parse_product, py::arg("text"), py::arg("dim"));
    m.def("serialize_product", &serialize_product, py::arg("product"));
    m.def("parse_map", &parse_map, py::arg("text"), py::arg("dim"));
    m.def("serialize_map", &serialize_map, py::arg("phi"));
}
