// Python bindings for the core operations: models, the tensor ladder,
// creation operators, lambda, and the Toeplitz checks.

#include "bimtoep/io.hpp"
#include "bimtoep/report.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bimtoep;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Toeplitz matrices over an imprimitivity bimodule";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<StructuralError>(m, "StructuralError");
    py::register_exception<ValidationError>(m, "ValidationError");

    py::class_<CStarAlgebra, std::shared_ptr<CStarAlgebra>>(m, "CStarAlgebra")
        .def(py::init<std::vector<int>>())
        .def_property_readonly("dim", &CStarAlgebra::dim)
        .def_property_readonly("block_dims", &CStarAlgebra::block_dims)
        .def("unit", &CStarAlgebra::unit)
        .def("multiply", &CStarAlgebra::multiply)
        .def("involution", &CStarAlgebra::involution)
        .def("trace", &CStarAlgebra::trace)
        .def("norm", &CStarAlgebra::norm)
        .def("is_positive", &CStarAlgebra::is_positive, py::arg("a"), py::arg("tol") = 1e-9);

    py::class_<Bimodule, std::shared_ptr<Bimodule>>(m, "Bimodule")
        .def_property_readonly("dim", &Bimodule::dim)
        .def("act_left", &Bimodule::act_left)
        .def("act_right", &Bimodule::act_right)
        .def("inner_L", &Bimodule::inner_L)
        .def("inner_R", &Bimodule::inner_R)
        .def("module_norm", &Bimodule::module_norm);

    py::class_<TensorLadder, std::shared_ptr<TensorLadder>>(m, "TensorLadder")
        .def_property_readonly("range", &TensorLadder::range)
        .def("level_dim", &TensorLadder::level_dim)
        .def("level", &TensorLadder::level)
        .def("contract", &TensorLadder::contract)
        .def("dualize", &TensorLadder::dualize)
        .def("contraction", &TensorLadder::contraction, py::return_value_policy::copy);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("residual", &CheckResult::residual)
        .def_readonly("pass_", &CheckResult::pass)
        .def("__repr__", [](const CheckResult& c) {
            return "<check " + c.name + " residual=" + std::to_string(c.residual) +
                   (c.pass ? " pass>" : " FAIL>");
        });

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("checks", &ValidationReport::checks)
        .def("passed", &ValidationReport::passed)
        .def("summary", &ValidationReport::summary);

    py::class_<Model>(m, "Model")
        .def_readonly("name", &Model::name)
        .def_readonly("algebra", &Model::algebra)
        .def_readonly("bimodule", &Model::bimodule)
        .def_readonly("ladder", &Model::ladder)
        .def_readonly("window", &Model::window);

    py::class_<AdjointableMap>(m, "AdjointableMap")
        .def_readonly("from_level", &AdjointableMap::from)
        .def_readonly("to_level", &AdjointableMap::to)
        .def_readonly("mat", &AdjointableMap::mat)
        .def("apply", &AdjointableMap::apply)
        .def("norm", &AdjointableMap::norm)
        .def("__add__", &AdjointableMap::operator+)
        .def("__sub__", &AdjointableMap::operator-);

    py::class_<CrossSection>(m, "CrossSection")
        .def(py::init<LadderPtr>())
        .def("set", &CrossSection::set)
        .def("get", &CrossSection::get)
        .def("norm", &CrossSection::norm)
        .def_static("delta_unit", &CrossSection::delta_unit);

    py::class_<OperatorMatrix>(m, "OperatorMatrix")
        .def(py::init<LadderPtr, int>())
        .def_readonly("window", &OperatorMatrix::N)
        .def("has_block", &OperatorMatrix::has_block)
        .def("block", &OperatorMatrix::block, py::return_value_policy::copy)
        .def("set_block", &OperatorMatrix::set_block)
        .def_static("identity", &OperatorMatrix::identity);

    py::class_<ToeplitzCheck>(m, "ToeplitzCheck")
        .def_readonly("is_toeplitz", &ToeplitzCheck::is_toeplitz)
        .def_readonly("max_residual", &ToeplitzCheck::max_residual);

    py::class_<SynthesisResult>(m, "SynthesisResult")
        .def_readonly("section", &SynthesisResult::section)
        .def_readonly("max_spread", &SynthesisResult::max_spread)
        .def_readonly("consistent", &SynthesisResult::consistent);

    m.def("builtin_model", &builtin_model, py::arg("name"), py::arg("window") = 3);
    m.def("builtin_model_names", &builtin_model_names);
    m.def("load_model", &load_model);
    m.def("validate_bimodule", &validate_bimodule, py::arg("module"), py::arg("tol") = 1e-9);
    m.def("creation_left", &creation_left);
    m.def("creation_right", &creation_right);
    m.def("adjoint", &adjoint, py::arg("T"), py::arg("tol") = 1e-7);
    m.def("adjoint_left", &adjoint_left);
    m.def("extract_symbol", &extract_symbol, py::arg("T"), py::arg("tol") = 1e-7);
    m.def("multiplier_H", &multiplier_H);
    m.def("multiplier_J", &multiplier_J, py::arg("T"), py::arg("tol") = 1e-7);
    m.def("alpha_shift", &alpha_shift, py::arg("T"), py::arg("tol") = 1e-7);
    m.def("convolve", &convolve);
    m.def("involute", &involute);
    m.def("lambda_rep", &lambda_rep);
    m.def("is_toeplitz", &is_toeplitz, py::arg("M"), py::arg("tol") = 1e-8);
    m.def("synthesize_section", &synthesize_section, py::arg("M"), py::arg("radius"),
          py::arg("tol") = 1e-8);
    m.def("run_property_suite", &run_property_suite);
}
