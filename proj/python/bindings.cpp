#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thermoiso/io.hpp"
#include "thermoiso/lorenz.hpp"
#include "thermoiso/model.hpp"
#include "thermoiso/modes.hpp"
#include "thermoiso/sweep.hpp"
#include "thermoiso/yield.hpp"

namespace py = pybind11;
using namespace thermoiso;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermomajorization and photoisomerization quantum yields";

  py::class_<Level>(m, "Level")
      .def(py::init<std::string, double>(), py::arg("label"), py::arg("energy"))
      .def_readonly("label", &Level::label)
      .def_readonly("energy", &Level::energy)
      .def("__repr__", [](const Level& lv) {
        return "Level('" + lv.label + "', " + io::format_number(lv.energy) + ")";
      });

  py::class_<EnergySpectrum>(m, "EnergySpectrum")
      .def(py::init<std::vector<Level>>(), py::arg("levels"))
      .def(py::init([](const std::vector<std::pair<std::string, double>>& pairs) {
             std::vector<Level> levels;
             levels.reserve(pairs.size());
             for (const auto& [label, energy] : pairs) levels.push_back({label, energy});
             return EnergySpectrum(std::move(levels));
           }),
           py::arg("levels"))
      .def("__len__", &EnergySpectrum::size)
      .def_property_readonly("levels", &EnergySpectrum::levels)
      .def("energy", &EnergySpectrum::energy, py::arg("index"));

  py::class_<ThermalContext>(m, "ThermalContext")
      .def(py::init<double>(), py::arg("beta"))
      .def_readonly("beta", &ThermalContext::beta);

  py::class_<LorenzCurve>(m, "LorenzCurve")
      .def_readonly("xs", &LorenzCurve::xs)
      .def_readonly("ys", &LorenzCurve::ys)
      .def_readonly("beta", &LorenzCurve::beta)
      .def_property_readonly("z", &LorenzCurve::z)
      .def("__len__", &LorenzCurve::knot_count);

  py::class_<CoherentBlock>(m, "CoherentBlock")
      .def(py::init([](std::size_t i, std::size_t j, std::complex<double> lam) {
             return CoherentBlock{i, j, lam};
           }),
           py::arg("i"), py::arg("j"), py::arg("lam"))
      .def_readonly("i", &CoherentBlock::i)
      .def_readonly("j", &CoherentBlock::j)
      .def_readonly("lam", &CoherentBlock::lam);

  py::class_<CoherentBlockState>(m, "CoherentBlockState")
      .def(py::init<EnergySpectrum, PopulationVector, std::vector<CoherentBlock>>(),
           py::arg("spectrum"), py::arg("diag"), py::arg("blocks"))
      .def_property_readonly("spectrum", &CoherentBlockState::spectrum)
      .def_property_readonly("diag", &CoherentBlockState::diag)
      .def_property_readonly("blocks", &CoherentBlockState::blocks);

  py::class_<BasisRotation>(m, "BasisRotation");

  py::class_<PhotoswitchParams>(m, "PhotoswitchParams")
      .def(py::init<double, double, double, double>(), py::arg("e1"), py::arg("delta_e"),
           py::arg("p"), py::arg("lam"))
      .def_readonly("e1", &PhotoswitchParams::e1)
      .def_readonly("delta_e", &PhotoswitchParams::delta_e)
      .def_readonly("p", &PhotoswitchParams::p)
      .def_readonly("lam", &PhotoswitchParams::lam);

  py::enum_<YieldDefinition>(m, "YieldDefinition")
      .value("any", YieldDefinition::any)
      .value("both", YieldDefinition::both)
      .value("single", YieldDefinition::single)
      .value("subset", YieldDefinition::subset);

  py::class_<YieldReport>(m, "YieldReport")
      .def_readonly("value", &YieldReport::value)
      .def_readonly("achiever", &YieldReport::achiever)
      .def_readonly("definition", &YieldReport::definition)
      .def("__repr__", [](const YieldReport& r) {
        return "YieldReport(" + io::definition_name(r.definition) + ", " +
               io::format_number(r.value) + ")";
      });

  py::class_<GapSweepRow>(m, "GapSweepRow")
      .def_readonly("beta_delta_e", &GapSweepRow::beta_delta_e)
      .def_readonly("qy_any_hi", &GapSweepRow::qy_any_hi)
      .def_readonly("qy_any_lo", &GapSweepRow::qy_any_lo)
      .def_readonly("qy_both_hi", &GapSweepRow::qy_both_hi)
      .def_readonly("qy_both_lo", &GapSweepRow::qy_both_lo)
      .def_readonly("qy_single", &GapSweepRow::qy_single);

  py::class_<AdvantageMap>(m, "AdvantageMap")
      .def_readonly("p_grid", &AdvantageMap::p_grid)
      .def_readonly("gap_grid", &AdvantageMap::gap_grid)
      .def_readonly("delta", &AdvantageMap::delta);

  py::class_<RidgePoint>(m, "RidgePoint")
      .def_readonly("beta_delta_e", &RidgePoint::beta_delta_e)
      .def_readonly("p", &RidgePoint::p);

  py::class_<RidgeFit>(m, "RidgeFit")
      .def_readonly("points", &RidgeFit::points)
      .def_readonly("p0", &RidgeFit::p0)
      .def_readonly("residual", &RidgeFit::residual);

  m.def("partition_function", &partition_function, py::arg("spectrum"), py::arg("ctx"));
  m.def("gibbs_state", &gibbs_state, py::arg("spectrum"), py::arg("ctx"));
  m.def("validate_population", &validate_population, py::arg("population"),
        py::arg("spectrum"));

  m.def("build_curve", &build_curve, py::arg("population"), py::arg("spectrum"),
        py::arg("ctx"));
  m.def("evaluate", &evaluate, py::arg("curve"), py::arg("x"));
  m.def("thermomajorizes", &thermomajorizes, py::arg("p_curve"), py::arg("q_curve"));

  m.def("extract_zero_mode", &extract_zero_mode, py::arg("state"));
  m.def("diagonalize_blocks", &diagonalize_blocks, py::arg("state"));
  m.def("rotate_back", &rotate_back, py::arg("final_diag"), py::arg("rotation"));
  m.def("purity", &purity, py::arg("state"));

  m.def("single_molecule_model", &single_molecule_model, py::arg("e1"), py::arg("delta_e"));
  m.def("two_molecule_model", &two_molecule_model, py::arg("e1"), py::arg("delta_e"));
  m.def("single_molecule_initial", &single_molecule_initial, py::arg("p"));
  m.def("superposition_initial_state", &superposition_initial_state, py::arg("params"));
  m.def("general_two_molecule_initial", &general_two_molecule_initial, py::arg("e1"),
        py::arg("delta_e"), py::arg("p_gg"), py::arg("p_ge"), py::arg("p_eg"), py::arg("p_ee"),
        py::arg("lam"));
  m.def("any_trans_subset", &any_trans_subset);
  m.def("both_trans_subset", &both_trans_subset);

  m.def("max_subset_mass", &max_subset_mass, py::arg("initial_curve"), py::arg("spectrum"),
        py::arg("ctx"), py::arg("subset"), py::arg("definition") = YieldDefinition::subset);
  m.def("qy_any", &qy_any, py::arg("params"), py::arg("ctx"));
  m.def("qy_both", &qy_both, py::arg("params"), py::arg("ctx"));
  m.def("qy_single", &qy_single, py::arg("e1"), py::arg("delta_e"), py::arg("p"),
        py::arg("ctx"));
  m.def("brute_force_yield",
        py::overload_cast<const PopulationVector&, const EnergySpectrum&, const ThermalContext&,
                          const std::vector<std::size_t>&, double, std::uint64_t>(
            &brute_force_yield),
        py::arg("initial"), py::arg("spectrum"), py::arg("ctx"), py::arg("subset"),
        py::arg("resolution"), py::arg("candidate_cap") = kDefaultCandidateCap,
        py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_yield",
        py::overload_cast<const LorenzCurve&, const EnergySpectrum&, const ThermalContext&,
                          const std::vector<std::size_t>&, double, std::uint64_t>(
            &brute_force_yield),
        py::arg("initial_curve"), py::arg("candidate_spectrum"), py::arg("ctx"),
        py::arg("subset"), py::arg("resolution"), py::arg("candidate_cap") = kDefaultCandidateCap,
        py::call_guard<py::gil_scoped_release>());

  m.def("gap_sweep", &gap_sweep, py::arg("e1"), py::arg("p"), py::arg("lam_hi"),
        py::arg("lam_lo"), py::arg("gap_grid"), py::arg("ctx"));
  m.def("advantage_map", &advantage_map, py::arg("e1"), py::arg("p_grid"), py::arg("gap_grid"),
        py::arg("ctx"));
  m.def("ridge_extract", &ridge_extract, py::arg("map"));
  m.def("fit_ridge", &fit_ridge, py::arg("points"));
}
