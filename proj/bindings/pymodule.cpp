#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tomoqkd/scenarios.hpp"

namespace py = pybind11;
using namespace tomoqkd;

namespace {

py::dict basis_dict(const BasisReport& b) {
  py::dict d;
  d["basis"] = basis_name(b.basis);
  d["i_ab"] = b.i_ab;
  d["i_ae_max"] = b.i_ae_max;
  d["yield"] = b.yield;
  d["optimal_params"] = py::make_tuple(b.optimal_params[0], b.optimal_params[1]);
  return d;
}

py::dict report_dict(const YieldReport& r) {
  py::dict d;
  py::dict params;
  params["ratio"] = r.params.ratio;
  params["g"] = r.params.g;
  params["V"] = r.params.v;
  params["F"] = r.params.noise;
  d["params"] = params;
  py::dict coeff;
  coeff["alpha"] = r.coefficients.alpha;
  coeff["beta1"] = r.coefficients.beta1;
  coeff["beta2"] = r.coefficients.beta2;
  coeff["gamma"] = r.coefficients.gamma;
  d["coefficients"] = coeff;
  py::dict bases;
  bases["z"] = basis_dict(r.z);
  bases["x"] = basis_dict(r.x);
  bases["y"] = basis_dict(r.y);
  d["bases"] = bases;
  d["overall_yield"] = r.overall_yield;
  d["entangled"] = r.entangled;
  return d;
}

SourceParams make_params(double ratio, double g, double v, double noise) {
  SourceParams p{ratio, g, v, noise};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Csiszar-Korner yield of tomographic QKD with a quantum-dot "
            "entangled-photon source";

  m.def(
      "coefficients",
      [](double ratio, double g, double v, double noise) {
        const StateCoefficients c = coefficients(make_params(ratio, g, v, noise));
        py::dict d;
        d["alpha"] = c.alpha;
        d["beta1"] = c.beta1;
        d["beta2"] = c.beta2;
        d["gamma"] = c.gamma;
        return d;
      },
      py::arg("ratio"), py::arg("g"), py::arg("v"), py::arg("noise") = 0.0,
      "Noise-effective state coefficients (alpha, beta1, beta2, gamma)");

  m.def(
      "analyze",
      [](double ratio, double g, double v, double noise) {
        return report_dict(analyze(make_params(ratio, g, v, noise)));
      },
      py::arg("ratio"), py::arg("g"), py::arg("v"), py::arg("noise") = 0.0,
      "Full per-basis yield report for one parameter point");

  m.def(
      "sweep",
      [](double ratio, double g, double v, double noise,
         const std::string& axis, double lo, double hi, int steps) {
        SweepSpec spec;
        spec.fixed = make_params(ratio, g, v, noise);
        AxisSpec a;
        if (axis == "ratio")
          a.axis = Axis::Ratio;
        else if (axis == "g")
          a.axis = Axis::G;
        else if (axis == "v")
          a.axis = Axis::V;
        else if (axis == "f" || axis == "noise")
          a.axis = Axis::F;
        else
          throw std::invalid_argument("unknown axis '" + axis + "'");
        a.min = lo;
        a.max = hi;
        a.steps = steps;
        spec.axes.push_back(a);
        py::list rows;
        for (const SweepRow& r : sweep(spec)) {
          py::dict d;
          d["ratio"] = r.params.ratio;
          d["g"] = r.params.g;
          d["V"] = r.params.v;
          d["F"] = r.params.noise;
          d["yield_z"] = r.yield_z;
          d["yield_xy"] = r.yield_xy;
          d["overall_yield"] = r.overall;
          rows.append(d);
        }
        return rows;
      },
      py::arg("ratio"), py::arg("g"), py::arg("v"), py::arg("noise"),
      py::arg("axis"), py::arg("lo"), py::arg("hi"), py::arg("steps"),
      "One-axis sweep; returns a list of row dicts");

  m.def(
      "find_threshold",
      [](const std::string& moving, double ratio, double g, double v,
         double noise, double tolerance) {
        ThresholdQuery q;
        if (moving != "v" && moving != "f")
          throw std::invalid_argument("moving must be 'v' or 'f'");
        q.moving = moving[0];
        q.fixed = make_params(ratio, g, v, noise);
        q.tolerance = tolerance;
        return find_threshold(q).crossing;
      },
      py::arg("moving"), py::arg("ratio"), py::arg("g"), py::arg("v") = 0.0,
      py::arg("noise") = 0.0, py::arg("tolerance") = 1e-4,
      "Zero-yield crossing of V (fixed F) or F (maximized over V)");

  m.def("entropy", [](const std::vector<double>& p) {
    return entropy(std::span<const double>(p));
  });
  m.def("mutual_information", &mutual_information);
  m.def("srm_success", &srm_success, py::arg("overlap"));
  m.def(
      "is_entangled",
      [](double ratio, double g, double v, double noise) {
        const auto r = is_entangled(coefficients(make_params(ratio, g, v, noise)));
        return py::make_tuple(r.entangled, r.min_pt_eigenvalue);
      },
      py::arg("ratio"), py::arg("g"), py::arg("v"), py::arg("noise") = 0.0);
}
