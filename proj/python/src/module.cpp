#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "rauzy/balanced_pairs.hpp"
#include "rauzy/error.hpp"
#include "rauzy/fractal.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/reference_suite.hpp"
#include "rauzy/report.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/substitution_io.hpp"

namespace py = pybind11;
using namespace rauzy;

namespace {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoSeedFound: return "NoSeedFound";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::DivideByZeroPoly: return "DivideByZeroPoly";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::IndeterminateClassification: return "IndeterminateClassification";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::MatrixMismatch: return "MatrixMismatch";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

ProjectionOperator operator_for(const Substitution& sigma, double tol) {
  const PisotReport r = classify_pisot(sigma);
  if (!r.is_primitive) throw Error(ErrorKind::InvalidArgument, "substitution is not primitive");
  if (!r.is_pisot) throw Error(ErrorKind::InvalidArgument, "substitution is not Pisot");
  return projection_operator(spectral_split(incidence_matrix(sigma), tol, r.minimal_poly));
}

py::tuple cloud_arrays(const LabeledPointCloud& c) {
  py::array_t<double> coords({c.size(), c.dim});
  std::copy(c.coords.begin(), c.coords.end(), coords.mutable_data());
  py::array_t<std::uint32_t> labels(c.size());
  std::copy(c.labels.begin(), c.labels.end(), labels.mutable_data());
  return py::make_tuple(coords, labels, c.label_names);
}

}  // namespace

PYBIND11_MODULE(_rauzy, m) {
  m.doc() = "Native core of the rauzy package.";
  m.attr("__version__") = RAUZY_VERSION;

  static py::handle error_type = py::exception<Error>(m, "RauzyError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(std::string(kind_name(e.kind())) + ": " + e.what());
      exc.attr("kind") = kind_name(e.kind());
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "analyze",
      [](const std::string& text, double tol) {
        AnalysisOptions opts;
        opts.tol = tol;
        return analysis_report(parse_substitution(text), opts).dump();
      },
      py::arg("text"), py::arg("tol") = kDefaultTolerance);

  m.def(
      "reverse",
      [](const std::string& text) {
        const auto named = parse_substitution(text);
        return substitution_to_string(reverse_substitution(named.substitution), named.name + "_reversed");
      },
      py::arg("text"));

  m.def(
      "fractal",
      [](const std::string& text, std::size_t n, std::size_t threads, double tol) {
        const auto named = parse_substitution(text);
        LabeledPointCloud cloud;
        {
          py::gil_scoped_release release;
          CloudOptions opts;
          opts.threads = threads;
          opts.substitution_id = named.name;
          cloud = rauzy_cloud(named.substitution, n, operator_for(named.substitution, tol), opts);
        }
        return cloud_arrays(cloud);
      },
      py::arg("text"), py::arg("n") = 100'000, py::arg("threads") = 1, py::arg("tol") = kDefaultTolerance);

  m.def(
      "bpa",
      [](const std::string& first, std::optional<std::string> second, std::size_t max_pairs,
         std::size_t prefix_cutoff, std::size_t max_pair_length) {
        const auto a = parse_substitution(first);
        const Substitution b = second ? parse_substitution(*second).substitution : reverse_substitution(a.substitution);
        BpaLimits limits;
        limits.max_pairs = max_pairs;
        limits.prefix_cutoff = prefix_cutoff;
        limits.max_pair_length = max_pair_length;
        py::gil_scoped_release release;
        return bpa_report(a.substitution, b, run_bpa(a.substitution, b, limits)).dump();
      },
      py::arg("first"), py::arg("second") = py::none(), py::arg("max_pairs") = BpaLimits{}.max_pairs,
      py::arg("prefix_cutoff") = BpaLimits{}.prefix_cutoff,
      py::arg("max_pair_length") = BpaLimits{}.max_pair_length);

  m.def("verify", []() {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (const auto& r : reference::run_reference_suite()) out.emplace_back(r.id, r.passed, r.detail);
    }
    return out;
  });
}
