#pragma once

#include <string>

#include <json.hpp>

#include "rauzy/balanced_pairs.hpp"
#include "rauzy/pisot.hpp"
#include "rauzy/spectral.hpp"
#include "rauzy/substitution_io.hpp"

namespace rauzy {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const BigInt& v);
/// {"coefficients": [lowest first], "string": "x^3 - x^2 - x - 1"}
Json polynomial_to_json(const IntPolynomial& p);
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const Eigen::MatrixXd& m);
Json pisot_report_to_json(const PisotReport& r);
Json spectral_to_json(const SpectralSplit& split, const ProjectionOperator& op);
Json factor_report_to_json(const FactorConjectureReport& r);

struct AnalysisOptions {
  bool include_spectral = true;
  double tol = kDefaultTolerance;
};

/// Echo of the substitution, incidence matrix, char poly, classification,
/// fixed-point seed and (when the substitution is Pisot) spectral residuals.
/// Propagates IndeterminateClassification.
Json analysis_report(const NamedSubstitution& sigma, const AnalysisOptions& options = {});

/// Σ JSON plus char poly and, when sigma2 is the reverse of sigma1, the
/// factor report. Non-complete outcomes produce a partial report with
/// "status" set accordingly.
Json bpa_report(const Substitution& sigma1, const Substitution& sigma2, const BpaOutcome& outcome);

}  // namespace rauzy
