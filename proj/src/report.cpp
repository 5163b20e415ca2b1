#include "rauzy/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rauzy/error.hpp"

namespace rauzy {

Json integer_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json polynomial_to_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return Json{{"coefficients", std::move(coeffs)}, {"string", p.to_string()}};
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(integer_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json pisot_report_to_json(const PisotReport& r) {
  Json conj = Json::array();
  for (const auto& z : r.conjugates)
    conj.push_back({{"re", static_cast<double>(z.real())},
                    {"im", static_cast<double>(z.imag())},
                    {"modulus", static_cast<double>(std::abs(z))}});
  Json out;
  out["perron_root"] = r.perron_root.convert_to<double>();
  out["perron_root_digits"] = r.perron_root.str(40, std::ios_base::fixed);
  out["minimal_polynomial"] = polynomial_to_json(r.minimal_poly);
  out["conjugates"] = std::move(conj);
  out["determinant"] = integer_to_json(r.determinant);
  out["is_primitive"] = r.is_primitive;
  out["is_pisot"] = r.is_pisot;
  out["is_irreducible"] = r.is_irreducible;
  out["is_unimodular"] = r.is_unimodular;
  out["margin"] = std::isfinite(r.margin) ? Json(r.margin) : Json(nullptr);
  return out;
}

Json spectral_to_json(const SpectralSplit& split, const ProjectionOperator& op) {
  Json out;
  out["lambda"] = split.lambda;
  out["contracting_dim"] = split.contracting_dim();
  out["complementary_dim"] = static_cast<std::size_t>(split.basis_c.cols());
  out["basis_u"] = matrix_to_json(Eigen::MatrixXd(split.basis_u));
  out["basis_s"] = matrix_to_json(split.basis_s);
  out["basis_c"] = matrix_to_json(split.basis_c);
  out["residuals"] = split.residuals;
  out["condition_number"] = split.condition_number;
  out["projector"] = matrix_to_json(op.projector);
  out["chart"] = matrix_to_json(op.chart);
  return out;
}

Json factor_report_to_json(const FactorConjectureReport& r) {
  return Json{{"p", polynomial_to_json(r.p)},
              {"q", polynomial_to_json(r.q)},
              {"sigma_char_poly", polynomial_to_json(r.sigma_char_poly)},
              {"p_divides", r.p_divides},
              {"q_divides", r.q_divides},
              {"p_equals_q", r.p_equals_q}};
}

Json analysis_report(const NamedSubstitution& named, const AnalysisOptions& options) {
  const Substitution& sigma = named.substitution;
  Json out;
  out["version"] = RAUZY_VERSION;
  out["substitution"] = substitution_to_json(sigma, named.name);
  const IntMatrix m = incidence_matrix(sigma);
  out["incidence_matrix"] = matrix_to_json(m);
  const PisotReport report = classify_pisot(sigma);
  out["char_poly"] = polynomial_to_json(report.char_poly);
  out["classification"] = pisot_report_to_json(report);
  try {
    const FixedPointSeed seed = find_fixed_point_seed(sigma);
    out["seed"] = {{"letter", sigma.alphabet().name(seed.letter)}, {"power", seed.power}};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoSeedFound) throw;
    out["seed"] = nullptr;
  }
  if (options.include_spectral && report.is_primitive && report.is_pisot) {
    try {
      const SpectralSplit split = spectral_split(m, options.tol, report.minimal_poly);
      out["spectral"] = spectral_to_json(split, projection_operator(split));
    } catch (const Error& e) {
      out["spectral"] = {{"error", to_string(e.kind())}, {"message", e.what()}};
    }
  }
  return out;
}

Json bpa_report(const Substitution& sigma1, const Substitution& sigma2, const BpaOutcome& outcome) {
  Json out;
  out["version"] = RAUZY_VERSION;
  if (const auto* sigma = std::get_if<PairSubstitution>(&outcome)) {
    out["status"] = "complete";
    out["sigma"] = pair_substitution_to_json(*sigma);
    const SigmaIncidence inc = sigma_incidence(*sigma);
    out["incidence_matrix"] = matrix_to_json(inc.matrix);
    out["char_poly"] = polynomial_to_json(inc.char_poly);
    if (sigma2 == reverse_substitution(sigma1))
      out["factor_report"] = factor_report_to_json(factor_conjecture_report(sigma1, *sigma));
  } else if (const auto* nf = std::get_if<PairSearchNotFound>(&outcome)) {
    out["status"] = "not_found";
    out["cutoff"] = nf->cutoff;
  } else {
    const auto& nt = std::get<BpaNonTermination>(outcome);
    out["status"] = "non_termination";
    out["limit"] = nt.limit == BpaLimit::MaxPairs ? "max_pairs" : "max_pair_length";
    out["limit_value"] = nt.limit_value;
    out["pairs_found"] = nt.pairs.size();
    Json partial = Json::object();
    for (std::size_t p = 0; p < nt.pairs.size(); ++p) {
      Json entry{{"top", sigma1.alphabet().format(nt.pairs[p].top)},
                 {"bottom", sigma1.alphabet().format(nt.pairs[p].bottom)}};
      if (nt.rules[p]) {
        Json rule = Json::array();
        for (Letter l : *nt.rules[p]) rule.push_back(pair_letter_name(l));
        entry["rule"] = std::move(rule);
      }
      partial[pair_letter_name(p)] = std::move(entry);
    }
    out["partial_pairs"] = std::move(partial);
  }
  return out;
}

}  // namespace rauzy
