#include "kakutani/report.hpp"

#include <sstream>

#include "kakutani/errors.hpp"

namespace kak {

const char* const kLatticeConstantNote =
    "lattice case: x^n*|A_{x^n}| converges to span/(H*(1-x)); the continuous-limit "
    "value 1/H applies only to the non-lattice case and is reported alongside for "
    "comparison";

const std::vector<NamedScheme>& bundled_schemes() {
  static const std::vector<NamedScheme> schemes = [] {
    std::vector<NamedScheme> v;
    v.push_back({"dyadic", Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 2)}})});
    v.push_back({"kakutani-third", Scheme::build({AtomSpec{rat(1, 3)}, AtomSpec{rat(2, 3)}})});
    v.push_back({"half-sixth-third",
                 Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 6)}, AtomSpec{rat(1, 3)}})});
    v.push_back({"half-geometric",
                 Scheme::build({AtomSpec{rat(1, 2)},
                                GeoTailSpec{rat(1, 3), rat(1, 3), TailDirection::ascending}})});
    v.push_back(
        {"powers-of-two",
         Scheme::build({GeoTailSpec{rat(1, 2), rat(1, 2), TailDirection::ascending}})});
    v.push_back({"half-quarter-eighths",
                 Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 4)}, AtomSpec{rat(1, 8)},
                                AtomSpec{rat(1, 8)}})});
    v.push_back({"half-third-sixth",
                 Scheme::build({AtomSpec{rat(1, 2)}, AtomSpec{rat(1, 3)}, AtomSpec{rat(1, 6)}})});
    return v;
  }();
  return schemes;
}

std::string real_str(const Real& v, int digits) { return v.str(digits); }

std::string points_csv(const PointSet& ps, int digits) {
  std::ostringstream out;
  out << "exact,decimal\n";
  for (const auto& p : ps.points) out << to_pq(p) << "," << to_decimal(p, digits) << "\n";
  return out.str();
}

std::string ladder_csv(const LengthLadder& ladder, int digits) {
  std::ostringstream out;
  out << "n,exact,decimal\n";
  for (std::size_t i = 0; i < ladder.values.size(); ++i)
    out << i << "," << to_pq(ladder.values[i]) << "," << to_decimal(ladder.values[i], digits)
        << "\n";
  return out.str();
}

namespace {

// |X_lambda| without enumerating: |A_lambda| - |A_{lambda/alpha_1}| when a
// symbol fixes 0, |A_lambda| otherwise.
Integer count_X(const Scheme& s, const Rational& lambda, const Budget& budget) {
  Integer a = count_A(s, lambda, budget);
  if (auto z = s.zero_symbol()) return a - count_A(s, lambda / s.alpha(*z), budget);
  return a;
}

}  // namespace

std::string count_csv(const Scheme& s, const std::vector<Rational>& grid, const Budget& budget,
                      int digits) {
  PredictedLimit limit = predicted_limit(s);
  std::ostringstream out;
  out << "lambda_exact,lambda_float,count_A,count_X,lambda_times_A,predicted_constant\n";
  for (const auto& lam : grid) {
    Integer a = count_A(s, lam, budget);
    Integer x = count_X(s, lam, budget);
    Rational la = lam * Rational(a);
    out << to_pq(lam) << "," << to_decimal(lam, digits) << "," << a.get_str() << "," << x.get_str()
        << "," << to_decimal(la, digits) << "," << real_str(limit.constant, digits) << "\n";
  }
  return out.str();
}

std::string discrepancy_csv(const std::vector<DiscrepancyValue>& curve, int digits) {
  std::ostringstream out;
  out << "lambda_exact,lambda_float,n_points,extreme_exact,extreme_float,star_float\n";
  for (const auto& d : curve)
    out << to_pq(d.lambda) << "," << to_decimal(d.lambda, digits) << "," << d.n_points << ","
        << to_pq(d.extreme) << "," << to_decimal(d.extreme, digits) << ","
        << to_decimal(d.star, digits) << "\n";
  return out.str();
}

nlohmann::json scheme_json(const Scheme& s) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : s.blocks()) {
    if (const auto* a = std::get_if<AtomSpec>(&b)) {
      blocks.push_back({{"kind", "atom"}, {"length", to_pq(a->length)}});
    } else {
      const auto& t = std::get<GeoTailSpec>(b);
      blocks.push_back({{"kind", "tail"},
                        {"first", to_pq(t.first)},
                        {"ratio", to_pq(t.ratio)},
                        {"dir", t.direction == TailDirection::ascending ? "asc" : "desc"}});
    }
  }
  return {{"blocks", blocks}};
}

nlohmann::json fit_json(const DecayFit& fit, int digits) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& [lam, val] : fit.grid)
    grid.push_back({{"lambda", to_pq(lam)}, {"value", to_pq(val)}});
  return {{"model", fit.model == DecayModel::geometric ? "geometric" : "log_power"},
          {"rate", fit.rate},
          {"residual", fit.residual},
          {"points_used", fit.points_used},
          {"grid", grid}};
}

nlohmann::json theorem_json(const TheoremCheckReport& rep, int digits) {
  nlohmann::json j{{"rank", rep.rank},
                   {"lattice", rep.lattice},
                   {"fit", fit_json(rep.fit, digits)},
                   {"consistent", rep.consistent},
                   {"note", rep.note}};
  if (rep.rho_hat) j["rho_hat"] = *rep.rho_hat;
  if (rep.rho_admissible_lo) j["rho_admissible_lo"] = *rep.rho_admissible_lo;
  if (rep.r_hat) j["r_hat"] = *rep.r_hat;
  if (rep.p_star) j["p_star"] = *rep.p_star;
  if (rep.p_hat) j["p_hat"] = *rep.p_hat;
  return j;
}

nlohmann::json zeros_json(const ZeroList& zeros, int digits) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& z : zeros.zeros)
    list.push_back({{"re", real_str(z.center.re, digits)},
                    {"im", real_str(z.center.im, digits)},
                    {"rad", real_str(z.radius, digits)},
                    {"multiplicity", z.multiplicity}});
  return {{"zeros", list},
          {"total_count", zeros.total_count},
          {"box",
           {{"re_lo", to_pq(zeros.box.re_lo)},
            {"re_hi", to_pq(zeros.box.re_hi)},
            {"im_lo", to_pq(zeros.box.im_lo)},
            {"im_hi", to_pq(zeros.box.im_hi)}}}};
}

nlohmann::json analysis_report(const Scheme& s, const std::vector<Rational>& eps_sweep,
                               const Budget& budget, mpfr_prec_t prec, int digits) {
  mpfr_prec_t p = prec > 0 ? prec : Real::default_prec();
  nlohmann::json j;
  j["schema_version"] = 1;
  j["scheme"] = scheme_json(s);
  j["precision_bits"] = static_cast<long>(p);

  RankReport rank = rank_report(s);
  nlohmann::json jr{{"rank", rank.rank}};
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : rank.generators) gens.push_back(g);
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& pr : rank.prime_basis) primes.push_back(pr.get_str());
  jr["generators"] = gens;
  jr["prime_basis"] = primes;
  if (rank.minimal_base) {
    jr["minimal_base"] = to_pq(*rank.minimal_base);
    nlohmann::json exps = nlohmann::json::array();
    for (const auto& e : rank.block_exponents)
      exps.push_back({{"start", e.start}, {"step", e.step}});
    jr["block_exponents"] = exps;
  }
  j["rank"] = jr;

  EntropyValue h = entropy(s, p);
  j["entropy"] = {{"nats", real_str(h.value, digits)},
                  {"precision_bits", static_cast<long>(p)},
                  {"terms", h.exact_terms}};

  nlohmann::json summ = nlohmann::json::array();
  for (const auto& eps : eps_sweep)
    summ.push_back({{"epsilon", to_pq(eps)}, {"value", real_str(eps_summability(s, eps, p), digits)}});
  j["summability"] = summ;

  PredictedLimit limit = predicted_limit(s, p);
  nlohmann::json jl{{"mode", limit.lattice ? "lattice" : "non_lattice"},
                    {"constant", real_str(limit.constant, digits)},
                    {"one_over_H", real_str(limit.one_over_H, digits)}};
  if (limit.lattice) {
    jl["base"] = to_pq(*limit.base);
    jl["span"] = real_str(limit.span, digits);
    jl["note"] = kLatticeConstantNote;
  }
  j["renewal"] = jl;

  if (rank.rank == 1) {
    PowerBasis pb = power_basis(s, p);
    RationalFunction rf = denominator_series(pb);
    nlohmann::json num = nlohmann::json::array(), den = nlohmann::json::array();
    for (const auto& c : rf.num) num.push_back(c.get_str());
    for (const auto& c : rf.den) den.push_back(c.get_str());
    SeriesCoeffs b = taylor_g(pb, 16);
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i < b.values.size(); ++i) {
      if (b.exact)
        coeffs.push_back(to_pq(b.rational[i]));
      else
        coeffs.push_back(real_str(b.values[i], digits));
    }
    // Best (largest) R* over the sweep, all values reported.
    nlohmann::json rs = nlohmann::json::array();
    Real best = Real::of(0L, p);
    Rational best_eps = eps_sweep.empty() ? Rational(1, 4) : eps_sweep.front();
    for (const auto& eps : eps_sweep) {
      Real r = radius_R_star(pb, eps, p);
      rs.push_back({{"epsilon", to_pq(eps)}, {"R_star", real_str(r, digits)}});
      if (r > best) {
        best = r;
        best_eps = eps;
      }
    }
    nlohmann::json js{{"denominator_series_num", num},
                      {"denominator_series_den", den},
                      {"taylor_b", coeffs},
                      {"R_star_sweep", rs}};
    if (!eps_sweep.empty()) {
      auto interval = rho_bound(pb, best_eps, p);
      js["best_epsilon"] = to_pq(best_eps);
      js["rho_interval"] = {{"lo", real_str(interval.first, digits)}, {"hi", "1"}};
    }
    j["spectral"] = js;
  } else {
    // Diophantine data for the first independent pair.
    for (std::uint32_t a = 0; a < s.blocks().size() && !j.contains("diophantine"); ++a)
      for (std::uint32_t b = a + 1; b < s.blocks().size(); ++b) {
        Symbol sa{a, 0}, sb{b, 0};
        if (s.alpha(sa) == s.alpha(sb)) continue;
        if (multiplicatively_dependent(s.alpha(sa), s.alpha(sb))) continue;
        BadApproxEstimate est = estimate_bad_approx_r(s, sa, sb, Integer(1000000000L), p);
        nlohmann::json q = nlohmann::json::array();
        for (const auto& a_i : est.quotients) q.push_back(a_i.get_str());
        nlohmann::json jd{{"alpha_j", to_pq(est.alpha_j)},
                          {"alpha_k", to_pq(est.alpha_k)},
                          {"quotients", q},
                          {"certified_up_to", est.certified_up_to.get_str()},
                          {"r_hat", real_str(est.r_hat, digits)},
                          {"claim", "empirical lower-confidence estimate within the certified "
                                    "denominator range, not a proof"}};
        if (est.r_hat < Real::of(Rational(1, 2), p))
          jd["P_star"] = real_str(predicted_P_star(est.r_hat), digits);
        j["diophantine"] = jd;
        break;
      }
  }
  return j;
}

}  // namespace kak
