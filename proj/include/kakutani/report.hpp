#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kakutani/contfrac.hpp"
#include "kakutani/discrepancy.hpp"
#include "kakutani/enumerate.hpp"
#include "kakutani/renewal.hpp"
#include "kakutani/scheme.hpp"
#include "kakutani/spectral.hpp"

namespace kak {

struct NamedScheme {
  std::string name;
  Scheme scheme;
};

// The example schemes every experiment and the verification suite run on.
const std::vector<NamedScheme>& bundled_schemes();

// Fixed note emitted whenever the lattice-corrected constant is reported;
// the two candidate constants disagree by the factor span/((1-x)).
extern const char* const kLatticeConstantNote;

std::string real_str(const Real& v, int digits = 30);

// CSV exports; byte-deterministic for a fixed config.
std::string points_csv(const PointSet& ps, int digits = 12);
std::string ladder_csv(const LengthLadder& ladder, int digits = 12);
std::string count_csv(const Scheme& s, const std::vector<Rational>& grid, const Budget& budget = {},
                      int digits = 12);
std::string discrepancy_csv(const std::vector<DiscrepancyValue>& curve, int digits = 12);

nlohmann::json scheme_json(const Scheme& s);
nlohmann::json fit_json(const DecayFit& fit, int digits = 12);
nlohmann::json theorem_json(const TheoremCheckReport& rep, int digits = 12);
nlohmann::json zeros_json(const ZeroList& zeros, int digits = 30);

// The self-contained analysis document: rank, entropy, summability sweep,
// predicted constants (with the constant-discrepancy note), and the rank-one
// generating-function data or the higher-rank Diophantine data.
nlohmann::json analysis_report(const Scheme& s, const std::vector<Rational>& eps_sweep,
                               const Budget& budget = {}, mpfr_prec_t prec = 0, int digits = 30);

}  // namespace kak
