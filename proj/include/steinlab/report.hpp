#pragma once

#include <string>
#include <vector>

#include "steinlab/blyth.hpp"
#include "steinlab/classify.hpp"
#include "steinlab/config.hpp"
#include "steinlab/risk.hpp"

namespace steinlab {

/// 17 significant digits, so CSV output is bit-stable under round-trip.
std::string fmt17(double v);

std::string classify_human(const MixingParams& p, const Verdict& v);
std::string classify_json(const MixingParams& p, const Verdict& v);

// CSV emitters, one per subcommand; all include a header row.
std::string marginal_csv(const MarginalEvaluator& ev, const std::vector<double>& w_grid);
std::string estimate_csv(const GeneralizedBayesEstimator& est,
                         const std::vector<double>& w_grid);
std::string sure_csv(const ShrinkageEstimator& est, const std::vector<double>& w_grid);
std::string tauberian_csv(const MarginalEvaluator& ev, const std::vector<double>& t_grid);
std::string dominate_csv(std::shared_ptr<const DominatorConstruction> dc,
                         const std::vector<double>& w_grid);
std::string risk_csv(const ShrinkageEstimator& est, const std::vector<double>& mu_grid,
                     long n, std::uint64_t seed);
std::string blyth_csv(const MarginalTable& table, BlythSequence::Kind kind,
                      const std::vector<double>& i_list);

}  // namespace steinlab
