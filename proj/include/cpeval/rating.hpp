#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cpeval/domain.hpp"

namespace cpeval {

struct PassStats {
  long long n = 0;  // samples drawn
  long long c = 0;  // passing samples
  long long k = 1;  // submissions allowed
  void validate() const;
};

// Unbiased estimator 1 - C(n-c, k) / C(n, k), evaluated in log space.
double pass_at_k(long long n, long long c, long long k);

// P(A ranks better than B) for Elo-style ratings: 1 / (1 + 10^((rb-ra)/400)).
double win_prob(double rating_a, double rating_b);

// 1 + number of participants with strictly greater total score
// (standard competition ranking: ties share the better rank).
int rank_of_model(const ContestRecord& contest);

struct RatingFitOptions {
  double lo = 0.0;
  double hi = 4500.0;
  double tol = 0.1;
  // Ties between the model and a human contribute nothing to the likelihood.
};

// Per-contest averaged log-likelihood of the observed beat/lose outcomes at
// model rating R. Exposed so independent searches can check the optimizer.
double rating_log_likelihood(const std::vector<ContestRecord>& contests, double model_rating);

// Maximizes rating_log_likelihood by golden-section search; the per-pair
// terms are concave in R, so the objective is unimodal.
double estimate_rating(const std::vector<ContestRecord>& contests,
                       const RatingFitOptions& options = {});

// percentile: fraction of leaderboard ratings strictly below `rating`, x100.
// solve rate: mean over contests of (model solved / problems in contest).
std::pair<double, double> percentile_and_solve_rate(double rating,
                                                    const std::vector<double>& leaderboard,
                                                    const std::vector<ContestRecord>& contests);

struct ParticipantPoint {
  std::string handle;
  double rating = 0.0;
  double avg_solve_rate = 0.0;
  int contests_entered = 0;
};

// Solve-rate points for humans that entered at least `min_contests` of the
// given contests.
std::vector<ParticipantPoint> participant_solve_rates(const std::vector<ContestRecord>& contests,
                                                      int min_contests);

// One row of the per-problem breakdown table.
struct ProblemRow {
  std::string problem_id;
  double problem_rating = 0.0;
  long long n = 0;
  long long c = 0;
  double pass_at_1 = 0.0;
  double pass_at_k = 0.0;
  int failed_submissions = 0;
  bool solved = false;
  double imputed_score = 0.0;
};

nlohmann::json problem_table_json(const std::vector<ProblemRow>& rows);
std::string render_problem_table(const std::vector<ProblemRow>& rows);

}  // namespace cpeval
