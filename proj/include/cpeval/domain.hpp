#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cpeval {

struct Limits {
  int time_ms = 2000;
  int memory_mib = 256;
};

// A judged test: exactly one of expected_output / checker_source for judged
// tests. checker_source is a path to a checker program's source, compiled as
// a guest and invoked as `checker <input> <output> <answer>`.
struct TestCase {
  std::string input;
  std::optional<std::string> expected_output;
  std::optional<std::filesystem::path> checker_source;
};

struct Subtask {
  std::string id;
  double points = 0.0;
  std::string constraints_text;
  std::vector<TestCase> tests;
  // Ids of subtasks this one strictly contains (its constraints subsume
  // theirs). Declared in the manifest, never inferred from text.
  std::vector<std::string> contains;
};

struct ProblemSpec {
  std::string id;
  std::string statement;
  std::vector<Subtask> subtasks;
  std::vector<TestCase> public_tests;
  Limits limits;
  std::string contest_id;

  const Subtask& subtask(const std::string& subtask_id) const;
  bool has_subtask(const std::string& subtask_id) const;
  double total_points() const;
  // Longest containment chain below the subtask; 0 when it contains nothing.
  int containment_depth(const std::string& subtask_id) const;
  // Invariant checks: non-empty subtasks, unique ids, points >= 0, acyclic
  // containment, limits within hard caps.
  void validate(const Limits& hard_caps) const;
};

struct SubmissionOutcome {
  std::string problem_id;
  std::map<std::string, double> per_subtask_score;
  int submission_index = 0;
};

// Human standings for one contest plus the model's results, as used by the
// rating pipeline.
struct HumanProblemResult {
  bool solved = false;
  int failed_attempts = 0;
  double score = 0.0;
};

struct Participant {
  std::string handle;
  double rating = 0.0;
  double total_score = 0.0;
  std::map<std::string, HumanProblemResult> problems;
};

struct ModelProblemResult {
  bool solved = false;
  int failed_attempts = 0;
  double score = 0.0;
};

struct ContestRecord {
  std::string contest_id;
  std::vector<std::string> problem_ids;
  std::vector<Participant> participants;
  double model_total_score = 0.0;
  std::map<std::string, ModelProblemResult> model_problems;
};

// Sum over problems and subtasks of the best score any submission achieved
// on that subtask. Missing subtasks contribute zero. Unknown problem or
// subtask ids are rejected by name.
double ioi_total_score(std::span<const ProblemSpec> problems,
                       std::span<const SubmissionOutcome> outcomes);

// Statement with every other subtask's constraint block removed and the
// target subtask's block kept verbatim. Blocks are delimited by
// `<!-- subtask:ID -->` ... `<!-- /subtask:ID -->` marker lines.
std::string build_subtask_document(const ProblemSpec& problem, const std::string& subtask_id);

// Median score of the human solvers with exactly `failed_attempts` failures;
// falls back to the median over all solvers when no human matches. Errors
// when nobody solved the problem.
double cf_problem_score(const std::string& problem_id, const ContestRecord& standings,
                        int failed_attempts);

// Problem directory loader: manifest.json + statement.md + test files.
ProblemSpec load_problem_dir(const std::filesystem::path& dir, const Limits& hard_caps);

// Standings CSV: handle,rating,score followed by per-problem triples
// <id>_solved,<id>_failed,<id>_score discovered from the header.
ContestRecord load_standings_csv(const std::filesystem::path& path);

}  // namespace cpeval
