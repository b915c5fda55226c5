#include "cpeval/domain.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cpeval/error.hpp"
#include "cpeval/util.hpp"

namespace cpeval {

using json = nlohmann::json;

const Subtask& ProblemSpec::subtask(const std::string& subtask_id) const {
  for (const Subtask& s : subtasks)
    if (s.id == subtask_id) return s;
  throw InputError("unknown subtask id '" + subtask_id + "' in problem '" + id + "'");
}

bool ProblemSpec::has_subtask(const std::string& subtask_id) const {
  return std::any_of(subtasks.begin(), subtasks.end(),
                     [&](const Subtask& s) { return s.id == subtask_id; });
}

double ProblemSpec::total_points() const {
  double total = 0.0;
  for (const Subtask& s : subtasks) total += s.points;
  return total;
}

int ProblemSpec::containment_depth(const std::string& subtask_id) const {
  std::function<int(const std::string&)> depth = [&](const std::string& sid) -> int {
    const Subtask& s = subtask(sid);
    int best = 0;
    for (const std::string& inner : s.contains) best = std::max(best, 1 + depth(inner));
    return best;
  };
  return depth(subtask_id);
}

void ProblemSpec::validate(const Limits& hard_caps) const {
  if (subtasks.empty()) throw InputError("problem '" + id + "' has no subtasks");
  std::set<std::string> ids;
  for (const Subtask& s : subtasks) {
    if (!ids.insert(s.id).second)
      throw InputError("duplicate subtask id '" + s.id + "' in problem '" + id + "'");
    if (s.points < 0.0)
      throw InputError("negative points on subtask '" + s.id + "' in problem '" + id + "'");
  }
  for (const Subtask& s : subtasks)
    for (const std::string& inner : s.contains) {
      if (!ids.count(inner))
        throw InputError("subtask '" + s.id + "' contains unknown subtask '" + inner + "'");
      if (inner == s.id)
        throw InputError("subtask '" + s.id + "' cannot contain itself");
    }
  // Cycle check on the containment relation.
  std::map<std::string, int> state;  // 0 unseen, 1 in progress, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& sid) {
    int& st = state[sid];
    if (st == 1) throw InputError("containment cycle through subtask '" + sid + "'");
    if (st == 2) return;
    st = 1;
    for (const std::string& inner : subtask(sid).contains) visit(inner);
    st = 2;
  };
  for (const Subtask& s : subtasks) visit(s.id);
  if (limits.time_ms <= 0 || limits.memory_mib <= 0)
    throw InputError("non-positive limits in problem '" + id + "'");
  if (limits.time_ms > hard_caps.time_ms || limits.memory_mib > hard_caps.memory_mib) {
    std::ostringstream ss;
    ss << "limits of problem '" << id << "' exceed hard caps (" << limits.time_ms << "ms/"
       << limits.memory_mib << "MiB vs " << hard_caps.time_ms << "ms/" << hard_caps.memory_mib
       << "MiB)";
    throw InputError(ss.str());
  }
  for (const Subtask& s : subtasks)
    for (const TestCase& t : s.tests)
      if (t.expected_output.has_value() == t.checker_source.has_value())
        throw InputError("test in subtask '" + s.id +
                         "' must have exactly one of expected output or checker");
}

double ioi_total_score(std::span<const ProblemSpec> problems,
                       std::span<const SubmissionOutcome> outcomes) {
  std::map<std::string, const ProblemSpec*> by_id;
  for (const ProblemSpec& p : problems) by_id[p.id] = &p;

  // best[problem][subtask] = max score over submissions
  std::map<std::string, std::map<std::string, double>> best;
  for (const SubmissionOutcome& o : outcomes) {
    auto it = by_id.find(o.problem_id);
    if (it == by_id.end()) throw InputError("unknown problem id '" + o.problem_id + "'");
    for (const auto& [sid, score] : o.per_subtask_score) {
      const Subtask& sub = it->second->subtask(sid);  // throws on unknown id
      if (score < 0.0 || score > sub.points + 1e-9)
        throw InputError("score out of range for subtask '" + sid + "'");
      double& slot = best[o.problem_id][sid];
      slot = std::max(slot, score);
    }
  }
  double total = 0.0;
  for (const auto& [pid, subs] : best)
    for (const auto& [sid, score] : subs) total += score;
  return total;
}

namespace {

std::string open_marker(const std::string& sid) { return "<!-- subtask:" + sid + " -->"; }
std::string close_marker(const std::string& sid) { return "<!-- /subtask:" + sid + " -->"; }

}  // namespace

std::string build_subtask_document(const ProblemSpec& problem, const std::string& subtask_id) {
  problem.subtask(subtask_id);  // throws when unknown
  std::string doc = problem.statement;
  for (const Subtask& s : problem.subtasks) {
    if (s.id == subtask_id) continue;
    const std::string open = open_marker(s.id);
    const std::string close = close_marker(s.id);
    while (true) {
      std::size_t begin = doc.find(open);
      if (begin == std::string::npos) break;
      std::size_t end = doc.find(close, begin);
      if (end == std::string::npos)
        throw InputError("unclosed constraint block for subtask '" + s.id + "'");
      end += close.size();
      // Swallow one trailing newline so removed blocks leave no blank hole.
      if (end < doc.size() && doc[end] == '\n') ++end;
      doc.erase(begin, end - begin);
    }
  }
  return doc;
}

double cf_problem_score(const std::string& problem_id, const ContestRecord& standings,
                        int failed_attempts) {
  std::vector<double> matching;
  std::vector<double> all_solvers;
  for (const Participant& p : standings.participants) {
    auto it = p.problems.find(problem_id);
    if (it == p.problems.end() || !it->second.solved) continue;
    all_solvers.push_back(it->second.score);
    if (it->second.failed_attempts == failed_attempts) matching.push_back(it->second.score);
  }
  if (all_solvers.empty())
    throw InputError("no human solved problem '" + problem_id + "' in contest '" +
                     standings.contest_id + "'; score cannot be imputed");
  if (matching.empty()) return median(std::move(all_solvers));
  return median(std::move(matching));
}

namespace {

TestCase load_test_entry(const json& entry, const std::filesystem::path& dir) {
  TestCase tc;
  if (!entry.contains("in")) throw InputError("test entry missing 'in' path");
  tc.input = read_file(dir / entry.at("in").get<std::string>());
  if (entry.contains("ans") && entry.contains("checker"))
    throw InputError("test entry has both 'ans' and 'checker'");
  if (entry.contains("ans"))
    tc.expected_output = read_file(dir / entry.at("ans").get<std::string>());
  else if (entry.contains("checker"))
    tc.checker_source = dir / entry.at("checker").get<std::string>();
  else
    throw InputError("test entry needs 'ans' or 'checker'");
  return tc;
}

}  // namespace

ProblemSpec load_problem_dir(const std::filesystem::path& dir, const Limits& hard_caps) {
  json manifest;
  try {
    manifest = json::parse(read_file(dir / "manifest.json"));
  } catch (const json::exception& e) {
    throw InputError("bad manifest in " + dir.string() + ": " + e.what());
  }
  ProblemSpec p;
  try {
    p.id = manifest.at("id").get<std::string>();
    p.contest_id = manifest.value("contest_id", std::string{});
    p.limits.time_ms = manifest.at("limits").at("time_ms").get<int>();
    p.limits.memory_mib = manifest.at("limits").at("memory_mib").get<int>();
    p.statement = read_file(dir / "statement.md");
    for (const json& t : manifest.value("public_tests", json::array()))
      p.public_tests.push_back(load_test_entry(t, dir));
    for (const json& s : manifest.at("subtasks")) {
      Subtask sub;
      sub.id = s.at("id").get<std::string>();
      sub.points = s.at("points").get<double>();
      sub.constraints_text = s.value("constraints", std::string{});
      for (const json& t : s.value("tests", json::array()))
        sub.tests.push_back(load_test_entry(t, dir));
      for (const json& c : s.value("contains", json::array()))
        sub.contains.push_back(c.get<std::string>());
      p.subtasks.push_back(std::move(sub));
    }
  } catch (const json::exception& e) {
    throw InputError("bad manifest in " + dir.string() + ": " + e.what());
  }
  p.validate(hard_caps);
  return p;
}

}  // namespace cpeval
