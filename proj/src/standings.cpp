#include <map>
#include <string>
#include <vector>

#include "cpeval/domain.hpp"
#include "cpeval/error.hpp"
#include "cpeval/util.hpp"

namespace cpeval {

namespace {

bool parse_flag(const std::string& cell) {
  if (cell == "1" || cell == "true") return true;
  if (cell == "0" || cell == "false") return false;
  throw InputError("bad solved flag '" + cell + "' in standings");
}

}  // namespace

ContestRecord load_standings_csv(const std::filesystem::path& path) {
  auto rows = read_csv(path);
  if (rows.size() < 2) throw InputError("standings CSV needs a header and at least one row: " +
                                        path.string());
  const auto& header = rows.front();
  if (header.size() < 3 || header[0] != "handle" || header[1] != "rating" || header[2] != "score")
    throw InputError("standings CSV header must start with handle,rating,score");
  if ((header.size() - 3) % 3 != 0)
    throw InputError("standings CSV header has incomplete per-problem triple");

  ContestRecord rec;
  rec.contest_id = path.stem().string();
  std::vector<std::string> problem_ids;
  for (std::size_t col = 3; col < header.size(); col += 3) {
    const std::string& name = header[col];
    auto pos = name.rfind("_solved");
    if (pos == std::string::npos || pos + 7 != name.size())
      throw InputError("expected <id>_solved column, got '" + name + "'");
    std::string pid = name.substr(0, pos);
    if (header[col + 1] != pid + "_failed" || header[col + 2] != pid + "_score")
      throw InputError("per-problem columns for '" + pid + "' must be _solved,_failed,_score");
    problem_ids.push_back(pid);
  }
  rec.problem_ids = problem_ids;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& cells = rows[r];
    if (cells.size() != header.size())
      throw InputError("standings row " + std::to_string(r) + " has wrong cell count");
    Participant p;
    p.handle = cells[0];
    p.rating = std::stod(cells[1]);
    p.total_score = std::stod(cells[2]);
    for (std::size_t i = 0; i < problem_ids.size(); ++i) {
      HumanProblemResult res;
      res.solved = parse_flag(cells[3 + 3 * i]);
      res.failed_attempts = std::stoi(cells[4 + 3 * i]);
      res.score = std::stod(cells[5 + 3 * i]);
      p.problems[problem_ids[i]] = res;
    }
    rec.participants.push_back(std::move(p));
  }
  return rec;
}

}  // namespace cpeval
