#include "lrw1/crosscheck.hpp"

#include "lrw1/error.hpp"
#include "lrw1/graph_io.hpp"
#include "lrw1/oracle.hpp"

namespace lrw1 {

CrosscheckReport crosscheck(const std::filesystem::path& fixtures, int max_n, const Recognizer& recognize) {
  if (max_n > oracle::kMaxLrwOrder) throw Error(ErrorCode::TooLarge, "crosscheck is limited by the exact oracle");
  CrosscheckReport report;
  for (int n = 1; n <= max_n; ++n) {
    CrosscheckRow row{n, 0, 0, 0};
    for (const Graph& g : oracle::load_fixture(fixtures, n)) {
      ++row.graphs;
      if (!is_connected(g)) continue;
      ++row.connected;
      const bool expected = oracle::brute_lrw(g) <= 1;
      std::string problem;
      try {
        const Certificate c = recognize(g);
        if (accepted(c)) ++row.accepted;
        if (accepted(c) != expected) {
          problem = expected ? "rejected but lrw <= 1" : "accepted but lrw = 2";
        } else if (auto verdict = verify_certificate(g, c); !verdict) {
          problem = "certificate rejected: " + verdict.reason;
        }
      } catch (const std::exception& e) {
        problem = std::string("recognizer threw: ") + e.what();
      }
      if (!problem.empty()) report.disagreements.push_back(to_graph6(g) + ": " + problem);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace lrw1
