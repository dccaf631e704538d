// One line per acceptance criterion: PASS only if every check in the group
// passes within the pinned wall-clock limit.

#include <chrono>
#include <cstdio>
#include <map>

#include "fixlab/suite.hpp"

int main() {
  using clock = std::chrono::steady_clock;
  // seconds, measured on a single core in a Release build
  const std::map<int, double> limits{{0, 1},  {1, 10},  {2, 5},   {3, 30}, {4, 5},
                                     {5, 300}, {6, 600}, {7, 300}, {8, 1}, {9, 60}};
  int failed = 0, total = 0;
  for (const auto& g : fixlab::check_groups()) {
    auto start = clock::now();
    auto checks = g.run();
    double secs = std::chrono::duration<double>(clock::now() - start).count();
    bool ok = !checks.empty();
    for (const auto& c : checks) {
      std::printf("  %s\n", fixlab::format_check(c).c_str());
      ok = ok && c.pass;
    }
    double limit = limits.at(g.number);
    bool in_time = secs <= limit;
    ++total;
    if (!(ok && in_time))
      ++failed;
    std::printf("criterion %d %s: %s (%.2f s, limit %.0f s%s)\n", g.number, g.title.c_str(),
                ok && in_time ? "PASS" : "FAIL", secs, limit, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("ACCEPTANCE %d/%d\n", total - failed, total);
  return failed == 0 ? 0 : 1;
}
