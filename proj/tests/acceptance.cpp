// one line per acceptance criterion; exit status 0 iff all pass
// usage: acceptance [--only N] [report.json]
#include "ewin/suite/suite.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

int main(int argc, char** argv) {
  ewin::SuiteConfig cfg;
  cfg.fixture_dir = EWIN_FIXTURE_DIR;
  std::vector<int> ids;
  std::string out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc)
      ids.push_back(std::atoi(argv[++i]));
    else
      out = a;
  }
  if (ids.empty())
    for (int i = 1; i <= 13; ++i) ids.push_back(i);
  ewin::SuiteReport rep = ewin::run_criteria(ids, cfg);
  for (auto& c : rep.results) {
    std::printf("%s criterion %d: %s (%.2f s", c.pass ? "PASS" : "FAIL", c.criterion, c.name.c_str(), c.seconds);
    if (c.limit > 0) std::printf(", limit %.0f s", c.limit);
    std::printf(")\n");
    for (auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  if (!out.empty()) std::ofstream(out) << rep.to_json() << "\n";
  return rep.exit_code();
}
