#include "ewin/cubic/fixture.hpp"
#include "ewin/error.hpp"
#include "ewin/minima/families.hpp"
#include "ewin/suite/suite.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

namespace ewin {

using json = nlohmann::json;

namespace {

using Row = std::vector<std::string>;

std::string render(const Row& header, const std::vector<Row>& rows, TableFormat fmt) {
  if (fmt == TableFormat::csv) {
    std::ostringstream os;
    auto line = [&](const Row& r) {
      for (size_t i = 0; i < r.size(); ++i) {
        std::string f = r[i];
        if (f.find_first_of(",\"") != std::string::npos) {
          std::string q = "\"";
          for (char ch : f) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
          f = q + "\"";
        }
        os << (i ? "," : "") << f;
      }
      os << "\n";
    };
    line(header);
    for (auto& r : rows) line(r);
    return os.str();
  }
  json out{{"columns", header}, {"rows", json::array()}};
  for (auto& r : rows) {
    json o;
    for (size_t i = 0; i < r.size(); ++i) o[header[i]] = r[i];
    out["rows"].push_back(o);
  }
  return out.dump(2) + "\n";
}

}  // namespace

std::string emit_table(const std::string& which, long lo, long hi, TableFormat fmt, const std::string& fixture_dir) {
  std::vector<Row> rows;
  if (which == "Q") {
    if (lo <= hi && lo < -2) throw Error(Err::precondition, "Q_r needs r >= -2");
    for (long r = lo; r <= hi; ++r) {
      PointClass q = q69::q_family(r);
      Rat M = q69::q_family_norm(r);
      rows.push_back({std::to_string(r), std::to_string(q69::q_index(r)), rat_str(q.reduced.a.x()),
                      rat_str(q.reduced.a.y()), rat_str(M), decimal(M, 9, true)});
    }
    return render({"r", "n", "x", "y", "M", "M_decimal"}, rows, fmt);
  }
  if (which == "R") {
    if (lo <= hi && lo < 0) throw Error(Err::precondition, "R_r needs r >= 0");
    for (long r = lo; r <= hi; ++r) {
      PointClass R = q69::r_family(r);
      auto [n1, n2] = q69::r_family_norms(r);
      rows.push_back({std::to_string(r), rat_str(R.reduced.a.x()), rat_str(R.reduced.a.y()), rat_str(n1), rat_str(n2),
                      decimal(n1, 9, true), decimal(n2, 9, true)});
    }
    return render({"r", "x", "y", "N_eta", "N_2", "N_eta_decimal", "N_2_decimal"}, rows, fmt);
  }
  if (which == "TR") {
    namespace fs = std::filesystem;
    std::vector<std::pair<long, std::string>> files;
    if (lo <= hi) {
      if (!fs::is_directory(fixture_dir)) throw Error(Err::fixture_missing, "no fixture directory " + fixture_dir);
      for (auto& e : fs::directory_iterator(fixture_dir)) {
        std::string n = e.path().filename().string();
        if (n.rfind("disc", 0) != 0 || e.path().extension() != ".json") continue;
        long d = std::stol(n.substr(4));
        if (d >= lo && d <= hi) files.push_back({d, e.path().string()});
      }
    }
    std::sort(files.begin(), files.end());
    for (auto& [d, path] : files) {
      CubicFixture fx = load_cubic_fixture(path);
      CubicReport rep = verify_cubic_fixture(fx);
      std::string np = fx.prime ? int_str(fx.prime->norm()) : std::to_string(fx.table_np);
      rows.push_back({std::to_string(d), rat_str(fx.m1), np, rep.window.str(), rep.ok() ? "verified" : "FAILED"});
    }
    return render({"disc", "M1", "Np", "window", "status"}, rows, fmt);
  }
  throw Error(Err::usage, "unknown table " + which + " (Q, R or TR)");
}

}  // namespace ewin
