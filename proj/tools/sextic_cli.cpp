// sextic: command-line front end.
//
// JSON goes to stdout, diagnostics to stderr. Exit codes:
//   0 success, 1 usage/parse/input error, 2 verification FAIL,
//   3 verification INCONCLUSIVE, 4 unrealizable tuple (witness).

#include "sextic/geography.hpp"
#include "sextic/json_io.hpp"
#include "sextic/lp_format.hpp"
#include "sextic/scrollar.hpp"
#include "sextic/splitting_loci.hpp"
#include "sextic/verifier.hpp"
#include "sextic/witness.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using sextic::json_io::Json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFail = 2;
constexpr int kInconclusive = 3;
constexpr int kUnrealizable = 4;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

sextic::ScrollarTuple sextic_tuple(const std::vector<int>& e) {
  if (e.size() != 5) throw sextic::InvalidTuple("expected five entries e1..e5");
  return sextic::ScrollarTuple(6, e);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int verdict_code(sextic::verify::Verdict v) {
  switch (v) {
    case sextic::verify::Verdict::Pass: return kOk;
    case sextic::verify::Verdict::Fail: return kFail;
    case sextic::verify::Verdict::Inconclusive: return kInconclusive;
  }
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scrollar invariants of degree-6 covers: classification, witnesses and exact LP verification"};
  app.require_subcommand(1);

  int degree = 0;
  std::vector<int> entries;
  auto* classify = app.add_subcommand("classify", "Region and realizability of a tuple");
  classify->add_option("d", degree, "Degree of the cover")->required();
  classify->add_option("e", entries, "Scrollar invariants e1..e_{d-1}")->required();

  int genus = 0;
  std::string format = "csv";
  auto* enumerate = app.add_subcommand("enumerate", "All degree-6 tuples of one genus, labelled by region");
  enumerate->add_option("--genus", genus, "Genus g (sum of entries = g + 5)")->required();
  enumerate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string export_dir;
  bool serial = false;
  bool drop_negative = false;
  auto* verify = app.add_subcommand("verify-lemma", "Solve every case LP of the dimension comparison");
  verify->add_option("--export", export_dir, "Also write the case .lp files to this directory");
  verify->add_flag("--serial", serial, "Solve cases on one thread");
  verify->add_flag("--drop-negativity", drop_negative, "Mutation check: omit the a1 <= -1 row");

  int e_max = 8;
  auto* brute = app.add_subcommand("brute-force", "Integer scan of the dimension comparison over P3");
  brute->add_option("--emax", e_max, "Largest e5 to scan")->check(CLI::PositiveNumber);

  auto* bad = app.add_subcommand("bad-types", "Bad splitting types for a tuple in P3");
  bad->add_option("e", entries, "e1..e5")->required()->expected(5);

  auto* wit = app.add_subcommand("witness", "Construction witness for a realizable tuple");
  wit->add_option("e", entries, "e1..e5")->required()->expected(5);

  std::string lp_file;
  auto* solve = app.add_subcommand("solve-lp", "Solve an .lp or .mps file exactly");
  solve->add_option("file", lp_file, "Input file (.lp or .mps)")->required();

  std::string out_dir;
  auto* exporter = app.add_subcommand("export-cases", "Write the case LPs as .lp files");
  exporter->add_option("dir", out_dir, "Destination directory")->required();

  int bound_genus = 0;
  auto* bounds = app.add_subcommand("bounds", "Spread bound 2(g+d-1)/d for semistable bundles");
  bounds->add_option("d", degree, "Degree")->required();
  bounds->add_option("g", bound_genus, "Genus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) {
      print(sextic::json_io::classification(sextic::ScrollarTuple(degree, entries)));
    } else if (*enumerate) {
      auto slice = sextic::geography::enumerate_by_genus(genus);
      std::cout << sextic::geography::emit(slice, format == "json" ? sextic::geography::Format::json
                                                                    : sextic::geography::Format::csv);
    } else if (*verify) {
      sextic::verify::CaseOptions options{.require_negative_a1 = !drop_negative};
      auto exec = serial ? sextic::verify::Execution::serial : sextic::verify::Execution::parallel;
      auto report = sextic::verify::run_verification(options, exec);
      Json j = sextic::json_io::report(report);
      if (!export_dir.empty()) j["exported"] = sextic::verify::export_cases(export_dir, options);
      print(j);
      if (report.verdict != sextic::verify::Verdict::Pass)
        std::cerr << "verification " << sextic::verify::to_string(report.verdict) << '\n';
      return verdict_code(report.verdict);
    } else if (*brute) {
      auto report = sextic::verify::brute_force_check(e_max);
      print(sextic::json_io::brute_force(report));
      return report.passed() ? kOk : kFail;
    } else if (*bad) {
      print(sextic::json_io::bad_types(sextic_tuple(entries)));
    } else if (*wit) {
      try {
        print(sextic::json_io::plan(sextic::witness::realization_witness(sextic_tuple(entries))));
      } catch (const sextic::witness::Unrealizable& e) {
        print(Json{{"error", "Unrealizable"}, {"message", e.what()}});
        std::cerr << "unrealizable: " << e.what() << '\n';
        return kUnrealizable;
      }
    } else if (*solve) {
      const std::string text = read_file(lp_file);
      const bool mps = lp_file.size() >= 4 && (lp_file.ends_with(".mps") || lp_file.ends_with(".MPS"));
      if (!mps && !lp_file.ends_with(".lp") && !lp_file.ends_with(".LP"))
        throw std::runtime_error("unknown file extension; expected .lp or .mps");
      auto instance = mps ? sextic::lp::parse_mps(text) : sextic::lp::parse_lp(text);
      print(sextic::json_io::outcome(instance, sextic::lp::solve(instance)));
    } else if (*exporter) {
      print(Json{{"directory", out_dir}, {"files", sextic::verify::export_cases(out_dir)}});
    } else if (*bounds) {
      print(Json{{"d", degree}, {"g", bound_genus}, {"bound", sextic::to_string(sextic::semistable_gap_bound(degree, bound_genus))}});
    }
  } catch (const sextic::witness::InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
