// Command-line front end. Talks to the engine exclusively through the C API
// in ltc.h. Exit codes: 0 success, 1 domain error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ltc.h"

namespace {

struct RegionOpts {
  int square = 0;
  std::vector<int> missing;  // R,C
  int missing_pos = 0;       // 1-indexed diagonal position
  std::string region_file;
};

void add_region_opts(CLI::App* cmd, RegionOpts& opts) {
  auto* sq = cmd->add_option("--square", opts.square, "Deficient square side");
  auto* mi = cmd->add_option("--missing", opts.missing,
                             "Missing cell as ROW,COL (0-indexed)")
                 ->delimiter(',')
                 ->expected(2);
  auto* mp = cmd->add_option("--missing-pos", opts.missing_pos,
                             "Missing cell as 1-indexed diagonal position");
  auto* rf = cmd->add_option("--region", opts.region_file,
                             "Region file ('#'/'.'/'*' grammar, '-' = stdin)");
  mi->needs(sq);
  mp->needs(sq);
  mi->excludes(mp);
  rf->excludes(sq);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

[[noreturn]] void die(ltc_status st) {
  std::cerr << "error"
            << (*ltc_last_error_code() ? std::string(" [") +
                                             ltc_last_error_code() + "]"
                                       : "")
            << ": " << ltc_last_error() << "\n";
  std::exit(st == LTC_ERR_DOMAIN ? 1 : 2);
}

void check(ltc_status st) {
  if (st != LTC_OK) die(st);
}

using RegionPtr = std::unique_ptr<ltc_region, decltype(&ltc_region_free)>;

RegionPtr make_region(const RegionOpts& opts) {
  ltc_region* r = nullptr;
  if (!opts.region_file.empty()) {
    check(ltc_region_parse(slurp(opts.region_file).c_str(), &r));
  } else if (opts.square) {
    int row, col;
    if (!opts.missing.empty()) {
      row = opts.missing[0];
      col = opts.missing[1];
    } else if (opts.missing_pos) {
      row = col = opts.missing_pos - 1;
    } else {
      std::cerr << "error: --square needs --missing or --missing-pos\n";
      std::exit(2);
    }
    check(ltc_region_square(opts.square, row, col, &r));
  } else {
    std::cerr << "error: give either --region or --square\n";
    std::exit(2);
  }
  return {r, ltc_region_free};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ltc_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_file);
  if (!out) {
    std::cerr << "error: cannot write " << out_file << "\n";
    std::exit(2);
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tiling engine for ribbon L-tetromino cracks"};
  app.require_subcommand(1);

  RegionOpts ropts;
  std::string tileset = "t4";
  std::string tiling_file, image_file, choices_file, out_file;
  std::string format = "ascii", suite = "quick";
  int threads = 1, side = 0, missing_pos = 0;
  unsigned long long limit = 0;
  bool as_json = false;

  auto* count = app.add_subcommand("count", "Count exact covers");
  add_region_opts(count, ropts);
  count->add_option("--tileset", tileset)->check(CLI::IsMember({"t4", "t4plus"}));
  count->add_option("--threads", threads)->check(CLI::PositiveNumber);
  count->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "Stream tilings as JSONL");
  add_region_opts(enumerate, ropts);
  enumerate->add_option("--tileset", tileset)
      ->check(CLI::IsMember({"t4", "t4plus"}));
  enumerate->add_option("--limit", limit, "Stop after this many tilings");

  auto* analyze =
      app.add_subcommand("analyze", "Decomposition, crack report and verdict");
  add_region_opts(analyze, ropts);
  analyze->add_option("--tiling", tiling_file, "Tiling JSON file ('-' = stdin)")
      ->required();

  auto* project =
      app.add_subcommand("project", "Half-scale domino image of a tiling");
  add_region_opts(project, ropts);
  project->add_option("--tiling", tiling_file)->required();

  auto* lift = app.add_subcommand("lift", "Rebuild a tiling from its image");
  lift->add_option("--image", image_file, "Image JSON file ('-' = stdin)")
      ->required();
  lift->add_option("--side", side)->required();
  lift->add_option("--missing-pos", missing_pos, "1-indexed diagonal position")
      ->required();
  lift->add_option("--choices", choices_file, "Lift choices JSON file");

  auto* dimers = app.add_subcommand("dimers", "Domino/monomer counters");
  int board = 0, deficient = 0, cap_m = 0, kast = 0;
  bool profile = false, include_k0 = false;
  dimers->add_option("--board", board, "Board size n");
  dimers->add_option("--deficient", deficient,
                     "Remove diagonal cell at this 1-indexed position");
  dimers->add_flag("--profile", profile,
                   "Diagonal monomer profile instead of a single count");
  dimers->add_option("--capital-n", cap_m, "Weighted sum over the 2m x 2m profile");
  dimers->add_flag("--include-k0", include_k0);
  dimers->add_option("--kasteleyn", kast, "Closed-form count for board n");

  auto* propagate =
      app.add_subcommand("propagate", "Extend a crack tiling by a width-4 band");
  add_region_opts(propagate, ropts);
  propagate->add_option("--tiling", tiling_file)->required();
  propagate->add_option("--tileset", tileset)
      ->check(CLI::IsMember({"t4", "t4plus"}));

  auto* render = app.add_subcommand("render", "ASCII or SVG picture");
  add_region_opts(render, ropts);
  render->add_option("--tiling", tiling_file);
  render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", out_file);

  auto* verify = app.add_subcommand("verify", "Run the self-verification suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_file, "Write the report JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (count->parsed()) {
    auto region = make_region(ropts);
    char* s = nullptr;
    check(ltc_count(region.get(), tileset.c_str(), threads, &s));
    std::string n = take(s);
    std::cout << (as_json ? "{\"count\": \"" + n + "\"}" : n) << "\n";
  } else if (enumerate->parsed()) {
    auto region = make_region(ropts);
    auto cb = [](const char* tiling_json, void*) -> int {
      std::cout << tiling_json << "\n";
      return 1;
    };
    check(ltc_enumerate(region.get(), tileset.c_str(), limit, cb, nullptr));
  } else if (analyze->parsed()) {
    auto region = make_region(ropts);
    char* s = nullptr;
    check(ltc_analyze(region.get(), slurp(tiling_file).c_str(), &s));
    std::cout << take(s) << "\n";
  } else if (project->parsed()) {
    auto region = make_region(ropts);
    char* s = nullptr;
    check(ltc_project(region.get(), slurp(tiling_file).c_str(), &s));
    std::cout << take(s) << "\n";
  } else if (lift->parsed()) {
    char* s = nullptr;
    std::string choices;
    if (!choices_file.empty()) choices = slurp(choices_file);
    check(ltc_lift(slurp(image_file).c_str(), side, missing_pos,
                   choices.empty() ? nullptr : choices.c_str(), &s));
    std::cout << take(s) << "\n";
  } else if (dimers->parsed()) {
    char* s = nullptr;
    if (cap_m) {
      check(ltc_capital_n(cap_m, include_k0 ? 1 : 0, &s));
    } else if (kast) {
      check(ltc_kasteleyn(kast, &s));
    } else if (!board) {
      std::cerr << "error: give --board, --capital-n or --kasteleyn\n";
      return 2;
    } else if (profile) {
      check(ltc_dimer_profile(board, &s));
    } else if (deficient) {
      check(ltc_dimer_deficient(board, deficient, &s));
    } else {
      check(ltc_dimer_count(board, &s));
    }
    std::cout << take(s) << "\n";
  } else if (propagate->parsed()) {
    auto region = make_region(ropts);
    char* s = nullptr;
    check(ltc_propagate(region.get(), slurp(tiling_file).c_str(),
                        tileset.c_str(), &s));
    std::cout << take(s) << "\n";
  } else if (render->parsed()) {
    auto region = make_region(ropts);
    char* s = nullptr;
    std::string tiling;
    if (!tiling_file.empty()) tiling = slurp(tiling_file);
    check(ltc_render(region.get(), tiling.empty() ? nullptr : tiling.c_str(),
                     format.c_str(), &s));
    emit(take(s), out_file);
  } else if (verify->parsed()) {
    char* s = nullptr;
    int failures = 0;
    check(ltc_verify(suite == "full" ? 1 : 0, threads, &s, &failures));
    std::string report = take(s);
    if (out_file.empty())
      std::cout << report << "\n";
    else
      emit(report, out_file);
    std::cerr << (failures ? "FAIL" : "PASS") << " (" << failures
              << " failing claims)\n";
    return failures ? 1 : 0;
  }
  return 0;
}
