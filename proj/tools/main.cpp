// threshold-lab: analyze monotone simple games / switching functions.
// Subcommands: analyze, certify, enumerate, formulas, family, convert.
// Machine-readable JSON (or CSV) on stdout; --pretty indents the JSON.
// Exit codes: 0 verdict produced, 1 input error, 2 inconclusive at cap.

#include "tlab/cli_commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

namespace {

tlab::Json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return tlab::Json::parse(text);
  } catch (const tlab::Json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
}

std::map<std::string, std::string> parse_params(const std::string& s) {
  std::map<std::string, std::string> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--params entries must look like key=value");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int emit(const tlab::cli::CmdResult& res, bool pretty) {
  if (!res.csv.empty()) {
    std::cout << res.csv;
  } else {
    std::cout << res.output.dump(pretty ? 2 : -1) << "\n";
  }
  return res.exit_code;
}

int default_threads() {
  if (const char* env = std::getenv("THRESHOLD_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? (int)hw : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis toolkit for monotone simple games and threshold functions"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string file;
  std::string mode = "invariant";
  int max_k = 6;
  bool expand = false;

  auto* analyze = app.add_subcommand("analyze", "full report for one game");
  analyze->add_option("file", file, "game document (JSON), or - for stdin")->required();

  auto* certify = app.add_subcommand("certify", "weights or a non-weightedness certificate");
  certify->add_option("file", file, "game document (JSON), or - for stdin")->required();
  certify->add_option("--mode", mode, "certificate mode: invariant (default) or trade");
  certify->add_option("--max-k", max_k, "largest trade length searched (default 6)");
  certify->add_flag("--expand", expand, "also emit the player-level transform");

  tlab::cli::EnumerateArgs eargs;
  eargs.threads = default_threads();
  int opt_t = -1, opt_r = -1;
  auto* enumerate = app.add_subcommand("enumerate", "classify all complete games with n players");
  enumerate->add_option("--n", eargs.n, "number of players")->required();
  enumerate->add_option("--t", opt_t, "restrict to t equivalence classes");
  enumerate->add_option("--r", opt_r, "restrict to r shift-minimal rows");
  enumerate->add_option("--cap-k", eargs.cap_k, "robustness search cap (default 4)");
  enumerate->add_option("--mode", eargs.mode, "trade (default), invariant, or both");
  enumerate->add_option("--records", eargs.records_path, "write per-game JSON lines here");
  enumerate->add_option("--csv", eargs.csv_path, "CSV table output path, - for stdout");
  enumerate->add_option("--threads", eargs.threads, "worker threads (THRESHOLD_LAB_THREADS)");

  std::string which;
  int n_max = 0;
  auto* formulas = app.add_subcommand("formulas", "counting formulas vs enumeration");
  formulas->add_option("--check", which, "cg_r1 | wg_r1 | cg_t2 | cg_t1")->required();
  formulas->add_option("--n-max", n_max, "check all n up to this bound")->required();

  std::string family_name, family_params;
  auto* family = app.add_subcommand("family", "generate a named game family");
  family->add_option("name", family_name, "family name (see README)")->required();
  family->add_option("--params", family_params, "comma-separated key=value parameters");

  std::string to;
  auto* convert = app.add_subcommand("convert", "convert between document forms");
  convert->add_option("file", file, "game document (JSON), or - for stdin")->required();
  convert->add_option("--to", to, "explicit | invariants | weighted")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return emit(tlab::cli::cmd_analyze(read_document(file)), pretty);
    if (certify->parsed())
      return emit(tlab::cli::cmd_certify(read_document(file), mode, max_k, expand), pretty);
    if (enumerate->parsed()) {
      if (opt_t >= 0) eargs.t = opt_t;
      if (opt_r >= 0) eargs.r = opt_r;
      return emit(tlab::cli::cmd_enumerate(eargs), pretty);
    }
    if (formulas->parsed()) return emit(tlab::cli::cmd_formulas(which, n_max), pretty);
    if (family->parsed())
      return emit(tlab::cli::cmd_family(family_name, parse_params(family_params)), pretty);
    if (convert->parsed()) return emit(tlab::cli::cmd_convert(read_document(file), to), pretty);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
