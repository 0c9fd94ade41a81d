// cli_commands.hpp
// Command implementations behind the CLI binary, exposed as functions so the
// test suites can drive them in-process. Exit codes: 0 verdict produced,
// 1 input error (thrown as std::invalid_argument), 2 inconclusive at cap.

#pragma once

#include "tlab/json_io.hpp"

#include <map>
#include <optional>
#include <string>

namespace tlab::cli {

struct CmdResult {
  Json output;        // JSON payload (printed to stdout)
  std::string csv;    // set instead of output for CSV-to-stdout runs
  int exit_code = 0;
};

CmdResult cmd_analyze(const Json& doc);

CmdResult cmd_certify(const Json& doc, const std::string& mode, int max_k, bool expand);

struct EnumerateArgs {
  int n = 0;
  std::optional<int> t;
  std::optional<int> r;
  int cap_k = 4;
  std::string mode = "trade"; // trade | invariant | both
  std::string records_path;   // JSON-lines records when set
  std::string csv_path;       // "-" = CSV to stdout
  int threads = 1;
};
CmdResult cmd_enumerate(const EnumerateArgs& args);

CmdResult cmd_formulas(const std::string& which, int n_max);

CmdResult cmd_family(const std::string& name, const std::map<std::string, std::string>& params);

CmdResult cmd_convert(const Json& doc, const std::string& to);

} // namespace tlab::cli
