#pragma once

// motivic-kit command front end. `run_cli` parses argv-style arguments;
// `run` executes an already parsed configuration. Both return the process
// exit status: 0 iff every assertion made by the command holds.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace motivic::cli {

enum class Format { table, json };

struct RunConfig {
  std::string command;
  Format format = Format::table;
  std::string output;  // empty: stdout

  std::size_t k = 1;
  std::vector<std::size_t> bounds;
  bool allow_empty = false;

  std::size_t x = 1;
  std::size_t y = 1;
  std::size_t bound = 2;
  bool show_all = false;

  std::string group = "C2";  // fixture name or path to a table file
  std::size_t max_gset = 3;

  std::string diagram;  // input file (aut, hocolim)
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> values;
  bool ks = false;

  std::vector<std::string> components;
  std::string ambient = "Xbar";
  int dim = 1;
  std::string cross;
};

/// Largest set size accepted by any command: 6, or MOTIVIC_KIT_MAX_SIZE.
std::size_t safety_bound();

/// Directory holding the shipped fixtures (MOTIVIC_KIT_DATA_DIR overrides).
std::string data_dir();

int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic::cli
