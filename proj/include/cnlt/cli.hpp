#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cnlt/partitions.hpp"

namespace cnlt::cli {

enum class Output { Json, Csv, Text };

struct RunConfig {
  int n = 2;
  int k = 1;
  int j = 1;
  int max_degree = 30;
  Grading grading = Grading::Principal;
  Output output = Output::Text;
  bool list = false;
  bool construct = false;
  int jobs = 1;
  size_t dim_cap = 2000;
};

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

int cmd_dump_algebra(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen_conditions(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_count_leading_terms(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_qseries(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (without the program name) and dispatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cnlt::cli
