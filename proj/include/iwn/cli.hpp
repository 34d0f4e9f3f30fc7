#pragma once

#include <iosfwd>
#include <string>

#include "iwn/method.hpp"

namespace iwn::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string input;
  bool undirected = false;
  double threshold = 0.0;
  Method method = Method::Classic;
  Format format = Format::Text;
  bool trace = false;
  std::string output;  ///< empty: write to `out`
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kAlgorithmError = 2;

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the subcommands.
int main(int argc, char** argv);

}  // namespace iwn::cli
