// The fockflow command-line surface: eval, field, zeros, images, verify,
// streamlines. A thin main() in tools/ forwards here so the layer is testable.
#ifndef FOCKFLOW_CLI_HPP
#define FOCKFLOW_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "fockflow/types.hpp"

namespace fockflow::cli {

// Exit codes: 0 success, 2 config/parse error, 3 domain error from the core
// modules, 4 I/O error. Failed `verify` batteries exit 1.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfigError = 2,
  kDomainError = 3,
  kIoError = 4,
};

struct JobConfig {
  enum class Command { eval, field, zeros, images, verify, streamlines };

  Command command = Command::eval;
  StateSpec state;
  std::optional<FlowRep> rep;
  Truncation trunc;

  // eval
  std::vector<cplx> eval_points;

  // field / streamlines view box
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  int nx = 100, ny = 100;

  // zeros
  std::optional<Region> region;

  // images
  int image_index = 4;  // M

  // verify
  bool verify_all_flag = false;
  std::vector<std::string> verify_names;

  // streamlines
  std::vector<cplx> seeds;
  double step = 1e-3;
  int n_steps = 10000;

  std::string out_path;  // empty = stdout
};

// Parse argv into a JobConfig (throws domain_error with a message on bad
// config; --help is handled internally and reported via the return code).
int run_cli(int argc, const char* const* argv);

// Execute one parsed job. Returns an ExitCode.
int run(const JobConfig& config);

}  // namespace fockflow::cli

#endif  // FOCKFLOW_CLI_HPP
