#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apw/pipeline.hpp"

namespace apw {

/// Exit-code contract: shell pipelines can branch on mathematical verdicts.
enum ExitCode : int {
  kExitOk = 0,                 // success / certified positive
  kExitCertifiedNegative = 1,  // exact negative certificate
  kExitInputError = 2,         // usage, parse or precondition failure
  kExitUndetermined = 3,       // retry budgets exhausted
  kExitInternal = 4,           // violated internal assertion
};

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Text;
  int trials = 1;
  int degree_cap = 0;  // 0: operation default
  int max_attempts = 8;
};

int exit_code_for(const std::exception& error);

/// APW_LOG in {quiet, info, debug}; diagnostics go to stderr.
enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };
LogLevel log_level();
void log_info(const std::string& message);
void log_debug(const std::string& message);

int cmd_perp(const std::string& poly_text, const RunConfig& config,
             std::ostream& out);
int cmd_hf(const std::string& poly_text, const RunConfig& config,
           std::ostream& out);
int cmd_dual(const std::vector<std::string>& generator_texts, int socle_degree,
             const RunConfig& config, std::ostream& out);
int cmd_fermat(const std::string& poly_text, const RunConfig& config,
               std::ostream& out);
int cmd_apolar(const std::vector<std::string>& point_texts,
               const std::string& poly_text, const RunConfig& config,
               std::ostream& out);
int cmd_scroll(int a1, int a2, const RunConfig& config, std::ostream& out);
int cmd_invariants(int s, int a1, int a2, const RunConfig& config,
                   std::ostream& out);
int cmd_cut(const std::string& surface, int a1, int a2, int m,
            const RunConfig& config, std::ostream& out);
int cmd_verify(const std::string& kind, int s, int a1, int a2, int m,
               const std::string& regime, const RunConfig& config,
               std::ostream& out);

}  // namespace apw
