#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kVerifiedFailure = 2,
};

/// A token that does not parse as a permutation entry.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& message)
      : std::runtime_error(message), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// "3,2,8,5,7,4,6,1,9" or, for n <= 9, "328574619". The empty string is the
/// empty permutation. Throws ParseError for malformed tokens and
/// InvalidPermutation for repeated or missing values.
Permutation parse_permutation(std::string_view text);

/// Patterns separated by '+', e.g. "132+213".
PatternSet parse_pattern_set(std::string_view text);

/// Reads PERMSTAT_MAX_EXHAUSTIVE, defaulting to 9.
std::size_t exhaustion_bound_from_env();

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
