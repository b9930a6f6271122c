#pragma once

#include <stdexcept>
#include <string>

namespace schub {

/// Thrown when an argument violates an operation's precondition
/// (malformed permutation, element outside the required quotient, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by brute-force enumerations when the rank exceeds the configured limit.
class RankLimitError : public std::runtime_error {
 public:
  RankLimitError(int rank, int limit)
      : std::runtime_error("rank " + std::to_string(rank) + " exceeds the enumeration limit " +
                           std::to_string(limit)),
        rank_(rank),
        limit_(limit) {}

  int rank() const noexcept { return rank_; }
  int limit() const noexcept { return limit_; }

 private:
  int rank_;
  int limit_;
};

}  // namespace schub
