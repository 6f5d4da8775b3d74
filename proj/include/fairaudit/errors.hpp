#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fairaudit {

// Stable error codes; one per contract violation the library reports.
enum class Errc {
  SchemaTooLarge,
  MissingPrediction,
  UnknownAttribute,
  UnknownColumn,
  UnknownSubgroup,
  DegenerateSubgroup,
  ConfusionRequired,
  SmoothingRequired,
  InvalidPrior,
  InvalidCost,
  MissingRocPoint,
  InfeasibleConstraint,
  ParseError,
  OutcomeNotBinary,
  PredictionOutOfRange,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, Errc code, const std::string& message) {
  if (!condition) raise(code, message);
}

}  // namespace fairaudit
