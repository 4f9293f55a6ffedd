#pragma once

#include <stdexcept>
#include <string>

namespace uifs {

// Raised when an operation would need digits at indices >= the context
// precision (or below -precision), instead of silently truncating.
class PrecisionError : public std::runtime_error {
  public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive enumeration would exceed the evaluation cap.
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed configs, digit text, ball text or report documents.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a claimed covering leaves part of the universe uncovered.
// For ball coverings the witness is an uncovered ball in its text form.
class CoveringError : public std::runtime_error {
  public:
    explicit CoveringError(const std::string& what, std::string witness_text_ = {})
        : std::runtime_error(what), witness_text(std::move(witness_text_)) {}

    std::string witness_text;
};

// Evaluation cap for exhaustive checks. Enumerations refuse to run past
// this instead of sampling silently.
struct Budget {
    std::uint64_t max_evaluations = 10'000'000;
};

} // namespace uifs
