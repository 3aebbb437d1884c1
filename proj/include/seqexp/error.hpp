#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqexp {

enum class ErrorCode {
    ZeroConstantTerm,
    DivisionByZeroSeries,
    BudgetExceeded,
    LeadingCoeffVanishes,
    NonIntegral,
    BranchAmbiguous,
    NotARoot,
    InsufficientTerms,
    InconsistentInit,
    SingularSystem,
    DivisionByZero,
    NonPositiveValue,
    TableauBlowup,
    IllConditioned,
    NoPositiveRoot,
    DomainError,
    PrecisionTooLow,
    RankDeficient,
    MalformedLine,
    NonContiguousIndex,
    NetworkError,
    NotFound,
    CacheMiss,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace seqexp
