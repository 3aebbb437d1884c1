#include "seqexp/error.hpp"

namespace seqexp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::DivisionByZeroSeries: return "DivisionByZeroSeries";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::LeadingCoeffVanishes: return "LeadingCoeffVanishes";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::BranchAmbiguous: return "BranchAmbiguous";
        case ErrorCode::NotARoot: return "NotARoot";
        case ErrorCode::InsufficientTerms: return "InsufficientTerms";
        case ErrorCode::InconsistentInit: return "InconsistentInit";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::NonPositiveValue: return "NonPositiveValue";
        case ErrorCode::TableauBlowup: return "TableauBlowup";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::NoPositiveRoot: return "NoPositiveRoot";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::NonContiguousIndex: return "NonContiguousIndex";
        case ErrorCode::NetworkError: return "NetworkError";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::CacheMiss: return "CacheMiss";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace seqexp
