#include "fuscat/error.hpp"

namespace fuscat {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::KNotClosed: return "KNotClosed";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotAnIsomorphism: return "NotAnIsomorphism";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::QNotProper: return "QNotProper";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ChainBroken: return "ChainBroken";
    case ErrorCode::NotAlperin: return "NotAlperin";
    case ErrorCode::NotFullyKNormalized: return "NotFullyKNormalized";
    case ErrorCode::NotSylow: return "NotSylow";
    case ErrorCode::SylowFailed: return "SylowFailed";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::HomSetCapExceeded: return "HomSetCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IncompleteMap: return "IncompleteMap";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
  }
  return "Unknown";
}

}  // namespace fuscat
