#pragma once

#include <stdexcept>
#include <string>

namespace fuscat {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NoInverse,
  MalformedTable,
  NotBijective,
  OrderCapExceeded,
  NotASubgroup,
  KNotClosed,
  NotAPGroup,
  DomainMismatch,
  NotAnIsomorphism,
  NotContained,
  QNotProper,
  NotInKernel,
  SizeCapExceeded,
  ChainBroken,
  NotAlperin,
  NotFullyKNormalized,
  NotSylow,
  SylowFailed,
  BadFamily,
  HomSetCapExceeded,
  ParseError,
  ValidationError,
  IncompleteMap,
  CacheCorrupt,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fuscat
