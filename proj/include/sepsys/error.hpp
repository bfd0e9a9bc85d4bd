#pragma once

#include <stdexcept>
#include <string>

namespace sepsys {

enum class ErrorCode {
  EndpointOutsideLevel,
  NotHomotypical,
  IdenticalEdges,
  SharedVertex,
  InvalidEdge,
  InvalidPath,
  DuplicateName,
  TooSmall,
  DecompositionFailed,
  SearchExhausted,
  TooManyExternals,
  InvalidN,
  OutOfRange,
  AssetCorrupt,
  SearchBudgetExhausted,
  LabelOutOfRange,
  UnknownPathName,
  TooLarge,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sepsys
