#include "sepsys/error.hpp"

namespace sepsys {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EndpointOutsideLevel: return "EndpointOutsideLevel";
    case ErrorCode::NotHomotypical: return "NotHomotypical";
    case ErrorCode::IdenticalEdges: return "IdenticalEdges";
    case ErrorCode::SharedVertex: return "SharedVertex";
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::TooManyExternals: return "TooManyExternals";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AssetCorrupt: return "AssetCorrupt";
    case ErrorCode::SearchBudgetExhausted: return "SearchBudgetExhausted";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::UnknownPathName: return "UnknownPathName";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sepsys
