#include "pathforge/error.hpp"

namespace pathforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalCharacter: return "IllegalCharacter";
    case ErrorCode::UnbalancedWord: return "UnbalancedWord";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::MalformedPair: return "MalformedPair";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

}  // namespace pathforge
