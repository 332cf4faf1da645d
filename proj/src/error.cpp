#include "cpath/error.hpp"

namespace cpath {

std::string_view errorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpace: return "InvalidSpace";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::IllComposed: return "IllComposed";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::BadPosition: return "BadPosition";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
    case ErrorCode::EndpointMismatch: return "EndpointMismatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::IllFormedMap: return "IllFormedMap";
    case ErrorCode::IllFormedLetter: return "IllFormedLetter";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Error";
}

}  // namespace cpath
