#include "namelint/error.hpp"

#include <utility>

namespace namelint {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::Lex:
    return "LexError";
  case ErrorCode::Parse:
    return "ParseError";
  case ErrorCode::Schema:
    return "SchemaError";
  case ErrorCode::EmptyCorpus:
    return "EmptyCorpus";
  case ErrorCode::EmptyDataset:
    return "EmptyDataset";
  case ErrorCode::CollisionExhaustion:
    return "CollisionExhaustion";
  case ErrorCode::UnknownToken:
    return "UnknownToken";
  case ErrorCode::ReservedToken:
    return "ReservedToken";
  case ErrorCode::DimensionMismatch:
    return "DimensionMismatch";
  case ErrorCode::NonFiniteLoss:
    return "NonFiniteLoss";
  case ErrorCode::InsufficientData:
    return "InsufficientData";
  case ErrorCode::ChecksumMismatch:
    return "ChecksumMismatch";
  case ErrorCode::Spec:
    return "SpecError";
  case ErrorCode::Format:
    return "FormatError";
  case ErrorCode::Io:
    return "IoError";
  case ErrorCode::Usage:
    return "UsageError";
  }
  return "Error";
}

LexError::LexError(int line, int column, const std::string &message)
    : Error(ErrorCode::Lex, std::to_string(line) + ":" +
                                std::to_string(column) + ": " + message),
      line_(line), column_(column), detail_(message) {}

ParseError::ParseError(int line, int column, std::string expected,
                       std::string found)
    : Error(ErrorCode::Parse, std::to_string(line) + ":" +
                                  std::to_string(column) + ": expected " +
                                  expected + ", found " + found),
      line_(line), column_(column), expected_(std::move(expected)),
      found_(std::move(found)) {}

SchemaError::SchemaError(std::string path, const std::string &message)
    : Error(ErrorCode::Schema, path + ": " + message), path_(std::move(path)) {}

} // namespace namelint
