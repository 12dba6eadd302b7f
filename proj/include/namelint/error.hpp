#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace namelint {

enum class ErrorCode : std::uint8_t {
  Lex,
  Parse,
  Schema,
  EmptyCorpus,
  EmptyDataset,
  CollisionExhaustion,
  UnknownToken,
  ReservedToken,
  DimensionMismatch,
  NonFiniteLoss,
  InsufficientData,
  ChecksumMismatch,
  Spec,
  Format,
  Io,
  Usage,
};

const char *to_string(ErrorCode code);

/// Base of every exception the library throws. The code decides how the
/// command-line driver maps the failure onto an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class LexError : public Error {
public:
  LexError(int line, int column, const std::string &message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string &detail() const noexcept { return detail_; }

private:
  int line_;
  int column_;
  std::string detail_;
};

class ParseError : public Error {
public:
  ParseError(int line, int column, std::string expected, std::string found);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string &expected() const noexcept { return expected_; }
  const std::string &found() const noexcept { return found_; }

private:
  int line_;
  int column_;
  std::string expected_;
  std::string found_;
};

class SchemaError : public Error {
public:
  SchemaError(std::string path, const std::string &message);

  const std::string &path() const noexcept { return path_; }

private:
  std::string path_;
};

} // namespace namelint
