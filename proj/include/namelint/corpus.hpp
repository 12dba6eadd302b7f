#pragma once

#include "namelint/ast.hpp"
#include "namelint/token.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

struct SourceFile {
  std::string id;
  Node ast;
  std::vector<Token> tokens;
};

struct LoadFailure {
  std::string id;
  std::string message;
};

/// Successfully loaded files, sorted by id, plus the ones that failed to
/// lex, parse or ingest.
struct Corpus {
  std::vector<SourceFile> files;
  std::vector<LoadFailure> failures;
};

/// Tokenizes and parses one subset source file.
SourceFile load_source(std::string id, std::string_view text);

/// Ingests one ESTree document line of a manifest: either
/// `{"fileId": ..., "ast": {...}, "tokens": [...]}` or a bare Program. The
/// optional tokens use the esprima shape ({type, value}); without them the
/// stream is recovered by printing the tree and lexing the result.
SourceFile load_ast_document(std::string_view line, std::string fallback_id);

/// A directory is searched recursively for *.js files (ids are the relative
/// paths) and *.jsonl manifests; a single file may be either kind. Parse
/// failures are collected, not thrown; a missing path throws Io.
Corpus load_corpus(const std::filesystem::path &path);

} // namespace namelint
