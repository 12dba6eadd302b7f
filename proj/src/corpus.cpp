#include "namelint/corpus.hpp"

#include "namelint/error.hpp"
#include "namelint/estree.hpp"
#include "namelint/lexer.hpp"
#include "namelint/parser.hpp"
#include "namelint/support.hpp"

#include <algorithm>

namespace namelint {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

SourceFile load_source(std::string id, std::string_view text) {
  SourceFile file;
  file.tokens = tokenize(text, id);
  file.ast = parse_tokens(file.tokens);
  file.id = std::move(id);
  return file;
}

namespace {

/// Re-lexes esprima-style tokens one at a time, so literal values come out
/// decoded exactly as the native lexer would decode them.
std::vector<Token> relex_tokens(const Json &tokens, const std::string &id) {
  if (!tokens.is_array())
    throw SchemaError("/tokens", "expected an array");
  std::vector<Token> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Json &t = tokens[i];
    const std::string path = "/tokens/" + std::to_string(i);
    if (!t.is_object() || !t.contains("value") || !t["value"].is_string())
      throw SchemaError(path + "/value", "expected a string");
    auto lexed = tokenize(t["value"].get<std::string>(), id);
    if (lexed.size() != 1)
      throw SchemaError(path, "token does not lex as a single subset token");
    Token tok = std::move(lexed.front());
    if (const auto loc = t.find("loc"); loc != t.end() && loc->is_object()) {
      const Json &start = loc->contains("start") ? (*loc)["start"] : *loc;
      tok.line = start.value("line", tok.line);
      tok.column = start.value("column", tok.column);
    }
    out.push_back(std::move(tok));
  }
  return out;
}

void load_manifest(const fs::path &path, const std::string &prefix,
                   Corpus &corpus) {
  const std::string text = read_file(path);
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (trim(line).empty())
      continue;
    const std::string fallback = prefix + "#" + std::to_string(line_no);
    try {
      corpus.files.push_back(load_ast_document(line, fallback));
    } catch (const Error &e) {
      corpus.failures.push_back({fallback, e.what()});
    }
  }
}

void load_one(const fs::path &path, const std::string &id, Corpus &corpus) {
  if (path.extension() == ".jsonl") {
    load_manifest(path, id, corpus);
    return;
  }
  try {
    corpus.files.push_back(load_source(id, read_file(path)));
  } catch (const Error &e) {
    corpus.failures.push_back({id, e.what()});
  }
}

} // namespace

SourceFile load_ast_document(std::string_view line, std::string fallback_id) {
  Json doc;
  try {
    doc = Json::parse(line);
  } catch (const nlohmann::json::parse_error &e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
  SourceFile file;
  file.id = std::move(fallback_id);
  const Json *ast = &doc;
  if (doc.is_object() && doc.contains("ast")) {
    if (const auto id = doc.find("fileId"); id != doc.end()) {
      if (!id->is_string())
        throw SchemaError("/fileId", "expected a string");
      file.id = id->get<std::string>();
    }
    ast = &doc["ast"];
  }
  file.ast = ingest_ast(*ast);
  if (file.ast.kind != NodeKind::Program)
    throw SchemaError("/type", "document root must be a Program");
  if (doc.is_object() && doc.contains("tokens"))
    file.tokens = relex_tokens(doc["tokens"], file.id);
  else
    file.tokens = tokenize(print_source(file.ast), file.id);
  return file;
}

Corpus load_corpus(const fs::path &path) {
  Corpus corpus;
  if (!fs::exists(path))
    throw Error(ErrorCode::Io, "corpus path does not exist: " + path.string());
  if (fs::is_directory(path)) {
    std::vector<fs::path> found;
    for (const auto &entry : fs::recursive_directory_iterator(path)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".js" || ext == ".jsonl"))
        found.push_back(entry.path());
    }
    std::sort(found.begin(), found.end());
    for (const auto &p : found)
      load_one(p, fs::relative(p, path).generic_string(), corpus);
  } else {
    load_one(path, path.filename().generic_string(), corpus);
  }
  std::stable_sort(corpus.files.begin(), corpus.files.end(),
                   [](const SourceFile &a, const SourceFile &b) {
                     return a.id < b.id;
                   });
  return corpus;
}

} // namespace namelint
