#include "namelint/lexer.hpp"

#include "namelint/error.hpp"
#include "namelint/support.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace namelint {

const char *to_string(TokenKind kind) {
  switch (kind) {
  case TokenKind::Identifier:
    return "Identifier";
  case TokenKind::NumberLiteral:
    return "NumberLiteral";
  case TokenKind::StringLiteral:
    return "StringLiteral";
  case TokenKind::BooleanLiteral:
    return "BooleanLiteral";
  case TokenKind::NullLiteral:
    return "NullLiteral";
  case TokenKind::Keyword:
    return "Keyword";
  case TokenKind::Operator:
    return "Operator";
  case TokenKind::Punctuation:
    return "Punctuation";
  }
  return "?";
}

namespace {

constexpr std::array<std::string_view, 36> keywords = {
    "var",    "let",      "const",   "function", "return",  "if",
    "else",   "for",      "while",   "do",       "break",   "continue",
    "this",   "new",      "typeof",  "void",     "delete",  "in",
    "switch", "case",     "default", "throw",    "try",     "catch",
    "finally", "class",   "extends", "super",    "import",  "export",
    "yield",  "await",    "with",    "debugger", "of",      "static"};

// Longest first, so the first prefix match is the maximal munch.
constexpr std::string_view operators[] = {
    ">>>=", "===", "!==", ">>>", "<<=", ">>=", "==", "!=", "<=", "=>", ">=",
    "&&",   "||",  "++",  "--",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=",
    "^=",   "<<",  ">>",  "+",   "-",   "*",   "/",  "%",  "<",  ">",  "=",
    "!",    "~",   "&",   "|",   "^",   "?"};

constexpr std::string_view punctuation = "(){}[];,.:";

bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

bool digit(unsigned char c) { return c >= '0' && c <= '9'; }

void append_utf8(std::string &out, unsigned code) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

class Lexer {
public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size())
        return tokens;
      tokens.push_back(next());
    }
  }

private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 0;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string &message) const {
    throw LexError(line_, column_, message);
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
          c == '\v') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n')
          advance();
      } else if (c == '/' && peek(1) == '*') {
        const int line = line_, column = column_;
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/'))
          advance();
        if (pos_ >= src_.size())
          throw LexError(line, column, "unterminated block comment");
        advance(2);
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int column,
             std::string value = {}) {
    return Token{kind, std::string(src_.substr(start, pos_ - start)),
                 std::move(value), line, column};
  }

  Token next() {
    const std::size_t start = pos_;
    const int line = line_, column = column_;
    const auto c = static_cast<unsigned char>(peek());

    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(peek())))
        advance();
      std::string_view word = src_.substr(start, pos_ - start);
      if (word == "true" || word == "false")
        return make(TokenKind::BooleanLiteral, start, line, column,
                    std::string(word));
      if (word == "null")
        return make(TokenKind::NullLiteral, start, line, column, "null");
      if (word == "instanceof")
        return make(TokenKind::Operator, start, line, column);
      if (is_keyword(word))
        return make(TokenKind::Keyword, start, line, column);
      return make(TokenKind::Identifier, start, line, column);
    }
    if (digit(c) || (c == '.' && digit(static_cast<unsigned char>(peek(1)))))
      return number(start, line, column);
    if (c == '"' || c == '\'')
      return string(start, line, column);
    if (c == '`')
      fail("template literals are not supported");

    for (std::string_view op : operators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        return make(TokenKind::Operator, start, line, column);
      }
    }
    if (punctuation.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return make(TokenKind::Punctuation, start, line, column);
    }
    fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  Token number(std::size_t start, int line, int column) {
    double value = 0;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      advance(2);
      const std::size_t digits_start = pos_;
      while (std::isxdigit(static_cast<unsigned char>(peek())))
        advance();
      if (pos_ == digits_start)
        fail("malformed hex literal");
      for (char h : src_.substr(digits_start, pos_ - digits_start)) {
        int d = std::isdigit(static_cast<unsigned char>(h))
                    ? h - '0'
                    : std::tolower(static_cast<unsigned char>(h)) - 'a' + 10;
        value = value * 16 + d;
      }
    } else {
      while (digit(static_cast<unsigned char>(peek())))
        advance();
      if (peek() == '.') {
        advance();
        while (digit(static_cast<unsigned char>(peek())))
          advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        std::size_t ahead = 1;
        if (peek(1) == '+' || peek(1) == '-')
          ahead = 2;
        if (!digit(static_cast<unsigned char>(peek(ahead))))
          fail("malformed exponent");
        advance(ahead);
        while (digit(static_cast<unsigned char>(peek())))
          advance();
      }
      value = parse_real(src_.substr(start, pos_ - start));
    }
    if (ident_part(static_cast<unsigned char>(peek())))
      fail("identifier directly after number");
    return make(TokenKind::NumberLiteral, start, line, column,
                shortest_real(value));
  }

  Token string(std::size_t start, int line, int column) {
    const char quote = peek();
    advance();
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n')
        throw LexError(line, column, "unterminated string literal");
      char c = peek();
      if (c == quote) {
        advance();
        break;
      }
      if (c != '\\') {
        value += c;
        advance();
        continue;
      }
      advance();
      char e = peek();
      switch (e) {
      case 'n':
        value += '\n';
        break;
      case 't':
        value += '\t';
        break;
      case 'r':
        value += '\r';
        break;
      case 'b':
        value += '\b';
        break;
      case 'f':
        value += '\f';
        break;
      case 'v':
        value += '\v';
        break;
      case '0':
        value += '\0';
        break;
      case 'x':
      case 'u': {
        const std::size_t width = e == 'x' ? 2 : 4;
        unsigned code = 0;
        for (std::size_t i = 1; i <= width; ++i) {
          auto h = static_cast<unsigned char>(peek(i));
          if (!std::isxdigit(h))
            fail("malformed escape sequence");
          code = code * 16 + static_cast<unsigned>(
                                 std::isdigit(h) ? h - '0'
                                                 : std::tolower(h) - 'a' + 10);
        }
        advance(width);
        append_utf8(value, code);
        break;
      }
      case '\n':
        break;
      default:
        if (pos_ >= src_.size())
          throw LexError(line, column, "unterminated string literal");
        value += e;
      }
      advance();
    }
    return make(TokenKind::StringLiteral, start, line, column,
                std::move(value));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 0;
};

} // namespace

bool is_keyword(std::string_view word) {
  return std::find(keywords.begin(), keywords.end(), word) != keywords.end();
}

std::vector<Token> tokenize(std::string_view source, std::string_view) {
  return Lexer(source).run();
}

} // namespace namelint
