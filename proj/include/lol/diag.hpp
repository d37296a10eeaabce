// Source spans and the error types thrown across the pipeline.
#pragma once

#include <stdexcept>
#include <string>

namespace lol {

struct Span {
  int line = 0;
  int col = 0;
};

inline std::string span_str(Span s) {
  return std::to_string(s.line) + ":" + std::to_string(s.col);
}

class LexError : public std::runtime_error {
public:
  LexError(Span s, const std::string& msg) : std::runtime_error(msg), span(s) {}
  Span span;
};

class ParseError : public std::runtime_error {
public:
  ParseError(Span s, const std::string& msg) : std::runtime_error(msg), span(s) {}
  Span span;
};

// Raised while a PE executes. The interpreter attaches the statement span
// and PE id at the point where they are known.
class RuntimeError : public std::runtime_error {
public:
  explicit RuntimeError(const std::string& msg, Span s = {}, int pe_id = -1)
      : std::runtime_error(msg), span(s), pe(pe_id) {}
  Span span;
  int pe;
};

// Internal control-flow signal: a blocked PE is being torn down because the
// run ended (another PE failed or a deadlock was declared). Never user-visible.
struct RunAborted {};

}  // namespace lol
