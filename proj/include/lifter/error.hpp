#pragma once

#include <stdexcept>
#include <string>

namespace lifter {

// 1-based source location; line 0 means unknown.
struct SourcePos {
  int line = 0;
  int col = 0;
  bool known() const { return line > 0; }
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Textual error in a goal file, context document, assertion or invocation.
// what() renders as "origin:line:col: message" with the parts that are known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, SourcePos pos = {},
                      std::string origin = {})
      : Error(render(message, pos, origin)),
        message_(message),
        pos_(pos),
        origin_(std::move(origin)) {}

  const std::string& message() const { return message_; }
  SourcePos pos() const { return pos_; }
  const std::string& origin() const { return origin_; }

 private:
  static std::string render(const std::string& message, SourcePos pos,
                            const std::string& origin) {
    std::string out;
    if (!origin.empty()) out += origin + ":";
    if (pos.known()) {
      out += std::to_string(pos.line) + ":" + std::to_string(pos.col) + ":";
    }
    if (!out.empty()) out += " ";
    return out + message;
  }

  std::string message_;
  SourcePos pos_;
  std::string origin_;
};

}  // namespace lifter
