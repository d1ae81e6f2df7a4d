#ifndef SCREENPARSE_ERROR_HPP_
#define SCREENPARSE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace screenparse {

/// Malformed input file. `line()` is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(format(source, line, message)),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& message) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line > 0) out += ":" + std::to_string(line);
    else out += ":<eof>";
    return out + ": " + message;
  }

  std::string source_;
  std::size_t line_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace screenparse

#endif  // SCREENPARSE_ERROR_HPP_
