#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "blockcenter/matrix.hpp"

namespace blockcenter::io {

/// Yields non-empty lines with `#` comment lines skipped; tracks line numbers
/// for error messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in, std::string source = "<input>")
      : in_(in), source_(std::move(source)) {}

  /// Next significant line, trimmed. nullopt at end of input.
  std::optional<std::string> next();
  /// Pushes a line back so the following next() returns it again.
  void unread(std::string line);

  std::size_t line_number() const noexcept { return line_no_; }
  const std::string& source() const noexcept { return source_; }
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
  std::optional<std::string> pushed_;
};

std::vector<std::string> split_ws(const std::string& line);

Int parse_int(const std::string& token);
Rat parse_rat(const std::string& token);

/// `ROWS COLS` header followed by ROWS lines of COLS entries.
IntMatrix read_int_matrix(LineReader& in);
RatMatrix read_rat_matrix(LineReader& in);

IntMatrix parse_int_matrix(const std::string& text);
RatMatrix parse_rat_matrix(const std::string& text);
IntMatrix load_int_matrix(const std::string& path);
RatMatrix load_rat_matrix(const std::string& path);

std::string format_matrix(const IntMatrix& m);
std::string format_matrix(const RatMatrix& m);

/// Aligned human-readable rendering, zeros printed as `.`.
std::string pretty(const IntMatrix& m);

std::string to_string(const Rat& q);

}  // namespace blockcenter::io
