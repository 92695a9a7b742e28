#include "blockcenter/matrix_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace blockcenter::io {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class T, class Parse>
Matrix<T> read_matrix(LineReader& in, Parse parse) {
  auto header = in.next();
  if (!header) in.fail("expected matrix header `ROWS COLS`");
  auto dims = split_ws(*header);
  if (dims.size() != 2) in.fail("matrix header must be `ROWS COLS`, got `" + *header + "`");
  long rows = 0, cols = 0;
  try {
    rows = std::stol(dims[0]);
    cols = std::stol(dims[1]);
  } catch (const std::exception&) {
    in.fail("matrix header must be two integers");
  }
  if (rows < 0 || cols < 1) in.fail("matrix dimensions out of range");
  Matrix<T> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (long i = 0; i < rows; ++i) {
    auto line = in.next();
    if (!line) in.fail("unexpected end of input inside matrix");
    auto tokens = split_ws(*line);
    if (tokens.size() != static_cast<std::size_t>(cols))
      in.fail("expected " + std::to_string(cols) + " entries, got " + std::to_string(tokens.size()));
    for (long j = 0; j < cols; ++j) {
      try {
        m(i, j) = parse(tokens[j]);
      } catch (const Error& e) {
        in.fail(e.what());
      }
    }
  }
  return m;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::optional<std::string> LineReader::next() {
  if (pushed_) {
    auto l = std::move(*pushed_);
    pushed_.reset();
    return l;
  }
  std::string raw;
  while (std::getline(in_, raw)) {
    ++line_no_;
    auto line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    return line;
  }
  return std::nullopt;
}

void LineReader::unread(std::string line) { pushed_ = std::move(line); }

void LineReader::fail(const std::string& what) const {
  throw Error(ErrorKind::ParseError, source_ + ":" + std::to_string(line_no_) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

Int parse_int(const std::string& token) {
  std::string t = token;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t == ".") return Int(0);
  bool ok = !t.empty() && std::all_of(t.begin() + (t[0] == '-' ? 1 : 0), t.end(),
                                      [](char c) { return c >= '0' && c <= '9'; });
  if (!ok || t == "-") throw Error(ErrorKind::ParseError, "not an integer: `" + token + "`");
  return Int(t, 10);
}

Rat parse_rat(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos) return Rat(parse_int(token));
  Int num = parse_int(token.substr(0, slash));
  Int den = parse_int(token.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in `" + token + "`");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

IntMatrix read_int_matrix(LineReader& in) { return read_matrix<Int>(in, parse_int); }
RatMatrix read_rat_matrix(LineReader& in) { return read_matrix<Rat>(in, parse_rat); }

IntMatrix parse_int_matrix(const std::string& text) {
  std::istringstream ss(text);
  LineReader in(ss);
  return read_int_matrix(in);
}

RatMatrix parse_rat_matrix(const std::string& text) {
  std::istringstream ss(text);
  LineReader in(ss);
  return read_rat_matrix(in);
}

IntMatrix load_int_matrix(const std::string& path) {
  std::istringstream ss(read_file(path));
  LineReader in(ss, path);
  return read_int_matrix(in);
}

RatMatrix load_rat_matrix(const std::string& path) {
  std::istringstream ss(read_file(path));
  LineReader in(ss, path);
  return read_rat_matrix(in);
}

std::string to_string(const Rat& value) {
  Rat q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const RatMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << to_string(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string pretty(const IntMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : m.data()) {
    cells.push_back(x == 0 ? "." : x.get_str());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace blockcenter::io
