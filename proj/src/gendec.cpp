#include "blockcenter/gendec.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "blockcenter/exact_linalg.hpp"
#include "blockcenter/matrix_io.hpp"

namespace blockcenter::gendec {

namespace {

std::string entry_text(std::size_t i, std::size_t j, const Int& v) {
  return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + v.get_str();
}

// First entry where a and b differ, as text; empty when equal.
std::string first_difference(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j))
        return entry_text(i, j, a(i, j)) + ", expected " + b(i, j).get_str();
  return {};
}

void add(CheckReport& report, std::string name, std::string failure) {
  report.checks.push_back({std::move(name), failure.empty(), std::move(failure)});
}

}  // namespace

void validate(const SubsectionDatum& sub) {
  if (sub.cartan.rows() != sub.q.cols() || !sub.cartan.square())
    throw Error(ErrorKind::DimensionMismatch, "subsection " + sub.label + ": Cartan size differs from width of Q");
  if (!linalg::is_positive_definite(sub.cartan))
    throw Error(ErrorKind::NotPositiveDefinite, "subsection " + sub.label + ": Cartan matrix not positive definite");
  if (sub.q.transpose() * sub.q != sub.cartan)
    throw Error(ErrorKind::InvalidArgument, "subsection " + sub.label + ": Q^T Q differs from the Cartan matrix");
}

const SubsectionDatum& BlockDatum::subsection(const std::string& label) const {
  for (const auto& s : subsections)
    if (s.label == label) return s;
  throw Error(ErrorKind::DimensionMismatch, "no subsection labelled " + label);
}

ContributionMatrix contribution(const SubsectionDatum& sub, const Int& scale) {
  RatMatrix m = to_rat(sub.q) * linalg::rat_inverse(sub.cartan) * to_rat(sub.q.transpose());
  RatMatrix scaled = Rat(scale) * m;
  if (!is_integral(scaled))
    throw Error(ErrorKind::NotIntegral, "scale " + scale.get_str() + " does not clear the denominators of M^" +
                                            sub.label + " (smaller than the largest elementary divisor?)");
  return {sub.label, to_int(scaled)};
}

LambdaTable default_lambda_table() {
  return {{"1", "x", "y", "xy"}, IntMatrix::from_rows({{4, 4, 0, 0}, {4, 0, 4, 0}, {0, 4, 0, 4}})};
}

bool CheckReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* CheckReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

CheckReport check_star_congruences(const BlockDatum& block, const LambdaTable& lambda) {
  if (lambda.values.cols() != lambda.labels.size())
    throw Error(ErrorKind::DimensionMismatch, "lambda table width differs from its label count");
  std::vector<std::size_t> column_of(block.subsections.size());
  for (std::size_t s = 0; s < block.subsections.size(); ++s) {
    auto it = std::find(lambda.labels.begin(), lambda.labels.end(), block.subsections[s].label);
    if (it == lambda.labels.end())
      throw Error(ErrorKind::DimensionMismatch, "lambda table has no column for subsection " + block.subsections[s].label);
    column_of[s] = static_cast<std::size_t>(it - lambda.labels.begin());
  }
  if (lambda.labels.size() != block.subsections.size())
    throw Error(ErrorKind::DimensionMismatch, "lambda table labels differ from the subsections");

  std::vector<IntMatrix> scaled;
  for (const auto& sub : block.subsections) {
    if (sub.q.rows() != block.k) throw Error(ErrorKind::DimensionMismatch, "subsection " + sub.label + " has wrong row count");
    scaled.push_back(contribution(sub, block.scale).scaled);
  }

  CheckReport report;
  IntMatrix total(block.k, block.k);
  for (const auto& m : scaled) total = total + m;
  add(report, "sum of contribution matrices is the identity",
      first_difference(total, block.scale * IntMatrix::identity(block.k)));

  for (std::size_t t = 0; t < lambda.values.rows(); ++t) {
    IntMatrix combo(block.k, block.k);
    std::string name;
    for (std::size_t s = 0; s < scaled.size(); ++s) {
      const Int& w = lambda.values(t, column_of[s]);
      if (w == 0) continue;
      combo = combo + w * scaled[s];
      name += (name.empty() ? "" : " + ") + w.get_str() + "*M^" + block.subsections[s].label;
    }
    name = "lambda" + std::to_string(t + 1) + ": " + (name.empty() ? "0" : name) + " integral";
    std::string failure;
    for (std::size_t i = 0; i < block.k && failure.empty(); ++i)
      for (std::size_t j = 0; j < block.k; ++j) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), combo(i, j).get_mpz_t(), block.scale.get_mpz_t());
        if (r != 0) {
          failure = entry_text(i, j, combo(i, j)) + " of the scaled sum is not divisible by " + block.scale.get_str();
          break;
        }
      }
    add(report, std::move(name), std::move(failure));
  }
  return report;
}

CheckReport check_block_constraints(const BlockDatum& block, bool expect_odd) {
  CheckReport report;
  std::size_t width = 0;
  for (const auto& s : block.subsections) width += s.q.cols();
  add(report, "column count equals k",
      width == block.k ? "" : "subsection widths sum to " + std::to_string(width) + ", k = " + std::to_string(block.k));

  for (const auto& sub : block.subsections) {
    if (sub.q.rows() != block.k) {
      add(report, "Q^" + sub.label + " has k rows", "has " + std::to_string(sub.q.rows()) + " rows");
      return report;
    }
    add(report, "Q^" + sub.label + "^T Q^" + sub.label + " = C^" + sub.label,
        first_difference(sub.q.transpose() * sub.q, sub.cartan));
  }
  for (std::size_t a = 0; a < block.subsections.size(); ++a)
    for (std::size_t b = a + 1; b < block.subsections.size(); ++b) {
      const auto& u = block.subsections[a];
      const auto& v = block.subsections[b];
      IntMatrix prod = u.q.transpose() * v.q;
      add(report, "Q^" + u.label + "^T Q^" + v.label + " = 0", first_difference(prod, IntMatrix(prod.rows(), prod.cols())));
    }
  if (!report.all_passed()) return report;

  std::vector<IntMatrix> scaled;
  for (const auto& sub : block.subsections) {
    try {
      scaled.push_back(contribution(sub, block.scale).scaled);
    } catch (const Error& e) {
      add(report, "scale * M^" + sub.label + " integral", e.what());
      return report;
    }
  }
  for (std::size_t s = 0; s < scaled.size(); ++s) {
    const auto& label = block.subsections[s].label;
    add(report, "M^" + label + " idempotent", first_difference(scaled[s] * scaled[s], block.scale * scaled[s]));
    Int trace = 0;
    for (std::size_t i = 0; i < block.k; ++i) trace += scaled[s](i, i);
    Int expected = block.scale * static_cast<unsigned long>(block.subsections[s].q.cols());
    add(report, "trace M^" + label + " = l_" + label,
        trace == expected ? "" : "scaled trace " + trace.get_str() + ", expected " + expected.get_str());
    if (expect_odd) {
      std::string failure;
      for (std::size_t i = 0; i < block.k && failure.empty(); ++i)
        for (std::size_t j = 0; j < block.k; ++j)
          if (mpz_even_p(scaled[s](i, j).get_mpz_t())) {
            failure = entry_text(i, j, scaled[s](i, j)) + " is even";
            break;
          }
      add(report, "entries of " + block.scale.get_str() + "M^" + label + " odd", failure);
    }
  }
  for (std::size_t a = 0; a < scaled.size(); ++a)
    for (std::size_t b = a + 1; b < scaled.size(); ++b) {
      IntMatrix prod = scaled[a] * scaled[b];
      add(report, "M^" + block.subsections[a].label + " M^" + block.subsections[b].label + " = 0",
          first_difference(prod, IntMatrix(block.k, block.k)));
    }
  return report;
}

IntMatrix assemble(const BlockDatum& block) {
  std::size_t width = 0;
  for (const auto& s : block.subsections) {
    if (s.q.rows() != block.k) throw Error(ErrorKind::DimensionMismatch, "subsection " + s.label + " has wrong row count");
    width += s.q.cols();
  }
  for (std::size_t a = 0; a < block.subsections.size(); ++a)
    for (std::size_t b = a + 1; b < block.subsections.size(); ++b) {
      const auto& u = block.subsections[a];
      const auto& v = block.subsections[b];
      IntMatrix prod = u.q.transpose() * v.q;
      for (std::size_t i = 0; i < prod.rows(); ++i)
        for (std::size_t j = 0; j < prod.cols(); ++j)
          if (prod(i, j) != 0)
            throw Error(ErrorKind::OrthogonalityViolation,
                        "Q^" + u.label + "^T Q^" + v.label + " " + entry_text(i, j, prod(i, j)));
    }
  IntMatrix g(block.k, width);
  std::size_t col = 0;
  for (const auto& s : block.subsections)
    for (std::size_t j = 0; j < s.q.cols(); ++j, ++col)
      for (std::size_t i = 0; i < block.k; ++i) g(i, col) = s.q(i, j);
  return g;
}

BlockDatum split(const IntMatrix& g, const std::vector<std::pair<std::string, std::size_t>>& widths,
                 const Int& scale) {
  BlockDatum block;
  block.k = g.rows();
  block.scale = scale;
  std::size_t col = 0;
  for (const auto& [label, w] : widths) {
    if (col + w > g.cols()) throw Error(ErrorKind::DimensionMismatch, "subsection widths exceed matrix width");
    IntMatrix q = g.col_block(col, w);
    block.subsections.push_back({label, q, q.transpose() * q});
    col += w;
  }
  if (col != g.cols()) throw Error(ErrorKind::DimensionMismatch, "subsection widths do not cover the matrix");
  return block;
}

std::optional<SimultaneousMatch> match_simultaneous(const IntMatrix& a, const IntMatrix& b, bool allow_signs) {
  if (!a.square() || a.rows() != b.rows() || !b.square()) return std::nullopt;
  const std::size_t n = a.rows();
  // Row fingerprints: sorted absolute values (or values) must agree.
  auto fingerprint = [&](const IntMatrix& m, std::size_t i) {
    std::vector<Int> f;
    for (std::size_t j = 0; j < n; ++j) f.push_back(allow_signs ? Int(abs(m(i, j))) : m(i, j));
    std::sort(f.begin(), f.end());
    f.push_back(m(i, i));
    return f;
  };
  std::vector<std::vector<Int>> fa(n), fb(n);
  for (std::size_t i = 0; i < n; ++i) {
    fa[i] = fingerprint(a, i);
    fb[i] = fingerprint(b, i);
  }
  SimultaneousMatch m{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || fa[i] != fb[t]) continue;
      for (int s : allow_signs ? std::vector<int>{1, -1} : std::vector<int>{1}) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          Int expect = b(t, m.perm[j]) * (s * m.sign[j]);
          ok = a(i, j) == expect && a(j, i) == b(m.perm[j], t) * (s * m.sign[j]);
        }
        if (!ok) continue;
        m.perm[i] = t;
        m.sign[i] = s;
        used[t] = true;
        if (assign(i + 1)) return true;
        used[t] = false;
      }
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return m;
}

BlockDatum read_block(std::istream& in, const std::string& source) {
  io::LineReader lines(in, source);
  BlockDatum block;
  bool have_scale = false;
  SubsectionDatum* current = nullptr;
  bool have_q = false, have_cartan = false;
  auto finish = [&]() {
    if (current && (!have_q || !have_cartan))
      lines.fail("subsection " + current->label + " needs both Q and CARTAN blocks");
  };
  while (auto line = lines.next()) {
    auto tokens = io::split_ws(*line);
    if (tokens[0] == "SCALE") {
      if (tokens.size() != 2) lines.fail("expected `SCALE n`");
      block.scale = io::parse_int(tokens[1]);
      have_scale = true;
    } else if (line->front() == '[') {
      finish();
      if (line->back() != ']' || tokens.size() != 2 || tokens[0] != "[subsection")
        lines.fail("expected `[subsection LABEL]`");
      std::string label = tokens[1].substr(0, tokens[1].size() - 1);
      block.subsections.push_back({label, {}, {}});
      current = &block.subsections.back();
      have_q = have_cartan = false;
    } else if (tokens[0] == "Q" && tokens.size() == 1) {
      if (!current) lines.fail("Q block outside a subsection");
      current->q = io::read_int_matrix(lines);
      have_q = true;
    } else if (tokens[0] == "CARTAN" && tokens.size() == 1) {
      if (!current) lines.fail("CARTAN block outside a subsection");
      current->cartan = io::read_int_matrix(lines);
      have_cartan = true;
    } else {
      lines.fail("unexpected line `" + *line + "`");
    }
  }
  finish();
  if (!have_scale) lines.fail("missing `SCALE n` header");
  if (block.subsections.empty()) lines.fail("no subsections");
  block.k = block.subsections.front().q.rows();
  for (const auto& s : block.subsections) {
    if (s.q.rows() != block.k)
      throw Error(ErrorKind::DimensionMismatch, source + ": subsection " + s.label + " has a different row count");
    if (s.cartan.rows() != s.q.cols() || !s.cartan.square())
      throw Error(ErrorKind::DimensionMismatch, source + ": Cartan matrix of " + s.label + " has the wrong size");
  }
  return block;
}

BlockDatum load_block(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
  return read_block(f, path);
}

std::string format_block(const BlockDatum& block) {
  std::ostringstream out;
  out << "SCALE " << block.scale.get_str() << '\n';
  for (const auto& s : block.subsections) {
    out << "[subsection " << s.label << "]\nQ\n" << io::format_matrix(s.q) << "CARTAN\n" << io::format_matrix(s.cartan);
  }
  return out.str();
}

LambdaTable read_lambda_table(std::istream& in, const std::string& source) {
  io::LineReader lines(in, source);
  auto header = lines.next();
  if (!header) lines.fail("empty lambda table");
  auto tokens = io::split_ws(*header);
  if (tokens.empty() || tokens[0] != "LABELS") lines.fail("expected `LABELS ...` header");
  LambdaTable t;
  t.labels.assign(tokens.begin() + 1, tokens.end());
  t.values = io::read_int_matrix(lines);
  if (t.values.cols() != t.labels.size()) lines.fail("lambda table width differs from the label count");
  return t;
}

LambdaTable load_lambda_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
  return read_lambda_table(f, path);
}

}  // namespace blockcenter::gendec
