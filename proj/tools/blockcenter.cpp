// blockcenter: command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blockcenter/center.hpp"
#include "blockcenter/errors.hpp"
#include "blockcenter/exact_linalg.hpp"
#include "blockcenter/fdalgebra.hpp"
#include "blockcenter/gendec.hpp"
#include "blockcenter/matrix_io.hpp"
#include "blockcenter/plesken.hpp"
#include "blockcenter/presentation.hpp"
#include "blockcenter/report.hpp"
#include "blockcenter/resolution.hpp"
#include "blockcenter/verify_paper.hpp"

using namespace blockcenter;
using report::Json;
using report::Report;
using report::to_json;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0x5eed;
  std::size_t steps = res::kDefaultSteps;
  std::string data_dir = BLOCKCENTER_DEFAULT_DATA_DIR;
};

std::string join_ints(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::DataFileMissing, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// "3/16*5,11/16*3" or "3/16,3/16,11/16".
std::vector<Rat> parse_contributions(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t count = 1;
    if (auto star = item.find('*'); star != std::string::npos) {
      count = std::stoul(item.substr(star + 1));
      item = item.substr(0, star);
    }
    out.insert(out.end(), count, io::parse_rat(item));
  }
  return out;
}

/// Element of an algebra: "0,1,0,1" (coefficients) or "x+x^2" (labels).
fd::Vec parse_element(const fd::FinDimAlgebra& a, const std::string& text) {
  fd::Vec v = a.zero();
  if (text.find(',') != std::string::npos || (text.size() == 1 && std::isdigit(static_cast<unsigned char>(text[0])) && a.dim() == 1)) {
    std::stringstream in(text);
    std::string t;
    std::size_t i = 0;
    while (std::getline(in, t, ',')) {
      if (i >= a.dim()) throw Error(ErrorKind::DimensionMismatch, "too many coefficients in " + text);
      v[i++] = a.field().reduce(std::stoll(t));
    }
    if (i != a.dim()) throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(a.dim()) + " coefficients");
    return v;
  }
  std::stringstream in(text);
  std::string label;
  while (std::getline(in, label, '+')) {
    auto it = std::find(a.labels().begin(), a.labels().end(), label);
    if (it == a.labels().end()) throw Error(ErrorKind::InvalidArgument, "no basis element labelled " + label);
    auto k = static_cast<std::size_t>(it - a.labels().begin());
    v[k] = a.field().add(v[k], 1);
  }
  return v;
}

std::string describe_subspace(const fd::FinDimAlgebra& a, const gf::Subspace& s) {
  std::string out = "dim " + std::to_string(s.dim());
  for (const auto& b : s.basis()) out += "\n  " + fd::format_element(a, b);
  return out;
}

Json subspace_json(const fd::FinDimAlgebra& a, const gf::Subspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(fd::format_element(a, b));
  return {{"dim", std::to_string(s.dim())}, {"basis", basis}};
}

Report cmd_snf(const std::string& file) {
  Report r;
  r.command = "snf";
  const IntMatrix a = io::load_int_matrix(file);
  const auto snf = linalg::smith_normal_form(a);
  const bool ok = snf.u * a * snf.v == snf.d && linalg::is_unimodular(snf.u) && linalg::is_unimodular(snf.v);
  auto& s = r.add("smith normal form", ok);
  s.lines.push_back("elementary divisors " + join_ints(linalg::elementary_divisors(a)));
  s.lines.push_back("D =\n" + io::pretty(snf.d));
  s.lines.push_back("U =\n" + io::pretty(snf.u));
  s.lines.push_back("V =\n" + io::pretty(snf.v));
  s.data = {{"eldiv", to_json(linalg::elementary_divisors(a))}, {"d", to_json(snf.d)}, {"u", to_json(snf.u)}, {"v", to_json(snf.v)}};
  r.finalize();
  return r;
}

Report cmd_kernel(const std::string& file) {
  Report r;
  r.command = "kernel";
  const IntMatrix a = io::load_int_matrix(file);
  const IntMatrix k = linalg::integer_kernel_basis(a);
  const bool ok = k.rows() == 0 || (a * k.transpose()).is_zero();
  auto& s = r.add("integer kernel", ok);
  s.lines.push_back("rank " + std::to_string(k.rows()));
  if (k.rows() > 0) s.lines.push_back(io::pretty(k));
  s.data = {{"basis", to_json(k)}};
  r.finalize();
  return r;
}

Report cmd_solve_gram(const std::string& file, std::optional<std::size_t> rows, const std::string& contrib, bool no_parity) {
  Report r;
  r.command = "solve-gram";
  const IntMatrix c = io::load_int_matrix(file);
  if (!rows) {
    const auto cands = plesken::enumerate_rows(c, !no_parity);
    const Int scale = plesken::gram_scale(c);
    auto& s = r.add("row enumeration");
    std::map<plesken::IntVector, Rat> classes;
    Json list = Json::array();
    for (const auto& cand : cands) {
      classes.emplace(plesken::permutation_sign_representative(cand.r), cand.contribution);
      list.push_back({{"row", to_json(cand.r)}, {"contribution", cand.contribution.get_str()}});
    }
    s.lines.push_back(std::to_string(cands.size()) + " rows up to sign; scale " + scale.get_str());
    for (const auto& [rep, q] : classes) s.lines.push_back(join_ints(rep) + "  " + io::to_string(q));
    Json cls = Json::array();
    for (const auto& [rep, q] : classes) cls.push_back({{"row", to_json(rep)}, {"contribution", q.get_str()}});
    s.data = {{"scale", scale.get_str()}, {"rows", list}, {"classes", cls}};
    r.finalize();
    return r;
  }
  std::optional<std::vector<Rat>> constraints;
  if (!contrib.empty()) constraints = parse_contributions(contrib);
  const auto classes = plesken::enumerate_solutions(c, *rows, constraints);
  auto& s = r.add("solution classes", !classes.empty());
  s.lines.push_back(std::to_string(classes.size()) + " classes");
  Json list = Json::array();
  for (const auto& cls : classes) {
    s.lines.push_back(cls.label + ":\n" + io::pretty(cls.canonical));
    Json contribs = Json::array();
    for (const auto& q : cls.contributions) contribs.push_back(q.get_str());
    list.push_back({{"label", cls.label}, {"eldiv", to_json(cls.eldiv)}, {"canonical", to_json(cls.canonical)}, {"contributions", contribs}});
  }
  s.data = {{"classes", list}};
  r.finalize();
  return r;
}

Report cmd_ordinary(const Globals& g, const std::string& gram, std::size_t rows) {
  Report r;
  r.command = "ordinary16x3";
  const IntMatrix c = io::load_int_matrix(gram.empty() ? g.data_dir + "/paper/cx.txt" : gram);
  const auto cls = plesken::enumerate_ordinary(c, rows);
  const auto contribs = plesken::row_contributions(cls.canonical, c);
  Rat trace = 0;
  for (const auto& q : contribs) trace += q;
  const bool ok = trace == Rat(static_cast<long>(c.cols()));
  auto& s = r.add("ordinary decomposition matrix", ok);
  s.lines.push_back(std::to_string(cls.canonical.rows()) + " x " + std::to_string(cls.canonical.cols()) +
                    ", each row contributes " + io::to_string(contribs.front()) + ", trace " + io::to_string(trace));
  s.lines.push_back(io::pretty(cls.canonical));
  s.data = {{"matrix", to_json(cls.canonical)}, {"row_contribution", contribs.front().get_str()}, {"trace", trace.get_str()}};
  r.finalize();
  return r;
}

Report cmd_contrib(const std::string& q_file, const std::string& cartan_file, const std::string& compare) {
  Report r;
  r.command = "contrib";
  const IntMatrix q = io::load_int_matrix(q_file);
  const IntMatrix c = io::load_int_matrix(cartan_file);
  const Int scale = plesken::gram_scale(c);
  const auto m = gendec::contribution({"u", q, c}, scale).scaled;
  bool odd = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) odd = odd && mpz_odd_p(m(i, j).get_mpz_t());
  auto& s = r.add("contribution matrix", odd);
  s.lines.push_back(scale.get_str() + " M =\n" + io::pretty(m));
  s.lines.push_back(std::string("all entries odd: ") + (odd ? "yes" : "no"));
  s.data = {{"scale", scale.get_str()}, {"scaled", to_json(m)}};
  if (!compare.empty()) {
    const auto target = io::load_int_matrix(compare);
    auto match = gendec::match_simultaneous(m, target, true);
    auto& cs = r.add("simultaneous signed permutation match", match.has_value());
    if (match) {
      std::vector<std::size_t> perm = match->perm;
      std::string signs;
      for (int s : match->sign) signs += s > 0 ? '+' : '-';
      cs.lines.push_back("row i -> row " + join_sizes(perm));
      cs.lines.push_back("row signs " + signs);
      cs.data = {{"perm", to_json(perm)}, {"signs", signs}};
    }
  }
  r.finalize();
  return r;
}

Report cmd_check_block(const std::string& file, const std::string& lambda_file) {
  Report r;
  r.command = "check-block";
  const auto block = gendec::load_block(file);
  const auto lambda = lambda_file.empty() ? gendec::default_lambda_table() : gendec::load_lambda_table(lambda_file);
  for (const auto& rep : {gendec::check_block_constraints(block), gendec::check_star_congruences(block, lambda)}) {
    for (const auto& c : rep.checks) {
      auto& s = r.add(c.name, c.passed);
      if (!c.detail.empty()) s.lines.push_back(c.detail);
    }
  }
  r.finalize();
  return r;
}

RatMatrix load_q(const std::string& file) {
  const std::string text = slurp(file);
  if (text.find("SCALE") != std::string::npos) {
    std::istringstream in(text);
    return to_rat(gendec::assemble(gendec::read_block(in, file)).transpose());
  }
  return io::parse_rat_matrix(text);
}

Report cmd_center(const std::string& q_file, unsigned p, const std::string& match) {
  Report r;
  r.command = "center";
  const RatMatrix q = load_q(q_file);
  const auto lat = center::center_basis(q);
  auto& d = r.add("diagonal basis");
  d.lines.push_back("rank " + std::to_string(lat.rank()) + "; column j is the diagonal of Q^-1 beta_j Q\n" +
                    io::pretty(lat.basis_diagonals));
  d.data = {{"basis_diagonals", to_json(lat.basis_diagonals)}};

  const auto mc = center::reduce_mod_p(lat, p);
  const auto alg = mc.algebra();
  auto& sc = r.add("structure constants mod " + std::to_string(p));
  sc.lines.push_back(fd::format_algebra(alg));
  Json table = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j)
      for (std::size_t k = 0; k < alg.dim(); ++k)
        if (alg.sc(i, j, k) != 0)
          table.push_back({std::to_string(i), std::to_string(j), std::to_string(k), std::to_string(alg.sc(i, j, k))});
  sc.data = {{"p", std::to_string(p)}, {"unit_index", std::to_string(mc.unit_index)}, {"table", table}};

  r.add("commutative and associative", alg.is_associative() && alg.is_commutative());

  const auto inv = pres::local_invariants(alg);
  auto& lw = r.add("Loewy series");
  lw.lines.push_back("dim J^n " + join_sizes(inv.radical_dims) + ", Loewy vector " + join_sizes(inv.loewy) +
                     ", Loewy length " + std::to_string(inv.loewy_length));
  lw.data = {{"radical_dims", to_json(inv.radical_dims)}, {"loewy", to_json(inv.loewy)}};

  if (!match.empty()) {
    auto id = pres::parse_presentation_id(match);
    if (!id) throw Error(ErrorKind::InvalidArgument, "unknown presentation " + match);
    const auto& pr = pres::presentation(*id);
    auto w = pres::match_presentation(alg, pr);
    auto& ms = r.add("match " + pr.name, w.has_value());
    if (w) {
      ms.lines.push_back(pres::format_witness(alg, pr, *w));
      Json images = Json::object();
      for (std::size_t k = 0; k < pr.generators.size(); ++k) images[pr.generators[k]] = fd::format_element(alg, w->images[k]);
      ms.data = {{"witness", images}};
    } else {
      ms.lines.push_back("no match");
    }
  }
  r.finalize();
  return r;
}

Report cmd_algebra(const Globals& g, const std::string& file, const std::string& op, unsigned n, const std::string& of) {
  Report r;
  r.command = "algebra";
  const auto a = fd::load_algebra(file);
  auto named = [&](const std::string& what) -> gf::Subspace {
    if (what == "center") return fd::center(a);
    if (what == "radical" || what == "J") return fd::local_radical(a);
    if (what == "J2") return fd::product_space(a, fd::local_radical(a), fd::local_radical(a));
    if (what == "socle") return fd::socle(a, fd::Side::TwoSided, fd::local_radical(a));
    if (what == "commutator") return fd::commutator_space(a);
    throw Error(ErrorKind::InvalidArgument, "unknown subspace " + what);
  };
  if (op == "loewy") {
    const auto series = fd::radical_series(a, fd::local_radical(a));
    auto& s = r.add("Loewy series");
    s.lines.push_back("dim J^n " + join_sizes(fd::series_dims(series)) + ", Loewy vector " +
                      join_sizes(fd::loewy_vector(series)));
    s.data = {{"radical_dims", to_json(fd::series_dims(series))}, {"loewy", to_json(fd::loewy_vector(series))}};
  } else if (op == "socle") {
    const auto j = fd::local_radical(a);
    for (auto [side, name] : {std::pair{fd::Side::Left, "left socle"}, std::pair{fd::Side::Right, "right socle"},
                              std::pair{fd::Side::TwoSided, "socle"}}) {
      auto& s = r.add(name);
      const auto soc = fd::socle(a, side, j);
      s.lines.push_back(describe_subspace(a, soc));
      s.data = subspace_json(a, soc);
    }
  } else if (op == "center" || op == "commutator") {
    const auto sub = op == "center" ? fd::center(a) : fd::commutator_space(a);
    auto& s = r.add(op == "center" ? "center" : "commutator space");
    s.lines.push_back(describe_subspace(a, sub));
    s.data = subspace_json(a, sub);
  } else if (op == "tn") {
    const auto t = fd::kulshammer_T(a, n);
    auto& s = r.add("T_" + std::to_string(n));
    s.lines.push_back(describe_subspace(a, t));
    s.data = subspace_json(a, t);
  } else if (op == "symform") {
    const auto search = fd::search_symmetrizing_form(a, g.seed);
    auto& s = r.add("symmetrizing form", search.form.has_value());
    if (search.form) {
      s.lines.push_back("s = " + fd::format_element(a, search.form->coeffs) + " (coefficients on the basis)");
      s.data = {{"coeffs", fd::format_element(a, search.form->coeffs)}};
    } else {
      s.lines.push_back(search.exhaustive ? "NotSymmetric: no nondegenerate form vanishes on [A,A]"
                                          : "NotSymmetric (low confidence): none found in 1000 samples");
    }
  } else if (op == "perp") {
    const auto form = fd::find_symmetrizing_form(a, g.seed);
    const auto u = named(of);
    const auto perp = fd::perp_space(a, form, u);
    auto& s = r.add(of + "^perp");
    s.lines.push_back(describe_subspace(a, perp));
    s.data = subspace_json(a, perp);
    const bool back = fd::perp_space(a, form, perp) == u;
    r.add("(U^perp)^perp = U", back);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown --op " + op);
  }
  r.finalize();
  return r;
}

Report cmd_resolve(const Globals& g, const std::string& file, const std::string& x, const std::string& y,
                   const std::string& z) {
  Report r;
  r.command = "resolve";
  const auto a = fd::load_algebra(file);
  if (!x.empty() || !z.empty()) {
    if (x.empty() || z.empty()) throw Error(ErrorKind::InvalidArgument, "--x and --z go together");
    std::optional<fd::Vec> yv;
    if (!y.empty()) yv = parse_element(a, y);
    const auto h = res::hypothesis_check(a, parse_element(a, x), parse_element(a, z), yv);
    auto& s = r.add(yv ? "hypotheses xz = zx = yz = zy = 0, independent mod J^2"
                       : "hypotheses xz = zx = z^2 = 0, independent mod J^2",
                    h.pass);
    s.lines = h.failures;
  }
  const auto trace = res::minimal_resolution_dims(a, g.steps);
  const auto fib = trace.fib();
  auto& t = r.add("minimal resolution of the simple module");
  std::string ns = "n = (", fs = "f = (";
  Json nj = Json::array(), fj = Json::array();
  for (std::size_t i = 0; i < trace.n.size(); ++i) {
    ns += (i ? "," : "") + std::to_string(trace.n[i]);
    fs += (i ? "," : "") + std::to_string(fib[i]);
    nj.push_back(std::to_string(trace.n[i]));
    fj.push_back(std::to_string(fib[i]));
  }
  t.lines.push_back(ns + ")");
  t.lines.push_back(fs + ")");
  if (trace.aborted) t.lines.push_back("stopped by the module size guard");
  t.data = {{"n", nj}, {"f", fj}, {"terminated", trace.terminated}, {"aborted", trace.aborted}};
  const auto cert = res::fibonacci_certificate(trace);
  auto& c = r.add("Fibonacci growth", cert.pass);
  c.lines.push_back(cert.describe());
  r.finalize();
  return r;
}

Report cmd_verify(const Globals& g, const std::vector<std::string>& only) {
  return verify_paper(VerifyOptions{g.data_dir, only});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for generalized decomposition matrices, block centers and local algebras"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--seed", g.seed, "Seed for randomized searches");
  app.add_option("--steps", g.steps, "Resolution steps");
  app.add_option("--data", g.data_dir, "Data directory (paper/ and algebras/)");

  std::string file, op = "loewy", of = "center", match, lambda_file, compare, contrib_list, gram, x, y, z;
  std::optional<std::size_t> rows;
  std::size_t ord_rows = 0;
  unsigned p = 2, tn = 1;
  bool no_parity = false;
  std::vector<std::string> only;
  std::function<Report()> run;

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("file", file, "Matrix file")->required();
  snf->callback([&] { run = [&] { return cmd_snf(file); }; });

  auto* kernel = app.add_subcommand("kernel", "Lattice basis of the integer kernel");
  kernel->add_option("file", file, "Matrix file")->required();
  kernel->callback([&] { run = [&] { return cmd_kernel(file); }; });

  auto* solve = app.add_subcommand("solve-gram", "Rows and solution classes of X^T X = C");
  solve->add_option("--gram", file, "Gram matrix file")->required();
  solve->add_option("--rows", rows, "Number of rows of X; omit to list admissible rows");
  solve->add_option("--contrib", contrib_list, "Row contributions, e.g. 3/16*5,11/16*3");
  solve->add_flag("--no-parity", no_parity, "Keep rows with even scaled contribution");
  solve->callback([&] { run = [&] { return cmd_solve_gram(file, rows, contrib_list, no_parity); }; });

  auto* ord = app.add_subcommand("ordinary16x3", "Ordinary decomposition matrix with all contributions l/scale");
  ord->add_option("--gram", gram, "Cartan matrix (default: bundled C_x)");
  ord->add_option("--rows", ord_rows, "Number of rows (default: the scale)");
  ord->callback([&] { run = [&] { return cmd_ordinary(g, gram, ord_rows); }; });

  auto* contrib = app.add_subcommand("contrib", "Scaled contribution matrix Q C^-1 Q^T");
  contrib->add_option("--q", file, "Q file")->required();
  contrib->add_option("--cartan", gram, "Cartan matrix file")->required();
  contrib->add_option("--compare", compare, "Match against this matrix up to simultaneous permutation and row signs");
  contrib->callback([&] { run = [&] { return cmd_contrib(file, gram, compare); }; });

  auto* check = app.add_subcommand("check-block", "Consistency checks on a block file");
  check->add_option("file", file, "Block file")->required();
  check->add_option("--lambda", lambda_file, "Lambda table file");
  check->callback([&] { run = [&] { return cmd_check_block(file, lambda_file); }; });

  auto* cen = app.add_subcommand("center", "Center lattice and its reduction mod p");
  cen->add_option("--q", file, "Q matrix or block file")->required();
  cen->add_option("--p", p, "Prime");
  cen->add_option("--match", match, "case12 or case3");
  cen->callback([&] { run = [&] { return cmd_center(file, p, match); }; });

  auto* alg = app.add_subcommand("algebra", "Operations on a structure-constant algebra");
  alg->add_option("file", file, "Algebra file")->required();
  alg->add_option("--op", op, "loewy|socle|center|commutator|tn|symform|perp");
  alg->add_option("--n", tn, "Exponent for --op tn");
  alg->add_option("--of", of, "Subspace for --op perp: center|radical|J2|socle|commutator");
  alg->callback([&] { run = [&] { return cmd_algebra(g, file, op, tn, of); }; });

  auto* resolve = app.add_subcommand("resolve", "Minimal resolution of the simple module");
  resolve->add_option("--algebra", file, "Algebra file")->required();
  resolve->add_option("--x", x, "Element x (labels joined by + or coefficients)");
  resolve->add_option("--y", y, "Element y for the three-element variant");
  resolve->add_option("--z", z, "Element z");
  resolve->callback([&] { run = [&] { return cmd_resolve(g, file, x, y, z); }; });

  auto* verify = app.add_subcommand("verify-paper", "Reconstruct and check the bundled block data");
  verify->add_option("--only", only, "Stages to run")->delimiter(',');
  verify->callback([&] { run = [&] { return cmd_verify(g, only); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Report rep;
  try {
    rep = run();
  } catch (const Error& e) {
    rep = report::error_report(command, e.what());
  } catch (const std::exception& e) {
    rep = report::error_report(command, e.what());
  }
  std::cout << (g.json ? report::emit_json(rep) : report::emit_text(rep));
  return report::exit_code(rep.status);
}
