#include "blockcenter/verify_paper.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "blockcenter/center.hpp"
#include "blockcenter/errors.hpp"
#include "blockcenter/exact_linalg.hpp"
#include "blockcenter/gendec.hpp"
#include "blockcenter/matrix_io.hpp"
#include "blockcenter/plesken.hpp"
#include "blockcenter/presentation.hpp"

namespace blockcenter {

namespace {

using report::Section;

const std::vector<std::string> kCases = {"I", "II", "III"};
const std::map<std::string, std::string> kCaseFile = {{"I", "case1"}, {"II", "case2"}, {"III", "case3"}};

std::string join(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Context {
  std::string paper;
  IntMatrix cx;
  std::map<std::string, gendec::BlockDatum> blocks;
  std::map<std::string, center::ModularCenter> centers;

  explicit Context(const std::string& data_dir) : paper(data_dir + "/paper/") {
    cx = io::load_int_matrix(paper + "cx.txt");
  }
  const gendec::BlockDatum& block(const std::string& c) {
    auto it = blocks.find(c);
    if (it == blocks.end()) it = blocks.emplace(c, gendec::load_block(paper + kCaseFile.at(c) + "_block.txt")).first;
    return it->second;
  }
  RatMatrix q(const std::string& c) { return to_rat(gendec::assemble(block(c)).transpose()); }
  const center::ModularCenter& modular(const std::string& c) {
    auto it = centers.find(c);
    if (it == centers.end()) it = centers.emplace(c, center::reduce_mod_p(center::center_basis(q(c)), 2)).first;
    return it->second;
  }
};

void stage_rows(Context& ctx, Section& s) {
  const auto rows = plesken::enumerate_rows(ctx.cx, true);
  std::map<plesken::IntVector, Int> classes;
  for (const auto& r : rows) {
    auto rep = plesken::permutation_sign_representative(r.r);
    auto [it, fresh] = classes.emplace(rep, r.contribution_num);
    if (!fresh && it->second != r.contribution_num) {
      s.verdict = false;
      s.lines.push_back("contribution not constant on class " + join(rep));
      return;
    }
  }
  const IntMatrix expected = io::load_int_matrix(ctx.paper + "rows_cx.txt");
  std::map<plesken::IntVector, Int> want;
  for (std::size_t i = 0; i < expected.rows(); ++i)
    want.emplace(plesken::permutation_sign_representative({expected(i, 0), expected(i, 1), expected(i, 2)}),
                 expected(i, 3));
  s.verdict = classes == want;
  s.lines.push_back(std::to_string(rows.size()) + " rows with odd scaled contribution, " +
                    std::to_string(classes.size()) + " classes up to permutation and sign");
  report::Json list = report::Json::array();
  for (const auto& [rep, num] : classes) {
    s.lines.push_back(join(rep) + "  contribution " + num.get_str() + "/16");
    list.push_back({{"row", report::to_json(rep)}, {"contribution", Rat(num, 16).get_str()}});
  }
  s.data["classes"] = list;
  if (!*s.verdict) s.lines.insert(s.lines.begin(), "row classes differ from rows_cx.txt");
}

void stage_classes(Context& ctx, Section& s) {
  std::vector<Rat> constraints(5, Rat(3, 16));
  constraints.insert(constraints.end(), 3, Rat(11, 16));
  const auto classes = plesken::enumerate_solutions(ctx.cx, 8, constraints);
  const auto aut = plesken::gram_automorphisms(ctx.cx);
  bool ok = classes.size() == 3 && aut.order() == 48;
  s.lines.push_back(std::to_string(classes.size()) + " classes, |Aut(C_x)| = " + std::to_string(aut.order()));
  report::Json list = report::Json::array();
  for (const auto& cls : classes) {
    s.lines.push_back(cls.label + " eldiv " + join(cls.eldiv));
    list.push_back({{"label", cls.label}, {"eldiv", report::to_json(cls.eldiv)}, {"canonical", report::to_json(cls.canonical)}});
  }
  s.data["classes"] = list;
  for (const auto& c : kCases) {
    const IntMatrix x = io::load_int_matrix(ctx.paper + "class_" + c + ".txt");
    const IntMatrix canon = plesken::canonicalize(x, aut);
    const auto eldiv = linalg::elementary_divisors(x);
    auto it = std::find_if(classes.begin(), classes.end(), [&](const auto& cls) { return cls.canonical == canon; });
    const bool found = x.transpose() * x == ctx.cx && it != classes.end() && it->eldiv == eldiv;
    s.lines.push_back("(" + c + ") " + (found ? "matches class " + it->label : std::string("has no matching class")));
    ok = ok && found;
  }
  std::vector<std::string> labels;
  for (const auto& cls : classes) labels.push_back(cls.label);
  ok = ok && labels == std::vector<std::string>{"(1,1,1)", "(1,1,2)", "(1,2,2)"};
  s.verdict = ok;
}

void stage_contributions(Context& ctx, Section& s) {
  bool ok = true;
  for (const auto& c : kCases) {
    const IntMatrix x = io::load_int_matrix(ctx.paper + "class_" + c + ".txt");
    const auto m = gendec::contribution({"x", x, ctx.cx}, 16).scaled;
    const IntMatrix display = io::load_int_matrix(ctx.paper + "contrib_" + c + ".txt");
    std::size_t odd = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) odd += mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
    auto match = gendec::match_simultaneous(m, display, false);
    s.lines.push_back("(" + c + ") 16M^x " + (match ? "matches display" : "does not match display") + ", " +
                      std::to_string(odd) + "/64 entries odd");
    s.data[c] = report::to_json(m);
    ok = ok && match && odd == 64;
  }
  const IntMatrix my = gendec::contribution(ctx.block("I").subsection("y"), 16).scaled;
  const bool y_ok = my == io::load_int_matrix(ctx.paper + "contrib_y_case1.txt");
  s.lines.push_back(std::string("(I) 16M^y ") + (y_ok ? "equals" : "differs from") + " display");
  s.verdict = ok && y_ok;
}

void stage_block_constraints(Context& ctx, Section& s) {
  const auto lambda = gendec::load_lambda_table(ctx.paper + "lambda.txt");
  bool ok = true;
  for (const auto& c : kCases) {
    const auto& block = ctx.block(c);
    auto checks = gendec::check_block_constraints(block);
    auto star = gendec::check_star_congruences(block, lambda);
    checks.checks.insert(checks.checks.end(), star.checks.begin(), star.checks.end());
    gendec::assemble(block);
    const auto* fail = checks.first_failure();
    s.lines.push_back("(" + c + ") " + std::to_string(checks.checks.size()) + " checks " +
                      (fail ? "FAIL at " + fail->name + ": " + fail->detail : std::string("pass")));
    ok = ok && !fail;
  }
  if (!ok) {
    // Put the first violation first so the report names it.
    auto it = std::find_if(s.lines.begin(), s.lines.end(), [](const std::string& l) { return l.find("FAIL") != std::string::npos; });
    std::rotate(s.lines.begin(), it, it + 1);
  }
  s.verdict = ok;
}

void stage_center_case1(Context& ctx, Section& s) {
  const RatMatrix q = ctx.q("I");
  const IntMatrix eq = center::center_equations(q);
  const auto lat = center::center_basis(q);
  const IntMatrix table = io::load_int_matrix(ctx.paper + "center_table_case1.txt");
  const bool same = center::same_diagonal_lattice(lat.basis_diagonals, table);
  s.lines.push_back("system " + std::to_string(eq.rows()) + " x " + std::to_string(eq.cols()) + ", lattice rank " +
                    std::to_string(lat.rank()));
  s.lines.push_back(std::string("lattice ") + (same ? "equals" : "differs from") +
                    " the displayed table (unimodular transition both ways)");
  s.lines.push_back("diagonal basis (columns):\n" + io::pretty(lat.basis_diagonals));
  s.data["basis_diagonals"] = report::to_json(lat.basis_diagonals);
  s.verdict = same && eq.rows() == 56 && eq.cols() == 64 && lat.rank() == 8;
}

void stage_center_lattices(Context& ctx, Section& s) {
  std::map<std::string, center::CenterLattice> lats;
  bool ok = true;
  for (const auto& c : kCases) {
    lats.emplace(c, center::center_basis(ctx.q(c)));
    const auto& lat = lats.at(c);
    bool closed = true;
    for (const auto& beta : lat.basis_matrices) {
      const RatMatrix d = linalg::rat_inverse(lat.q) * to_rat(beta) * lat.q;
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) closed = closed && (i == j ? d(i, i).get_den() == 1 : d(i, j) == 0);
    }
    s.lines.push_back("(" + c + ") rank " + std::to_string(lat.rank()) + (closed ? ", every basis matrix conjugates to an integral diagonal" : ", basis check failed"));
    s.data[c] = report::to_json(lat.basis_diagonals);
    ok = ok && closed && lat.rank() == 8;
  }
  const bool distinct = !center::same_diagonal_lattice(lats.at("I").basis_diagonals, lats.at("III").basis_diagonals);
  s.lines.push_back(std::string("lattices (I) and (III) ") + (distinct ? "differ" : "coincide"));
  s.verdict = ok && distinct;
}

void stage_presentations(Context& ctx, Section& s) {
  using pres::PresentationId;
  const std::map<std::string, PresentationId> target = {
      {"I", PresentationId::CaseI_II}, {"II", PresentationId::CaseI_II}, {"III", PresentationId::CaseIII}};
  bool ok = true;
  for (const auto& c : kCases) {
    const auto alg = ctx.modular(c).algebra();
    const auto& p = pres::presentation(target.at(c));
    auto w = pres::match_presentation(alg, p);
    const bool good = w && pres::verify_witness(alg, p, *w);
    s.lines.push_back("(" + c + ") vs " + p.name + ": " + (good ? "witness" : "no witness"));
    if (good) {
      s.lines.push_back(pres::format_witness(alg, p, *w));
      report::Json images = report::Json::object();
      for (std::size_t g = 0; g < p.generators.size(); ++g) images[p.generators[g]] = fd::format_element(alg, w->images[g]);
      s.data[c] = {{"presentation", p.name}, {"witness", images}};
    }
    if (target.at(c) == PresentationId::CaseI_II) {
      const auto inv = pres::local_invariants(alg);
      s.lines.push_back("(" + c + ") Loewy length " + std::to_string(inv.loewy_length));
      ok = ok && inv.loewy_length == 3;
    }
    ok = ok && good;
  }
  const auto w_table = fd::load_algebra(ctx.paper + "w_table.txt");
  auto w = pres::match_presentation(w_table, pres::presentation(PresentationId::CaseIII));
  s.lines.push_back(std::string("W-table algebra vs CASE_III: ") + (w ? "witness" : "no witness"));
  s.verdict = ok && w.has_value();
}

void stage_nonisomorphism(Context& ctx, Section& s) {
  std::map<std::string, pres::LocalInvariants> inv;
  for (const auto& c : kCases) {
    inv.emplace(c, pres::local_invariants(ctx.modular(c).algebra()));
    const auto& v = inv.at(c);
    s.lines.push_back("(" + c + ") dim J^n " + join_sizes(v.radical_dims) + ", socle " + std::to_string(v.socle_dim) +
                      ", #{w in J : w^2 = 0} = " + std::to_string(v.square_zero_count));
    s.data[c] = {{"radical_dims", report::to_json(v.radical_dims)}, {"socle_dim", std::to_string(v.socle_dim)}};
  }
  const auto dim_j2 = [&](const std::string& c) { return inv.at(c).radical_dims.at(2); };
  const bool cross = !pres::match_presentation(ctx.modular("I").algebra(), pres::presentation(pres::PresentationId::CaseIII)) &&
                     !pres::match_presentation(ctx.modular("III").algebra(), pres::presentation(pres::PresentationId::CaseI_II));
  s.lines.push_back("dim J^2: " + std::to_string(dim_j2("I")) + ", " + std::to_string(dim_j2("II")) + ", " +
                    std::to_string(dim_j2("III")));
  s.lines.push_back(std::string("cross matches ") + (cross ? "absent" : "found"));
  s.verdict = dim_j2("I") == 1 && dim_j2("II") == 1 && dim_j2("III") == 3 && inv.at("I") == inv.at("II") && cross;
}

void stage_ordinary(Context& ctx, Section& s) {
  const auto cls = plesken::enumerate_ordinary(ctx.cx);
  const IntMatrix shipped = io::load_int_matrix(ctx.paper + "qbx.txt");
  const auto aut = plesken::gram_automorphisms(ctx.cx);
  const bool same = plesken::canonicalize(shipped, aut) == cls.canonical;
  const auto contribs = plesken::row_contributions(shipped, ctx.cx);
  Rat trace = 0;
  bool all = true;
  for (const auto& r : contribs) {
    trace += r;
    all = all && r == Rat(3, 16);
  }
  s.lines.push_back(std::string("unique class ") + (same ? "equals" : "differs from") + " qbx.txt up to row order and sign");
  s.lines.push_back(std::to_string(contribs.size()) + " rows, all contributions 3/16: " + (all ? "yes" : "no") +
                    ", trace " + io::to_string(trace));
  const IntMatrix display = io::load_int_matrix(ctx.paper + "qbx_display.txt");
  s.lines.push_back("displayed matrix has " + std::to_string(display.rows()) + " rows; its Gram matrix " +
                    (display.transpose() * display == ctx.cx ? "equals" : "differs from") + " C_x");
  s.data["canonical"] = report::to_json(cls.canonical);
  s.verdict = same && all && contribs.size() == 16 && trace == 3;
}

}  // namespace

const std::vector<std::string>& verify_stage_names() {
  static const std::vector<std::string> names = {"rows",           "classes",       "contributions",
                                                 "block-constraints", "center-case1", "center-lattices",
                                                 "presentations",  "nonisomorphism", "ordinary16x3"};
  return names;
}

report::Report verify_paper(const VerifyOptions& opts) {
  static const std::map<std::string, std::function<void(Context&, Section&)>> stages = {
      {"rows", stage_rows},
      {"classes", stage_classes},
      {"contributions", stage_contributions},
      {"block-constraints", stage_block_constraints},
      {"center-case1", stage_center_case1},
      {"center-lattices", stage_center_lattices},
      {"presentations", stage_presentations},
      {"nonisomorphism", stage_nonisomorphism},
      {"ordinary16x3", stage_ordinary},
  };
  for (const auto& name : opts.only)
    if (!stages.count(name)) throw Error(ErrorKind::InvalidArgument, "unknown stage " + name);

  report::Report r;
  r.command = "verify-paper";
  Context ctx(opts.data_dir);
  for (const auto& name : verify_stage_names()) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), name) == opts.only.end()) continue;
    Section& s = r.add(name);
    try {
      stages.at(name)(ctx, s);
    } catch (const Error& e) {
      s.verdict = false;
      s.lines.insert(s.lines.begin(), e.what());
    }
  }
  r.finalize();
  return r;
}

}  // namespace blockcenter
