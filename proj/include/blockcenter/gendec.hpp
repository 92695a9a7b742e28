#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "blockcenter/matrix.hpp"

namespace blockcenter::gendec {

/// One subsection (u, b_u): the k x l_u block Q_u and its Cartan matrix.
struct SubsectionDatum {
  std::string label;
  IntMatrix q;
  IntMatrix cartan;
};

/// Throws DimensionMismatch / NotPositiveDefinite / InvalidArgument when
/// q^T q != cartan or cartan is not positive definite.
void validate(const SubsectionDatum& sub);

struct BlockDatum {
  std::size_t k = 0;
  std::vector<SubsectionDatum> subsections;
  Int scale = 16;

  const SubsectionDatum& subsection(const std::string& label) const;
};

/// scale * M^u with M^u = Q_u C_u^-1 Q_u^T.
struct ContributionMatrix {
  std::string label;
  IntMatrix scaled;
};

ContributionMatrix contribution(const SubsectionDatum& sub, const Int& scale);

/// Generalized characters of the defect group evaluated on the subsection
/// representatives; column j belongs to labels[j].
struct LambdaTable {
  std::vector<std::string> labels;
  IntMatrix values;
};

/// The stable characters with values 4 and 0 on {1, x, y, xy}.
LambdaTable default_lambda_table();

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // first violation when !passed
};

struct CheckReport {
  std::vector<Check> checks;
  bool all_passed() const;
  const Check* first_failure() const;
};

/// Sum of all M^u is the identity, and for each table row lambda the matrix
/// sum_u lambda(u) M^u is integral, i.e. sum_u lambda(u) * scaled_u == 0 mod
/// scale. For the default table this is 16M^1+16M^x == 16M^1+16M^y ==
/// 16M^x+16M^xy == 0 (mod 4).
CheckReport check_star_congruences(const BlockDatum& block, const LambdaTable& lambda);

/// Cartan, orthogonality, idempotence and trace checks per subsection and
/// pair; with `expect_odd` also that every entry of scale * M^u is odd (all
/// characters of height zero).
CheckReport check_block_constraints(const BlockDatum& block, bool expect_odd = true);

/// k x k matrix whose column groups are the Q_u in subsection order.
/// Throws OrthogonalityViolation naming the offending pair and entry.
IntMatrix assemble(const BlockDatum& block);

/// Splits an assembled matrix back into subsections of the given widths,
/// computing each Cartan matrix as Q_u^T Q_u.
BlockDatum split(const IntMatrix& g, const std::vector<std::pair<std::string, std::size_t>>& widths,
                 const Int& scale);

/// Signed permutation (perm[i], sign[i]) with a(i, j) == sign_i sign_j *
/// b(perm[i], perm[j]); signs are all +1 unless `allow_signs`.
struct SimultaneousMatch {
  std::vector<std::size_t> perm;
  std::vector<int> sign;
};
std::optional<SimultaneousMatch> match_simultaneous(const IntMatrix& a, const IntMatrix& b, bool allow_signs);

BlockDatum read_block(std::istream& in, const std::string& source = "<block>");
BlockDatum load_block(const std::string& path);
std::string format_block(const BlockDatum& block);

LambdaTable read_lambda_table(std::istream& in, const std::string& source = "<lambda>");
LambdaTable load_lambda_table(const std::string& path);

}  // namespace blockcenter::gendec
