#pragma once

#include <string>
#include <vector>

#include "blockcenter/report.hpp"

namespace blockcenter {

struct VerifyOptions {
  std::string data_dir;            // directory holding paper/ and algebras/
  std::vector<std::string> only;   // stage names; empty runs all
};

/// Stage names in execution order.
const std::vector<std::string>& verify_stage_names();

/// End-to-end reconstruction of the bundled block data: rows, classes,
/// contributions, block-constraints, center-case1, center-lattices,
/// presentations, nonisomorphism, ordinary16x3.
report::Report verify_paper(const VerifyOptions& opts);

}  // namespace blockcenter
