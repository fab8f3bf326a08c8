#pragma once

#include <map>
#include <string>
#include <vector>

#include "speclap/bounds.hpp"
#include "speclap/graph.hpp"
#include "speclap/transmission.hpp"

namespace speclap {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::map<std::string, double> detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool overall = false; // true exactly when every check passed
};

inline constexpr int kSweepVertexCap = 16;

// Runs the eigenvalue range check always; for Hermitian symmetric systems
// with at least two dimensions, optionally sweeps every nonempty proper
// vertex subset through the three gap bounds (tight, volume, ratio) and
// their ordering, and applies the diameter bound when the graph is connected
// with diameter >= 4. Inapplicable checks are reported as skipped with
// pass = true. Sweeps are silently disabled above min(limit, 16) vertices.
VerifyReport verify_all(const Graph& g, const TransmissionSystem& ts,
                        double tol = kDefaultTol, bool subset_sweep = false,
                        int limit = kSweepVertexCap);

} // namespace speclap
