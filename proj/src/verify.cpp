#include "speclap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "speclap/spectra.hpp"

namespace speclap {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VerifyCheck skipped(const std::string& name, const std::string& why) {
  VerifyCheck c;
  c.name = name + " (skipped: " + why + ")";
  c.pass = true;
  c.detail["skipped"] = 1.0;
  return c;
}

} // namespace

VerifyReport verify_all(const Graph& g, const TransmissionSystem& ts, double tol,
                        bool subset_sweep, int limit) {
  VerifyReport rep;

  RangeReport range = verify_range(g, ts, tol);
  VerifyCheck rc;
  rc.name = "range";
  rc.pass = range.pass;
  rc.detail = {{"K", range.K},
               {"asym_half", range.asym_half},
               {"max_center_dev", range.max_center_dev},
               {"max_imag", range.max_imag},
               {"min_real", range.min_real},
               {"max_real", range.max_real},
               {"unitary_interval_checked", range.unitary_checked ? 1.0 : 0.0}};
  rep.checks.push_back(std::move(rc));

  Classification cls = classify(g, ts, classification_tol(tol));
  bool gap_ready = cls.hermitian_symmetric && g.total_dimension() >= 2;

  if (!cls.hermitian_symmetric) {
    rep.checks.push_back(skipped("gap_bounds", "system is not Hermitian symmetric"));
  } else if (g.total_dimension() < 2) {
    rep.checks.push_back(skipped("gap_bounds", "needs at least two dimensions"));
  }

  if (gap_ready && subset_sweep) {
    int cap = std::min(limit, kSweepVertexCap);
    if (g.vertex_count() > cap) {
      rep.checks.push_back(skipped("subset_sweep", "vertex count above sweep cap"));
    } else {
      GroundData gd = ground_data(g, ts, tol);
      VerifyCheck sharp{"gap_bound_tight", true, {}};
      VerifyCheck upper{"gap_bound_volume", true, {}};
      VerifyCheck weak{"gap_bound_ratio", true, {}};
      VerifyCheck chain{"gap_bound_ordering", true, {}};
      double min_sharp = kInf, min_upper = kInf, min_weak = kInf, min_chain = kInf;
      int subsets = 0, chain_compared = 0;

      unsigned long long total = 1ull << g.vertex_count();
      for (unsigned long long bits = 1; bits + 1 < total; ++bits) {
        VertexSubset a = VertexSubset::from_mask(g, bits);
        BoundReport s = cheeger_sharp(g, ts, gd, a, tol);
        BoundReport u = cheeger_upper(g, ts, gd, a, tol);
        BoundReport w = cheeger_weak(g, ts, gd, a, tol);
        ++subsets;
        sharp.pass = sharp.pass && s.pass;
        upper.pass = upper.pass && u.pass;
        weak.pass = weak.pass && w.pass;
        min_sharp = std::min(min_sharp, s.margin);
        min_upper = std::min(min_upper, u.margin);
        min_weak = std::min(min_weak, w.margin);
        if (std::isfinite(s.bound) && std::isfinite(u.bound) && std::isfinite(w.bound)) {
          ++chain_compared;
          double m = std::min(u.bound - s.bound, w.bound - u.bound);
          min_chain = std::min(min_chain, m);
          chain.pass = chain.pass && m >= -tol;
        }
      }
      sharp.detail = {{"subsets", double(subsets)}, {"min_margin", min_sharp}};
      upper.detail = {{"subsets", double(subsets)}, {"min_margin", min_upper}};
      weak.detail = {{"subsets", double(subsets)}, {"min_margin", min_weak}};
      chain.detail = {{"subsets_compared", double(chain_compared)},
                      {"min_margin", min_chain}};
      rep.checks.push_back(std::move(sharp));
      rep.checks.push_back(std::move(upper));
      rep.checks.push_back(std::move(weak));
      rep.checks.push_back(std::move(chain));
    }
  } else if (gap_ready && !subset_sweep) {
    rep.checks.push_back(skipped("subset_sweep", "not requested"));
  }

  if (gap_ready) {
    std::optional<int> diam = diameter(g);
    if (diam && *diam >= 4) {
      BoundReport d = diameter_bound(g, ts, tol);
      VerifyCheck dc;
      dc.name = "diameter_bound";
      dc.pass = d.pass;
      dc.detail = {{"bound", d.bound}, {"target", d.target}, {"margin", d.margin}};
      for (const auto& [k, v] : d.context) dc.detail[k] = v;
      rep.checks.push_back(std::move(dc));
    } else {
      rep.checks.push_back(
          skipped("diameter_bound", diam ? "diameter below 4" : "graph is disconnected"));
    }
  }

  rep.overall = std::all_of(rep.checks.begin(), rep.checks.end(),
                            [](const VerifyCheck& c) { return c.pass; });
  return rep;
}

} // namespace speclap
