#include "speclap/verbs.hpp"

#include <cmath>
#include <limits>

#include "speclap/spectra.hpp"
#include "speclap/surgery.hpp"
#include "speclap/verify.hpp"

namespace speclap::verbs {

namespace {

SystemDoc load(const std::string& text) { return parse_system_doc(parse_text(text)); }

TransmissionSystem system_or_identity(const SystemDoc& sd) {
  return sd.system ? *sd.system : identity_system(sd.graph);
}

const DiagonalWeight* weight_ptr(const SystemDoc& sd) {
  return sd.weight ? &*sd.weight : nullptr;
}

double max_abs_imag(const std::vector<cplx>& values) {
  double m = 0.0;
  for (const cplx& z : values) m = std::max(m, std::abs(z.imag()));
  return m;
}

template <typename Derived>
double max_abs_or_zero(const Eigen::MatrixBase<Derived>& m) {
  return m.size() > 0 ? m.cwiseAbs().maxCoeff() : 0.0;
}

} // namespace

Outcome spectrum(const std::string& doc, double tol) {
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  Spectrum sp = system_spectrum(sd.graph, ts, weight_ptr(sd), tol);
  return {spectrum_to_json(sp.values), false};
}

Outcome verify(const std::string& doc, double tol, bool subset_sweep, int limit) {
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  VerifyReport rep = verify_all(sd.graph, ts, tol, subset_sweep, limit);
  json checks = json::array();
  for (const VerifyCheck& c : rep.checks) {
    json detail = json::object();
    for (const auto& [k, v] : c.detail) detail[k] = real_to_json(v);
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", std::move(detail)}});
  }
  return {json{{"checks", std::move(checks)}, {"overall", rep.overall}}, !rep.overall};
}

Outcome bounds(const std::string& doc, const std::string& subset_csv, double tol) {
  if (subset_csv.empty()) fail(errc::bad_param, "bounds needs --subset");
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  VertexSubset a = parse_subset_csv(sd.graph, subset_csv);

  GroundData gd = ground_data(sd.graph, ts, tol);
  json reports = json::array();
  bool all_pass = true;
  for (const BoundReport& r : {cheeger_sharp(sd.graph, ts, gd, a, tol),
                               cheeger_upper(sd.graph, ts, gd, a, tol),
                               cheeger_weak(sd.graph, ts, gd, a, tol)}) {
    all_pass = all_pass && r.pass;
    reports.push_back(bound_to_json(r));
  }
  std::optional<int> diam = diameter(sd.graph);
  if (diam && *diam >= 4) {
    BoundReport d = diameter_bound(sd.graph, ts, gd, tol);
    all_pass = all_pass && d.pass;
    reports.push_back(bound_to_json(d));
  }
  return {json{{"reports", std::move(reports)}, {"overall", all_pass}}, !all_pass};
}

Outcome cayley(const std::string& doc, double tol) {
  CayleyDoc cd = parse_cayley_doc(parse_text(doc));
  std::vector<cplx> via_characters = cayley_spectrum(cd.group, cd.gens, cd.family);

  CayleyGraph cg = cayley_graph(cd.group, cd.gens);
  CayleySystem cs = cayley_system(cg, cd.family);
  Spectrum dense = system_spectrum(cs.graph, cs.system, nullptr, tol);

  double dev = multiset_distance(via_characters, dense.values);
  bool pass = dev <= tol;
  json out = {{"values", spectrum_to_json(via_characters)},
              {"dense_values", spectrum_to_json(dense.values)},
              {"deviation", real_to_json(dev)},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome assoc(const std::string& doc, const std::string& subset_a_csv,
              const std::string& subset_b_csv, double tol) {
  json j = parse_text(doc);
  SystemDoc sd = parse_system_doc(j);
  Association as_sets = parse_association_doc(j, sd.graph);
  AssociationSystem as = association_system(sd.graph, as_sets);

  Cochain phi = association_phi(as);
  double residual = apply_laplacian(as.graph, as.system, phi, &as.weight).norm();
  bool kernel_pass = residual <= tol;

  Spectrum sp = system_spectrum(as.graph, as.system, &as.weight, tol);
  double lo = sp.values.empty() ? 0.0 : sp.values.front().real();
  double hi = sp.values.empty() ? 0.0 : sp.values.back().real();
  bool range_pass = lo >= -tol && hi <= 2.0 + tol && max_abs_imag(sp.values) <= tol;

  bool pass = kernel_pass && range_pass;
  json out = {{"system", system_doc_to_json(as.graph, &as.system, &as.weight)},
              {"values", spectrum_to_json(sp.values)},
              {"kernel_residual", real_to_json(residual)},
              {"kernel_pass", kernel_pass},
              {"range_pass", range_pass}};
  if (!subset_a_csv.empty() || !subset_b_csv.empty()) {
    if (subset_a_csv.empty() || subset_b_csv.empty())
      fail(errc::bad_param, "cohesion needs both --subset-a and --subset-b");
    BoundReport r =
        cohesion_estimate(sd.graph, as_sets, parse_subset_csv(sd.graph, subset_a_csv),
                          parse_subset_csv(sd.graph, subset_b_csv), tol);
    pass = pass && r.pass;
    out["cohesion"] = bound_to_json(r);
  }
  out["pass"] = pass;
  return {std::move(out), !pass};
}

Outcome quantum(const std::string& doc, int spin, std::uint64_t seed, double tol) {
  json j = parse_text(doc);
  SystemDoc sd = parse_system_doc(j);
  if (spin < 0) spin = j.contains("spin") ? j.at("spin").get<int>() : 0;
  if (spin < 0) fail(errc::bad_param, "spin must be nonnegative");

  std::optional<std::vector<Matrix>> barriers = parse_barrier_list(j);
  QuantumSystems qs = barriers ? quantum_system(sd.graph, spin, *barriers, tol)
                               : random_quantum_system(sd.graph, spin, seed, tol);

  Classification gcls = classify(qs.graph, qs.g, classification_tol(tol));
  double invert_dev = 0.0;
  for (const DirectedEdge& d : qs.graph.dedges()) {
    Eigen::Index n = qs.f.mats[d.id].rows();
    invert_dev = std::max(
        invert_dev, spectral_norm(qs.f.mats[d.op] * qs.f.mats[d.id] -
                                  Matrix::Identity(n, n)));
  }

  // Measure the spectrum's reality with the general solver on purpose.
  Spectrum sp = eigen_spectrum(laplacian(qs.graph, qs.g), false);
  double lap_imag = max_abs_imag(sp.values);

  double comm_imag = 0.0;
  Matrix jform = upq_form(spin + 1, spin + 1).cast<cplx>();
  int reps = int(qs.graph.undirected_reps().size());
  for (int k = 0; k < reps; ++k) {
    int fwdish = qs.graph.undirected_reps()[k];
    const DirectedEdge& d = qs.graph.dedge(fwdish);
    int fwd = d.tail <= d.head ? d.id : d.op;
    // Recover the barrier from F(forward) = swap * M.
    Matrix perm = Matrix::Zero(jform.rows(), jform.cols());
    Eigen::Index half = jform.rows() / 2;
    perm.topRightCorner(half, half) = Matrix::Identity(half, half);
    perm.bottomLeftCorner(half, half) = Matrix::Identity(half, half);
    Matrix m = perm * qs.f.mats[fwd];
    Matrix c = (jform * m) * (jform * m).adjoint();
    comm_imag = std::max(comm_imag, max_abs_imag(eigen_spectrum(c, false).values));
  }

  bool pass = gcls.hermitian_symmetric && invert_dev <= tol && lap_imag <= tol &&
              comm_imag <= tol;
  json out = {{"system", system_doc_to_json(qs.graph, &qs.g)},
              {"spin", qs.spin},
              {"values", spectrum_to_json(sp.values)},
              {"hermitian_deviation", real_to_json(gcls.asym)},
              {"invertibility_deviation", real_to_json(invert_dev)},
              {"max_imag", real_to_json(lap_imag)},
              {"commutator_max_imag", real_to_json(comm_imag)},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome walk(const std::string& doc, double tol) {
  Eigen::MatrixXd probs = parse_walk_doc(parse_text(doc));
  WalkSystem ws = walk_system(probs, tol);

  Spectrum gamma = eigen_spectrum(probs.cast<cplx>(), false);
  std::vector<cplx> walk_values;
  walk_values.reserve(gamma.values.size());
  for (const cplx& mu : gamma.values) walk_values.push_back(1.0 - mu);
  sort_complex(walk_values);

  Spectrum lap = system_spectrum(ws.graph, ws.system, &ws.weight, tol);
  double dev = multiset_distance(walk_values, lap.values);
  bool hermitian = classify(ws.graph, ws.system, classification_tol(tol)).hermitian_symmetric;
  bool pass = dev <= tol && hermitian == ws.reflexive;

  json out = {{"system", system_doc_to_json(ws.graph, &ws.system, &ws.weight)},
              {"values", spectrum_to_json(lap.values)},
              {"walk_values", spectrum_to_json(walk_values)},
              {"deviation", real_to_json(dev)},
              {"reflexive", ws.reflexive},
              {"hermitian", hermitian},
              {"pass", pass}};
  return {std::move(out), !pass};
}

namespace {

VertexPartition load_partition(const Graph& g, const std::string& partition_doc) {
  return VertexPartition::from_map(g, parse_partition_doc(parse_text(partition_doc)));
}

} // namespace

Outcome collapse(const std::string& doc, const std::string& partition_doc, double tol) {
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  VertexPartition part = load_partition(sd.graph, partition_doc);
  Collapsed col = speclap::collapse(sd.graph, ts, part);

  Spectrum before = system_spectrum(sd.graph, ts, nullptr, tol);
  Spectrum after = system_spectrum(col.graph, col.system, nullptr, tol);

  bool checked = before.hermitian && after.hermitian;
  bool pass = true;
  double min_margin = std::numeric_limits<double>::infinity();
  if (checked) {
    for (std::size_t i = 0; i < after.values.size(); ++i) {
      double m = after.values[i].real() - before.values[i].real();
      min_margin = std::min(min_margin, m);
      pass = pass && m >= -tol;
    }
  }
  json out = {{"system", system_doc_to_json(col.graph, &col.system)},
              {"values", spectrum_to_json(after.values)},
              {"original_values", spectrum_to_json(before.values)},
              {"interlacing_checked", checked},
              {"interlacing_min_margin", real_to_json(min_margin)},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome pushforward(const std::string& doc, const std::string& partition_doc, double tol) {
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  VertexPartition part = load_partition(sd.graph, partition_doc);
  Pushforward pf = pushforward_collapse(sd.graph, ts, part);

  Spectrum before = system_spectrum(sd.graph, ts, nullptr, tol);
  Spectrum after = system_spectrum(pf.graph, pf.system, &pf.weight, tol);
  double dev = multiset_distance(before.values, after.values);
  bool pass = dev <= tol;

  json out = {{"system", system_doc_to_json(pf.graph, &pf.system, &pf.weight)},
              {"values", spectrum_to_json(after.values)},
              {"original_values", spectrum_to_json(before.values)},
              {"deviation", real_to_json(dev)},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome amalgamate(const std::string& doc, double tol) {
  SystemDoc sd = load(doc);
  TransmissionSystem ts = system_or_identity(sd);
  Amalgamated am = speclap::amalgamate(sd.graph, ts);

  Matrix original = laplacian(sd.graph, ts);
  Matrix merged = laplacian(am.graph, am.system, &am.weight);
  double dev = max_abs_or_zero(merged - original);
  bool pass = dev <= tol;

  Spectrum sp = system_spectrum(am.graph, am.system, &am.weight, tol);
  json out = {{"system", system_doc_to_json(am.graph, &am.system, &am.weight)},
              {"values", spectrum_to_json(sp.values)},
              {"laplacian_deviation", real_to_json(dev)},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome dual(const std::string& doc) {
  SystemDoc sd = load(doc);
  const Graph& g = sd.graph;
  Graph dg = speclap::dual(g);

  Eigen::MatrixXd inc = incidence(g);
  Eigen::MatrixXd deg = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) deg(v, v) = double(g.degree(v));
  double dev1 = max_abs_or_zero(inc * inc.transpose() - (deg + adjacency_counts(g)));
  Eigen::Index m = inc.cols();
  double dev2 = max_abs_or_zero(inc.transpose() * inc -
                                (2.0 * Eigen::MatrixXd::Identity(m, m) + adjacency_counts(dg)));
  bool pass = dev1 == 0.0 && dev2 == 0.0;

  json out = {{"graph", system_doc_to_json(dg)},
              {"gram_deviation", real_to_json(std::max(dev1, dev2))},
              {"pass", pass}};
  return {std::move(out), !pass};
}

Outcome random_system(const std::string& doc, int rank, std::uint64_t seed) {
  SystemDoc sd = load(doc);
  Graph g = rank > 0 ? with_uniform_rank(sd.graph, rank) : sd.graph;
  TransmissionSystem ts = random_unitary_system(g, seed);
  return {system_doc_to_json(g, &ts), false};
}

} // namespace speclap::verbs
