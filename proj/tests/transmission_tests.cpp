// Edge-matrix families: classification, the normalized operator, and its
// matrix-free action.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "generators.hpp"
#include "speclap/transmission.hpp"

using namespace speclap;
using gen::code_of;
using namespace std::complex_literals;

namespace {

TransmissionSystem scalar_k2(cplx fwd, cplx bwd) {
  TransmissionSystem ts;
  ts.mats = {Matrix::Constant(1, 1, fwd), Matrix::Constant(1, 1, bwd)};
  return ts;
}

} // namespace

TEST_CASE("identity family needs equal ranks across each edge") {
  Graph ok = gen::cycle(4, 2);
  TransmissionSystem ts = identity_system(ok);
  CHECK(ts.mats.size() == 8);
  CHECK(ts.mats[0].rows() == 2);
  validate_shapes(ok, ts);

  Graph bad = gen::with_ranks(gen::path(2), {1, 2});
  CHECK(code_of([&] { identity_system(bad); }) == errc::rank_mismatch);
}

TEST_CASE("shape validation pins each matrix to head rank by tail rank") {
  Graph g = gen::with_ranks(gen::path(2), {2, 3});
  TransmissionSystem ts;
  ts.mats = {Matrix::Zero(3, 2), Matrix::Zero(2, 3)};
  validate_shapes(g, ts); // correct shapes pass

  ts.mats[1] = Matrix::Zero(3, 2); // transposed by mistake
  CHECK(code_of([&] { validate_shapes(g, ts); }) == errc::shape_error);

  ts.mats.pop_back();
  CHECK(code_of([&] { validate_shapes(g, ts); }) == errc::shape_error);
}

TEST_CASE("classification separates the symmetric and invertible axes") {
  Graph g = Graph::make(gen::ids(2), {{0, 1}});

  // Adjoint-paired but not inverse-paired.
  Classification herm = classify(g, scalar_k2(2.0, 2.0));
  CHECK(herm.hermitian_symmetric);
  CHECK(!herm.invertible);
  CHECK(!herm.strictly_unitary);
  CHECK(herm.K == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(herm.asym == doctest::Approx(0.0).epsilon(1e-14));

  // Inverse-paired but not adjoint-paired.
  Classification inv = classify(g, scalar_k2(2.0, 0.5));
  CHECK(!inv.hermitian_symmetric);
  CHECK(inv.invertible);
  CHECK(!inv.strictly_unitary);
  CHECK(inv.K == doctest::Approx(2.0).epsilon(1e-14));

  // Both at once.
  Classification uni = classify(g, scalar_k2(1.0, 1.0));
  CHECK(uni.strictly_unitary);
  CHECK(uni.K == doctest::Approx(1.0).epsilon(1e-14));

  // Neither: the same phase in both directions is maximally asymmetric.
  Classification skew = classify(g, scalar_k2(1.0i, 1.0i));
  CHECK(!skew.hermitian_symmetric);
  CHECK(skew.asym == doctest::Approx(2.0).epsilon(1e-14));

  CHECK(code_of([&] { classify(g, scalar_k2(1.0, 1.0), 0.0); }) == errc::bad_param);
  CHECK(code_of([&] { classify(g, scalar_k2(1.0, 1.0), -1.0); }) == errc::bad_param);
}

TEST_CASE("nonpositive margin tolerances clamp to the default for classification") {
  CHECK(classification_tol(-1.0) == kDefaultTol);
  CHECK(classification_tol(0.0) == kDefaultTol);
  CHECK(classification_tol(1e-6) == 1e-6);
}

TEST_CASE("random adjoint-paired families classify as expected") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gen::random_graph(rng, 2, 6);
    g = gen::with_ranks(g, gen::random_ranks(rng, g));
    Classification c = classify(g, gen::random_system(rng, g, /*hermitian=*/true));
    CHECK(c.hermitian_symmetric);
    CHECK(c.asym == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("unitary draws sit on both classification axes with unit norm") {
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gen::random_graph(rng, 2, 6);
    g = speclap::with_uniform_rank(g, rng.uniform_int(1, 3));
    TransmissionSystem ts = random_unitary_system(g, 1000 + trial);
    Classification c = classify(g, ts);
    CHECK(c.strictly_unitary);
    CHECK(c.K == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("rank-one identity family reduces to the classical normalized operator") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = gen::random_graph(rng, 2, 7, /*loops=*/true, /*multi=*/true);
    Matrix lap = laplacian(g, identity_system(g));
    Eigen::MatrixXd a = adjacency_counts(g);
    Eigen::VectorXd dinv(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dinv(v) = 1.0 / std::sqrt(g.degree(v));
    // A geometric loop contributes one undirected count but two directed
    // edges, so the operator sees twice the loop count.
    Eigen::MatrixXd atwice = a;
    for (int v = 0; v < g.vertex_count(); ++v) atwice(v, v) *= 2.0;
    Eigen::MatrixXd classical =
        Eigen::MatrixXd::Identity(g.vertex_count(), g.vertex_count()) -
        dinv.asDiagonal() * atwice * dinv.asDiagonal();
    CHECK((lap - classical.cast<cplx>()).norm() < 1e-13);
  }
}

TEST_CASE("block adjacency places each matrix at head row and tail column") {
  Graph g = gen::with_ranks(gen::path(2), {1, 2});
  TransmissionSystem ts;
  Matrix f(2, 1);
  f << 1.0 + 1.0i, 3.0;
  ts.mats = {f, f.adjoint()};
  Matrix a = block_adjacency(g, ts);
  REQUIRE(a.rows() == 3);
  CHECK(a(1, 0) == 1.0 + 1.0i);
  CHECK(a(2, 0) == 3.0 + 0.0i);
  CHECK(a(0, 1) == 1.0 - 1.0i);
  CHECK(a(0, 2) == 3.0 + 0.0i);
  CHECK(a(0, 0) == 0.0 + 0.0i);
}

TEST_CASE("matrix-free action agrees with the assembled operator") {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen::random_graph(rng, 2, 6, true, true);
    g = gen::with_ranks(g, gen::random_ranks(rng, g));
    TransmissionSystem ts = gen::random_system(rng, g, trial % 2 == 0);

    Cochain x = Cochain::zero(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int i = 0; i < g.vertex(v).rank; ++i) x.blocks[v](i) = rng.cgaussian();

    Matrix lap = laplacian(g, ts);
    Vector direct = lap * x.flatten(g);
    Vector free_form = apply_laplacian(g, ts, x).flatten(g);
    CHECK((direct - free_form).norm() < 1e-11 * (1.0 + direct.norm()));

    // The same comparison under a non-uniform positive weight.
    DiagonalWeight w = DiagonalWeight::degrees(g);
    for (auto& block : w.entries)
      for (int i = 0; i < block.size(); ++i) block(i) += rng.uniform_pos();
    Vector dw = laplacian(g, ts, &w) * x.flatten(g);
    Vector fw = apply_laplacian(g, ts, x, &w).flatten(g);
    CHECK((dw - fw).norm() < 1e-11 * (1.0 + dw.norm()));
  }
}

TEST_CASE("degree weights expose loop double counting and reject isolation") {
  Graph g = Graph::make(gen::ids(2), {{0, 1}, {1, 1}});
  DiagonalWeight w = DiagonalWeight::degrees(g);
  CHECK(w.entries[0](0) == 1.0);
  CHECK(w.entries[1](0) == 3.0);

  Graph iso = Graph::make(gen::ids(2), {}); // no edges at all
  CHECK(code_of([&] { DiagonalWeight::degrees(iso); }) == errc::degree_zero);
}

TEST_CASE("explicit weights must be strictly positive and well shaped") {
  Graph g = gen::path(2);
  TransmissionSystem ts = identity_system(g);
  DiagonalWeight w;
  w.entries = {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, 0.0)};
  CHECK(code_of([&] { laplacian(g, ts, &w); }) == errc::bad_param);

  w.entries = {Eigen::VectorXd::Constant(1, 1.0)};
  CHECK(code_of([&] { laplacian(g, ts, &w); }) == errc::shape_error);

  w.entries = {Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(2, 1.0)};
  CHECK(code_of([&] { laplacian(g, ts, &w); }) == errc::shape_error);
}

TEST_CASE("cochains flatten and unflatten as exact inverses") {
  Rng rng(25);
  Graph g = gen::with_ranks(gen::cycle(3), {2, 1, 3});
  Cochain x = Cochain::zero(g);
  CHECK(x.norm() == 0.0);
  for (int v = 0; v < 3; ++v)
    for (int i = 0; i < g.vertex(v).rank; ++i) x.blocks[v](i) = rng.cgaussian();
  Vector flat = x.flatten(g);
  REQUIRE(flat.size() == 6);
  Cochain back = Cochain::unflatten(g, flat);
  for (int v = 0; v < 3; ++v) CHECK((back.blocks[v] - x.blocks[v]).norm() == 0.0);
  CHECK(x.norm() == doctest::Approx(flat.norm()).epsilon(1e-14));

  CHECK(code_of([&] { Cochain::unflatten(g, Vector::Zero(5)); }) == errc::shape_error);
  Cochain bad = x;
  bad.blocks[0] = Vector::Zero(1);
  CHECK(code_of([&] { bad.flatten(g); }) == errc::shape_error);
  TransmissionSystem ts = gen::random_system(rng, g, /*hermitian=*/true);
  CHECK(code_of([&] { apply_laplacian(g, ts, bad); }) == errc::shape_error);
}
