#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "speclap/bounds.hpp"
#include "speclap/constructors.hpp"
#include "speclap/graph.hpp"
#include "speclap/transmission.hpp"

namespace speclap {

using json = nlohmann::json;

// A graph document: vertices/edges always; per-edge matrices all-or-nothing
// ("forward"/"backward" on every edge, or on none for combinatorial use);
// optional "weights" map vertex-id -> per-coordinate positive reals.
struct SystemDoc {
  Graph graph;
  std::optional<TransmissionSystem> system;
  std::optional<DiagonalWeight> weight;
};

json parse_text(const std::string& text); // json::parse with bad_input errors

SystemDoc parse_system_doc(const json& j);
json system_doc_to_json(const Graph& g, const TransmissionSystem* ts = nullptr,
                        const DiagonalWeight* w = nullptr);

Matrix parse_matrix(const json& j); // row-major [[ [re,im], ... ], ...]
json matrix_to_json(const Matrix& m);

// {"classes":{"v0":"c0",...}} — read elsewhere into a VertexPartition.
std::map<std::string, std::string> parse_partition_doc(const json& j);

Association parse_association_doc(const json& j, const Graph& g); // "assoc" field

Eigen::MatrixXd parse_walk_doc(const json& j); // "probs" field

struct CayleyDoc {
  AbelianGroup group;
  std::vector<AbelianGroup::Elem> gens;
  EdgeMatrixFamily family;
};
// {"moduli":[...], "S":[[ints],...], "F":{"1,0":<matrix>,...}} (F optional).
CayleyDoc parse_cayley_doc(const json& j);

// Optional "barriers" list, ordered like the graph's undirected edges.
std::optional<std::vector<Matrix>> parse_barrier_list(const json& j);

json spectrum_to_json(const std::vector<cplx>& values); // list of [re, im]

json real_to_json(double x);       // finite -> number, +-infinity -> "inf"/"-inf"
double real_from_json(const json& j);

json bound_to_json(const BoundReport& r);

// Comma-separated vertex ids -> subset; repeats collapse, unknown ids throw.
VertexSubset parse_subset_csv(const Graph& g, const std::string& csv);

} // namespace speclap
