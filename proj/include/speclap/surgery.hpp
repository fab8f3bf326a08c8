#pragma once

#include <map>
#include <string>
#include <vector>

#include "speclap/graph.hpp"
#include "speclap/transmission.hpp"

namespace speclap {

// A surjection from vertices onto contiguous class indices. Classes are
// ordered by their smallest member, so equal inputs give equal outputs no
// matter how the classes were spelled.
struct VertexPartition {
  std::vector<int> class_of;             // vertex index -> class index
  std::vector<std::vector<int>> members; // per class, sorted vertex indices
  std::vector<std::string> names;        // class id used for the merged vertex

  int class_count() const { return static_cast<int>(members.size()); }

  // Every vertex id must be mapped to a class name.
  static VertexPartition from_map(const Graph& g,
                                  const std::map<std::string, std::string>& vertex_to_class);

  // Class indices need not be contiguous or ordered; they are renumbered by
  // smallest member and each class is named after that member's vertex id.
  static VertexPartition from_class_of(const Graph& g, const std::vector<int>& class_of);

  static VertexPartition singletons(const Graph& g);
};

struct Collapsed {
  Graph graph;
  TransmissionSystem system;
};

struct Pushforward {
  Graph graph;
  TransmissionSystem system;
  DiagonalWeight weight; // original degree of the owning summand, per coordinate
};

struct Amalgamated {
  Graph graph;
  TransmissionSystem system;
  DiagonalWeight weight; // original degrees
};

// Merge each class into one vertex, keeping every directed edge and its
// matrix. Merged vertices take the common rank of their class (RankClash
// otherwise). Degrees add up, so eigenvalues interlace: with both spectra
// ascending, lambda_j(original) <= mu_j(merged) for Hermitian symmetric
// systems.
Collapsed collapse(const Graph& g, const TransmissionSystem& ts, const VertexPartition& part);

// Merge each class into one vertex whose space is the direct sum of the
// member spaces (summands in vertex order). Edge matrices act on the owning
// summands and vanish elsewhere. The returned weight keeps each coordinate's
// original degree; the weighted Laplacian is a permutation conjugate of the
// original, so the spectrum is unchanged.
Pushforward pushforward_collapse(const Graph& g, const TransmissionSystem& ts,
                                 const VertexPartition& part);

// Merge parallel edges by summing their matrices, and all loops at a vertex
// into one whose directions each carry half the total over every loop
// direction there. The returned weight keeps the original degrees; the
// weighted Laplacian is entrywise equal to the original.
Amalgamated amalgamate(const Graph& g, const TransmissionSystem& ts);

} // namespace speclap
