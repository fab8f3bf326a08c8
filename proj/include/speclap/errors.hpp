#pragma once

#include <stdexcept>
#include <string>

namespace speclap {

// Every failure mode the library reports. Codes are stable; the C API and the
// CLI map them to process-level statuses.
enum class errc {
  none = 0,
  bad_input,        // malformed document or argument
  unknown_vertex,   // vertex id not present in the graph
  bad_op_pairing,   // edge reversal map is not a fixed-point-free involution
  bad_rank,         // vertex rank < 1 in an input document
  not_simple,       // operation requires a simple loopless graph
  rank_mismatch,    // matrix endpoints need equal ranks
  shape_error,      // matrix or cochain has the wrong dimensions
  degree_zero,      // isolated vertex without an explicit weight
  not_hermitian,    // self-adjoint operation on a non-self-adjoint input
  no_convergence,   // eigensolver failed
  too_large,        // dimension above the dense-solver cap
  bad_param,        // scalar parameter out of range
  zero_volume,      // subset carries no ground-state mass
  zero_mass,        // cohesion sets carry no mass
  zero_denominator, // capacity functional undefined for the subset
  diameter_too_small,
  undefined_ratio,  // growth ratio M undefined for the ground state
  not_regular,
  not_symmetric,    // generator multiset not closed under inversion
  identity_in_s,    // identity element offered as a generator
  not_compatible,   // edge-matrix family violates its symmetry constraint
  not_in_upq,       // matrix fails indefinite-unitarity membership
  not_stochastic,   // walk matrix columns do not sum to one
  rank_clash,       // merged vertices have unequal ranks
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace speclap
