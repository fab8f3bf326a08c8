#pragma once

#include <cstdint>
#include <string>

#include "speclap/json_io.hpp"

namespace speclap::verbs {

// One command's JSON output plus whether a verification it ran came out
// negative (distinct from errors, which are thrown).
struct Outcome {
  json doc;
  bool check_failed = false;
};

Outcome spectrum(const std::string& doc, double tol);
Outcome verify(const std::string& doc, double tol, bool subset_sweep, int limit);
Outcome bounds(const std::string& doc, const std::string& subset_csv, double tol);
Outcome cayley(const std::string& doc, double tol);
Outcome assoc(const std::string& doc, const std::string& subset_a_csv,
              const std::string& subset_b_csv, double tol);
Outcome quantum(const std::string& doc, int spin, std::uint64_t seed, double tol);
Outcome walk(const std::string& doc, double tol);
Outcome collapse(const std::string& doc, const std::string& partition_doc, double tol);
Outcome pushforward(const std::string& doc, const std::string& partition_doc, double tol);
Outcome amalgamate(const std::string& doc, double tol);
Outcome dual(const std::string& doc);
Outcome random_system(const std::string& doc, int rank, std::uint64_t seed);

} // namespace speclap::verbs
