#include "speclap.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "speclap/spectra.hpp"
#include "speclap/verbs.hpp"

namespace {

thread_local std::string t_error = "ok";

speclap_status map_code(speclap::errc c) {
  switch (c) {
    case speclap::errc::no_convergence:
    case speclap::errc::internal:
      return SPECLAP_ERROR;
    default:
      return SPECLAP_BAD_INPUT;
  }
}

template <typename F>
speclap_status guarded(F&& f) {
  try {
    return f();
  } catch (const speclap::Error& e) {
    t_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_error = e.what();
    return SPECLAP_ERROR;
  } catch (...) {
    t_error = "unknown failure";
    return SPECLAP_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

speclap_status require(const char* p, const char* what) {
  if (p) return SPECLAP_OK;
  t_error = std::string("null ") + what;
  return SPECLAP_BAD_INPUT;
}

speclap_status emit(const speclap::verbs::Outcome& o, char** out) {
  if (!out) {
    t_error = "null output parameter";
    return SPECLAP_ERROR;
  }
  *out = dup_string(o.doc.dump(2));
  if (!*out) {
    t_error = "out of memory";
    return SPECLAP_ERROR;
  }
  return o.check_failed ? SPECLAP_CHECK_FAILED : SPECLAP_OK;
}

} // namespace

struct speclap_system {
  speclap::Graph graph;
  speclap::TransmissionSystem ts;
  std::optional<speclap::DiagonalWeight> weight;

  const speclap::DiagonalWeight* weight_ptr() const {
    return weight ? &*weight : nullptr;
  }
};

extern "C" {

const char* speclap_last_error(void) { return t_error.c_str(); }

void speclap_string_free(char* s) { std::free(s); }

speclap_status speclap_system_from_json(const char* doc, speclap_system** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  if (!out) {
    t_error = "null output parameter";
    return SPECLAP_ERROR;
  }
  *out = nullptr;
  return guarded([&] {
    speclap::SystemDoc sd = speclap::parse_system_doc(speclap::parse_text(doc));
    auto* sys = new speclap_system;
    sys->graph = std::move(sd.graph);
    sys->ts = sd.system ? std::move(*sd.system) : speclap::identity_system(sys->graph);
    sys->weight = std::move(sd.weight);
    *out = sys;
    return SPECLAP_OK;
  });
}

void speclap_system_free(speclap_system* sys) { delete sys; }

int speclap_system_vertex_count(const speclap_system* sys) {
  return sys ? sys->graph.vertex_count() : 0;
}

int speclap_system_dimension(const speclap_system* sys) {
  return sys ? sys->graph.total_dimension() : 0;
}

int speclap_system_is_hermitian(const speclap_system* sys, double tol) {
  if (!sys) return 0;
  int result = 0;
  guarded([&] {
    result = speclap::classify(sys->graph, sys->ts, speclap::classification_tol(tol))
                 .hermitian_symmetric
                 ? 1
                 : 0;
    return SPECLAP_OK;
  });
  return result;
}

speclap_status speclap_system_eigenvalues(const speclap_system* sys, double tol,
                                          double* re, double* im, int capacity,
                                          int* written) {
  if (written) *written = 0;
  if (!sys) {
    t_error = "null system";
    return SPECLAP_BAD_INPUT;
  }
  if ((capacity > 0 && (!re || !im)) || !written) {
    t_error = "null output parameter";
    return SPECLAP_ERROR;
  }
  return guarded([&] {
    speclap::Spectrum sp =
        speclap::system_spectrum(sys->graph, sys->ts, sys->weight_ptr(), tol);
    int n = std::min<int>(capacity, static_cast<int>(sp.values.size()));
    for (int i = 0; i < n; ++i) {
      re[i] = sp.values[i].real();
      im[i] = sp.values[i].imag();
    }
    *written = n;
    return SPECLAP_OK;
  });
}

speclap_status speclap_spectrum_json(const char* doc, double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::spectrum(doc, tol), out); });
}

speclap_status speclap_verify_json(const char* doc, double tol, int subset_sweep,
                                   int limit, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded(
      [&] { return emit(speclap::verbs::verify(doc, tol, subset_sweep != 0, limit), out); });
}

speclap_status speclap_bounds_json(const char* doc, const char* subset_csv, double tol,
                                   char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  std::string subset = subset_csv ? subset_csv : "";
  return guarded([&] { return emit(speclap::verbs::bounds(doc, subset, tol), out); });
}

speclap_status speclap_cayley_json(const char* doc, double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::cayley(doc, tol), out); });
}

speclap_status speclap_assoc_json(const char* doc, const char* subset_a_csv,
                                  const char* subset_b_csv, double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  std::string a = subset_a_csv ? subset_a_csv : "";
  std::string b = subset_b_csv ? subset_b_csv : "";
  return guarded([&] { return emit(speclap::verbs::assoc(doc, a, b, tol), out); });
}

speclap_status speclap_quantum_json(const char* doc, int spin, uint64_t seed, double tol,
                                    char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::quantum(doc, spin, seed, tol), out); });
}

speclap_status speclap_walk_json(const char* doc, double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::walk(doc, tol), out); });
}

speclap_status speclap_collapse_json(const char* doc, const char* partition_doc,
                                     double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK ||
      require(partition_doc, "partition document") != SPECLAP_OK)
    return SPECLAP_BAD_INPUT;
  return guarded(
      [&] { return emit(speclap::verbs::collapse(doc, partition_doc, tol), out); });
}

speclap_status speclap_pushforward_json(const char* doc, const char* partition_doc,
                                        double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK ||
      require(partition_doc, "partition document") != SPECLAP_OK)
    return SPECLAP_BAD_INPUT;
  return guarded(
      [&] { return emit(speclap::verbs::pushforward(doc, partition_doc, tol), out); });
}

speclap_status speclap_amalgamate_json(const char* doc, double tol, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::amalgamate(doc, tol), out); });
}

speclap_status speclap_dual_json(const char* doc, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::dual(doc), out); });
}

speclap_status speclap_random_json(const char* doc, int rank, uint64_t seed, char** out) {
  if (require(doc, "document") != SPECLAP_OK) return SPECLAP_BAD_INPUT;
  return guarded([&] { return emit(speclap::verbs::random_system(doc, rank, seed), out); });
}

} // extern "C"
