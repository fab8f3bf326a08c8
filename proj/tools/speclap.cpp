// Command-line front end: parses flags, loads JSON documents, and dispatches
// to the shared library's C interface. Exit codes: 0 all good, 1 a
// verification failed, 2 bad input or usage.

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "speclap.h"

namespace {

bool read_input(const std::string& path, std::string& out, std::string& err) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    out = ss.str();
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    err = "cannot open input: " + path;
    return false;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  out = ss.str();
  return true;
}

struct Options {
  std::string input;
  std::string output;
  std::string partition;
  std::string subset;
  std::string subset_a;
  std::string subset_b;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int limit = 16;
  int rank = 0;
  int spin = -1;
  bool subset_sweep = false;
};

int deliver(speclap_status st, char* text, const std::string& output_path) {
  if (text) {
    if (output_path.empty()) {
      std::fwrite(text, 1, std::strlen(text), stdout);
      std::fputc('\n', stdout);
    } else {
      std::ofstream f(output_path, std::ios::binary);
      if (!f) {
        std::fprintf(stderr, "error: cannot open output: %s\n", output_path.c_str());
        speclap_string_free(text);
        return 2;
      }
      f << text << '\n';
    }
    speclap_string_free(text);
  }
  if (st == SPECLAP_OK) return 0;
  if (st == SPECLAP_CHECK_FAILED) return 1;
  std::fprintf(stderr, "error: %s\n", speclap_last_error());
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and spectral-bound verification for transmission graph Laplacians"};
  app.require_subcommand(1);

  Options opt;
  int rc = 0;

  auto add_common = [&](CLI::App* sc, bool with_seed = false) {
    sc->add_option("--input", opt.input, "input JSON path, or - for stdin")->required();
    sc->add_option("--output", opt.output, "write the JSON result here instead of stdout");
    sc->add_option("--tol", opt.tol, "numeric tolerance")->capture_default_str();
    if (with_seed)
      sc->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    return sc;
  };

  auto with_doc = [&](auto fn) {
    return [&, fn]() {
      std::string doc, err;
      if (!read_input(opt.input, doc, err)) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        rc = 2;
        return;
      }
      char* out = nullptr;
      speclap_status st = fn(doc, &out);
      rc = deliver(st, out, opt.output);
    };
  };

  auto with_doc_and_partition = [&](auto fn) {
    return [&, fn]() {
      std::string doc, part, err;
      if (!read_input(opt.input, doc, err) || !read_input(opt.partition, part, err)) {
        std::fprintf(stderr, "error: %s\n", err.c_str());
        rc = 2;
        return;
      }
      char* out = nullptr;
      speclap_status st = fn(doc, part, &out);
      rc = deliver(st, out, opt.output);
    };
  };

  add_common(app.add_subcommand("spectrum", "eigenvalues of the normalized operator"))
      ->callback(with_doc([&](const std::string& d, char** out) {
        return speclap_spectrum_json(d.c_str(), opt.tol, out);
      }));

  {
    CLI::App* sc = app.add_subcommand("verify", "range check plus gap-bound sweeps");
    add_common(sc);
    sc->add_flag("--subset-sweep", opt.subset_sweep,
                 "run the gap bounds over every nonempty proper subset");
    sc->add_option("--limit", opt.limit, "largest vertex count swept")
        ->capture_default_str();
    sc->callback(with_doc([&](const std::string& d, char** out) {
      return speclap_verify_json(d.c_str(), opt.tol, opt.subset_sweep ? 1 : 0, opt.limit,
                                 out);
    }));
  }

  {
    CLI::App* sc = app.add_subcommand("bounds", "gap bounds for one vertex subset");
    add_common(sc);
    sc->add_option("--subset", opt.subset, "comma-separated vertex ids")->required();
    sc->callback(with_doc([&](const std::string& d, char** out) {
      return speclap_bounds_json(d.c_str(), opt.subset.c_str(), opt.tol, out);
    }));
  }

  add_common(app.add_subcommand(
                 "cayley", "character-formula spectrum checked against the dense solver"))
      ->callback(with_doc([&](const std::string& d, char** out) {
        return speclap_cayley_json(d.c_str(), opt.tol, out);
      }));

  {
    CLI::App* sc = app.add_subcommand(
        "assoc", "association system: spectrum, harmonic kernel, cohesion estimate");
    add_common(sc);
    sc->add_option("--subset-a", opt.subset_a, "first vertex set for the cohesion bound");
    sc->add_option("--subset-b", opt.subset_b, "second vertex set for the cohesion bound");
    sc->callback(with_doc([&](const std::string& d, char** out) {
      return speclap_assoc_json(d.c_str(), opt.subset_a.c_str(), opt.subset_b.c_str(),
                                opt.tol, out);
    }));
  }

  {
    CLI::App* sc = app.add_subcommand(
        "quantum", "scattering system from indefinite-unitary barrier matrices");
    add_common(sc, true);
    sc->add_option("--spin", opt.spin, "spin parameter n (vertex rank 2(n+1))");
    sc->callback(with_doc([&](const std::string& d, char** out) {
      return speclap_quantum_json(d.c_str(), opt.spin, opt.seed, opt.tol, out);
    }));
  }

  add_common(app.add_subcommand("walk", "random-walk system from a column-stochastic matrix"))
      ->callback(with_doc([&](const std::string& d, char** out) {
        return speclap_walk_json(d.c_str(), opt.tol, out);
      }));

  {
    CLI::App* sc = app.add_subcommand("collapse", "merge vertex classes, keeping all edges");
    add_common(sc);
    sc->add_option("--partition", opt.partition, "partition JSON path")->required();
    sc->callback(with_doc_and_partition(
        [&](const std::string& d, const std::string& p, char** out) {
          return speclap_collapse_json(d.c_str(), p.c_str(), opt.tol, out);
        }));
  }

  {
    CLI::App* sc = app.add_subcommand(
        "pushforward", "merge vertex classes onto direct-sum spaces (spectrum preserved)");
    add_common(sc);
    sc->add_option("--partition", opt.partition, "partition JSON path")->required();
    sc->callback(with_doc_and_partition(
        [&](const std::string& d, const std::string& p, char** out) {
          return speclap_pushforward_json(d.c_str(), p.c_str(), opt.tol, out);
        }));
  }

  add_common(app.add_subcommand("amalgamate",
                                "merge parallel edges and loops (Laplacian preserved)"))
      ->callback(with_doc([&](const std::string& d, char** out) {
        return speclap_amalgamate_json(d.c_str(), opt.tol, out);
      }));

  add_common(app.add_subcommand("dual", "edge dual graph and incidence identities"))
      ->callback(with_doc([&](const std::string& d, char** out) {
        return speclap_dual_json(d.c_str(), out);
      }));

  {
    CLI::App* sc =
        app.add_subcommand("random", "seeded strictly unitary system on a graph");
    add_common(sc, true);
    sc->add_option("--rank", opt.rank, "override every vertex rank");
    sc->callback(with_doc([&](const std::string& d, char** out) {
      return speclap_random_json(d.c_str(), opt.rank, opt.seed, out);
    }));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
