#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mexlab/qseries.hpp"

namespace mexlab::verify {

// Scale knobs shared by every registered identity; each identity reads the
// fields it needs and clamps r to its own domain. The defaults are the
// desk-scale run.
struct Params {
  long max_n = 40;
  std::vector<long> r_values = {1, 2, 3, 4};
  long max_j = -1;  // -1: all j
  int order = 120;
  std::vector<long> zexp_values = {1, 2, 3};
  long max_m = 10;  // depth of the finite-product collapse check
  bool override_ceiling = false;
  bool with_timings = false;   // leave duration_ms at 0 unless asked, so
                               // serialized reports stay byte-reproducible
  bool inject_mismatch = false;  // testing aid: corrupt one route to force a
                                 // witnessed failure
};

// First mismatch, smallest in lexicographic (n, r, j, m) order. Values are
// decimal strings (series coefficients are arbitrary precision); partitions
// are listed in enumeration order, at most 10 per side, and only for sides
// computed by an exhaustive scan.
struct Witness {
  long n = 0;
  std::optional<long> r;
  std::optional<long> j;
  std::optional<long> m;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> partitions_lhs;
  std::vector<std::string> partitions_rhs;
};

// Outcome of one domain/window reading of the chain-maex identity.
struct InterpretationResult {
  std::string domain;
  std::string window;
  bool pass = false;
  std::optional<Witness> witness;
};

struct IdentityReport {
  std::string identity_id;
  Params params;
  bool pass = false;
  std::optional<Witness> witness;
  // Populated by thm-chain-maex only: one entry per (domain, window) reading.
  std::vector<InterpretationResult> interpretations;
  std::int64_t duration_ms = 0;
};

class ResourceCeilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownIdentityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive-scan ceiling on max_n (default 90); the MEXLAB_MAX_N environment
// variable overrides it, and Params::override_ceiling bypasses the check.
long resource_ceiling();

// Registry, in fixed execution order.
std::vector<std::string> registered_identities();
std::string identity_description(const std::string& id);

IdentityReport verify_identity(const std::string& id, const Params& params);
std::vector<IdentityReport> run_suite(const Params& params);

// {identity_id, params:{max_n, r, j, order}, status, witness|null, duration_ms}
// with keys in sorted order; suites serialize as a JSON array.
std::string report_to_json(const IdentityReport& report);
std::string suite_to_json(const std::vector<IdentityReport>& reports);
std::string report_to_human(const IdentityReport& report);

}  // namespace mexlab::verify
