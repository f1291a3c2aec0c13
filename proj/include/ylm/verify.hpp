#pragma once

// Verification suites: every identity is checked exactly in the function
// algebra and recorded, never thrown. A "flagged" record marks a reproducible
// constant-factor discrepancy between a stated formula and the derived value.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ylm/inner_product.hpp"

namespace ylm {

enum class SuiteName { su2, ladder_l, u11_K, u11_I, mixed_A, adjoint, orthonormality, generation, parity, all };

std::string to_string(SuiteName s);
/// Throws std::invalid_argument on unknown names.
SuiteName parse_suite(const std::string& name);

struct SuiteConfig {
  SuiteName suite = SuiteName::all;
  long l_max = 8;
  long d_max = 9;
  long s_max = 9;
  long random_trials = 20;
  long adjoint_pairs = 50;
  std::uint64_t seed = 20240601;
  double numeric_tolerance = 1e-10;

    /// Throws std::invalid_argument when a bound is out of range.
  void validate() const;
};

enum class Status { pass, fail, flagged };
std::string to_string(Status s);

using Params = std::vector<std::pair<std::string, long>>;

struct CheckRecord {
  std::string identity_id;
  Params params;
  Status status = Status::fail;
  bool exact_zero = false;
  double float_dev = 0.0;
  std::string note;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t flagged = 0;
};

struct VerificationReport {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  Summary summary;
  std::string artifact_version;
};

VerificationReport run_suite(const SuiteConfig& config);

/// Canonical JSON report (schema version 1).
std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
inline constexpr const char* kReportSchemaVersion = "1";

/// Read-through cache of closed-form harmonics.
class HarmonicCache {
 public:
  const SphereFunction& get(long l, long m);
  const SphereFunction& get(const HarmonicIndex& idx) { return get(idx.l, idx.m); }

 private:
  std::map<HarmonicIndex, SphereFunction> cache_;
};

/// Deterministic generator keyed by (seed, tag).
std::mt19937_64 seeded_rng(std::uint64_t seed, const std::string& tag);

/// Rational combination of 1-4 random harmonics with l <= l_max; smooth by construction.
SphereFunction random_smooth_function(std::mt19937_64& rng, long l_max, HarmonicCache& cache);

}  // namespace ylm
