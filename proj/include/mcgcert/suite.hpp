#ifndef MCGCERT_SUITE_HPP
#define MCGCERT_SUITE_HPP

#include <filesystem>
#include <optional>

#include "mcgcert/repeval.hpp"

namespace mcgcert {

struct CensusReport {
  std::vector<std::string> alphabet;      // the mode's involution symbols
  std::vector<std::string> used_letters;  // letters appearing in certificates
  int expected_size = 0;
  bool ok = false;
};

struct PiReport {
  bool applicable = false;  // n >= 2
  bool surjective = false;
  std::uint64_t order = 0;
  std::uint64_t expected = 0;
  std::vector<std::pair<std::string, std::string>> generators;  // symbol -> cycles
};

struct VerificationReport {
  SurfaceParams params;
  std::vector<CheckResult> checks;
  CensusReport census;
  PiReport pi;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  int total = 0, passed = 0, failed = 0, skipped = 0;
  int substantive = 0, substantive_passed = 0, definitional = 0;
  bool overall = false;

  nlohmann::ordered_json to_json() const;
};

// Runs the full verification: chart validation, involutivity of the whole
// alphabet, every stated conjugation identity, every certificate, the census
// and the puncture-permutation checks.  Honors MCGCERT_WORKERS.
VerificationReport run_suite(const SurfaceParams& params, const CurveChart& chart);
VerificationReport run_suite(int g, int n,
                             const std::optional<std::filesystem::path>& chart_path);

// Certificate files.
void write_certificates(const std::filesystem::path& path, const CurveChart& chart);
nlohmann::ordered_json certificates_to_json(const CurveChart& chart,
                                            const std::vector<Certificate>& certs);

struct CertificateOutcome {
  std::string target;
  bool homology_ok = false;
  bool permutation_ok = false;
  bool pi_trivial = false;
};

struct CertificateCheckReport {
  SurfaceParams params;
  int count_expected = 0;
  int count_header = 0;
  std::vector<CertificateOutcome> outcomes;
  bool all_ok = false;
  nlohmann::ordered_json to_json() const;
};

CertificateCheckReport check_certificates(const std::filesystem::path& certs_path,
                                          const std::optional<std::filesystem::path>& chart_path);

// Expected number of exported certificates: |Lambda'| + n + 1, plus n more
// (the w slides) in even mode.
int expected_certificate_count(const SurfaceParams& params);

struct SymnRow {
  int n = 0;
  Parity parity = Parity::odd;
  bool lemma_generated = false;
  bool pi_generated = false;
  std::uint64_t order = 0;
  std::uint64_t expected = 0;
};

std::vector<SymnRow> symn_sweep(int max_n);
nlohmann::ordered_json symn_to_json(const std::vector<SymnRow>& rows);

int worker_count();  // MCGCERT_WORKERS, default 1

}  // namespace mcgcert

#endif
