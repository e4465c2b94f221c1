#ifndef MCGCERT_REPEVAL_HPP
#define MCGCERT_REPEVAL_HPP

#include <cstdint>
#include <string>
#include <unordered_map>

#include "mcgcert/word.hpp"

namespace mcgcert {

// Joint image of a mapping class in the two checked representations.
struct RepImage {
  Gf2Matrix homology;
  Permutation punctures;

  RepImage operator*(const RepImage& rhs) const {
    return {homology * rhs.homology, punctures * rhs.punctures};
  }
  RepImage inverse() const { return {homology.inverse(), punctures.inverse()}; }
  bool is_identity() const { return homology.is_identity() && punctures.is_identity(); }
  bool operator==(const RepImage&) const = default;
};

// Evaluates words against one chart.  Symbol images: twists become
// transvections along the curve class with trivial puncture action; slides
// and the crosscap slide come from the nontwist tables (they fix every
// puncture); chart involutions carry their declared matrix and permutation;
// derived involutions expand through their definitions.  Full words are
// memoized by their print form.
class Evaluator {
 public:
  explicit Evaluator(const CurveChart& chart);

  RepImage eval(const MappingWord& word);
  RepImage eval_symbol(const GeneratorSymbol& symbol);

  struct CacheStats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };
  const CacheStats& stats() const { return stats_; }
  const CurveChart& chart() const { return *chart_; }

 private:
  RepImage compute(const MappingWord& word);

  const CurveChart* chart_;
  IntersectionForm form_;
  std::unordered_map<std::string, RepImage> memo_;
  CacheStats stats_;
};

struct IdentityVerdict {
  bool homology_equal = false;
  bool permutation_equal = false;
  bool both() const { return homology_equal && permutation_equal; }
};

IdentityVerdict check_identity(const MappingWord& lhs, const MappingWord& rhs,
                               const CurveChart& chart);

}  // namespace mcgcert

#endif
