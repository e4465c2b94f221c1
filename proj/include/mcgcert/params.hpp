#ifndef MCGCERT_PARAMS_HPP
#define MCGCERT_PARAMS_HPP

#include <algorithm>
#include <string>

namespace mcgcert {

enum class Parity { odd, even };

inline std::string parity_name(Parity p) { return p == Parity::odd ? "odd" : "even"; }

// Genus/puncture bookkeeping.  Odd mode: g = 2r+1 with g >= 13, punctures
// n = 2l+1 (n = 0 allowed).  Even mode: g = 2r+2 with r odd, so g = 0 mod 4
// and g >= 16; n = 2l.  The index k = floor(r/2) anchors the cut-and-reflect
// construction, which needs k+3 <= r.
struct SurfaceParams {
  int g = 0;
  int n = 0;
  int r = 0;
  int k = 0;
  int l = 0;
  Parity parity = Parity::odd;

  int homology_dim() const { return g + std::max(n - 1, 0); }
  bool operator==(const SurfaceParams&) const = default;
};

// Throws std::invalid_argument naming the violated constraint.
SurfaceParams build_params(int g, int n);

}  // namespace mcgcert

#endif
