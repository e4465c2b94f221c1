#ifndef MCGCERT_PERM_HPP
#define MCGCERT_PERM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgcert/params.hpp"

namespace mcgcert {

// Permutation of {1..n}.  Degree-0 permutations are legal (no punctures).
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  // Cycles use 1-based labels; unlisted points are fixed.  Singleton cycles
  // are accepted as explicit fixed points.  Throws on repeated or
  // out-of-range points.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles, int n);
  // Parses "(1 5)(2 4)" (commas also accepted); "()" is the identity.
  static Permutation parse_cycles(std::string_view text, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int i) const;  // 1-based
  Permutation operator*(const Permutation& rhs) const;  // apply rhs first
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

  std::string to_cycles() const;  // "(1 5)(2 4)", identity prints "()"
  std::size_t hash() const;

 private:
  std::vector<int> img_;  // 0-based images
};

// Base and strong generating set with per-level orbits and transversals.
// Built deterministically (no randomization) so runs are reproducible.
struct Bsgs {
  int degree = 0;
  std::vector<int> base;  // 1-based points
  std::vector<std::vector<Permutation>> level_generators;
  // transversal[i][p-1] = coset representative mapping base[i] to p.
  std::vector<std::vector<std::optional<Permutation>>> transversals;

  std::vector<Permutation> strong_generators() const;
  std::uint64_t order() const;  // product of basic orbit lengths
  bool contains(const Permutation& p) const;
};

Bsgs schreier_sims(const std::vector<Permutation>& generators);

std::uint64_t factorial(int n);  // throws for n > 20 (would overflow)

// The three reflection-style generators r1, r2, r3 claimed to generate
// Sym_n; the same index pattern covers both parities.
std::vector<Permutation> symn_lemma_generators(int n, Parity parity);

// Builds r1, r2, r3 and compares the generated order with n!.
// Throws when the parity of n does not match `parity`.
bool symn_generated(int n, Parity parity);

}  // namespace mcgcert

#endif
