#ifndef MCGCERT_WORD_HPP
#define MCGCERT_WORD_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mcgcert/surface.hpp"

namespace mcgcert {

// One generator of the mapping class group: a Dehn twist along a named
// curve, the crosscap slide y, a puncture slide v_i / w_i, or an involution
// symbol (chart-declared or derived).
struct GeneratorSymbol {
  enum class Kind { twist, crosscap_slide, puncture_slide_v, puncture_slide_w, involution };

  Kind kind = Kind::involution;
  CurveId curve_id;        // twist only
  int slide_index = 0;     // v/w only
  InvolutionId involution = InvolutionId::sigma;

  static GeneratorSymbol twist(CurveId c);
  static GeneratorSymbol crosscap_slide();
  static GeneratorSymbol slide_v(int i);
  static GeneratorSymbol slide_w(int i);
  static GeneratorSymbol invol(InvolutionId id);

  bool is_involution() const { return kind == Kind::involution; }
  std::string name() const;  // "t[a3]", "y", "v[2]", "w[1]", "sigma", "rho1"
  static GeneratorSymbol parse(std::string_view name);
  auto operator<=>(const GeneratorSymbol&) const = default;
};

struct Letter {
  GeneratorSymbol symbol;
  int exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

// Word over the generator alphabet.  Words multiply like maps: the rightmost
// letter acts first.
class MappingWord {
 public:
  MappingWord() = default;
  explicit MappingWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  static MappingWord single(GeneratorSymbol s, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  MappingWord& append(const MappingWord& w);
  MappingWord inverse() const;
  bool operator==(const MappingWord&) const = default;

  std::string to_string() const;  // "tau sigma t[a1]^-1"
  static MappingWord parse(std::string_view text);

 private:
  std::vector<Letter> letters_;
};

// Cancels adjacent s s^-1 pairs; involution letters are their own inverses,
// so their exponents normalize to +1 and equal neighbours cancel.
MappingWord free_reduce(const MappingWord& w);

// free_reduce(f w f^-1)
MappingWord conjugate(const MappingWord& f, const MappingWord& w);

// Definition of a derived involution as a word in chart symbols.
MappingWord derived_involution_definition(InvolutionId rho, const SurfaceParams& params);

struct Certificate {
  GeneratorSymbol target;
  MappingWord word;  // involution symbols only
  std::vector<std::string> trace;
};

// Certificate builder.  Replays the conjugation recursion: a-chain from
// rho1, c/b/d-chains through I, e-chain through J and T = J I, slides from
// rho2, the crosscap slide from rho3, and in even mode the two extra twists
// from rho4 / rho5.  Intermediate certificates are cached per chart.
class CertificateEngine {
 public:
  explicit CertificateEngine(const CurveChart& chart);

  // Throws std::invalid_argument("not a required generator") for targets
  // outside Lambda' twists, slides and y.
  Certificate certify(const GeneratorSymbol& target);

  const CurveChart& chart() const { return *chart_; }

 private:
  Certificate& certify_internal(const GeneratorSymbol& target);
  Certificate make_seed(const GeneratorSymbol& target, InvolutionId left, InvolutionId right,
                        const char* rule);

  const CurveChart* chart_;
  std::map<GeneratorSymbol, Certificate> cache_;
};

// The full target list: Lambda' twists, v_1..v_n (and w_1..w_n in even
// mode), and the crosscap slide.
std::vector<GeneratorSymbol> required_targets(const SurfaceParams& params);

std::vector<Certificate> certify_all(const CurveChart& chart);

std::set<InvolutionId> alphabet_census(const std::vector<Certificate>& certs);

// The involution alphabet of the mode: 8 symbols (odd), 11 (even).
std::set<InvolutionId> involution_alphabet(const SurfaceParams& params);

}  // namespace mcgcert

#endif
