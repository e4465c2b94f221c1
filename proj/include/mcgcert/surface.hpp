#ifndef MCGCERT_SURFACE_HPP
#define MCGCERT_SURFACE_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgcert/check.hpp"
#include "mcgcert/gf2.hpp"
#include "mcgcert/params.hpp"
#include "mcgcert/perm.hpp"

namespace mcgcert {

enum class CurveFamily { a, b, c, d, e, alpha, beta, xi, m, x, n1 };

// Curve names: "a1".."ar", "alpha3", and the singletons "xi", "m", "x", "n1".
struct CurveId {
  CurveFamily family = CurveFamily::a;
  int index = 0;  // 0 for singleton families

  std::string name() const;
  static CurveId parse(std::string_view name);
  auto operator<=>(const CurveId&) const = default;
};

inline CurveId curve(CurveFamily f, int index = 0) { return CurveId{f, index}; }

enum class Sidedness { two_sided, one_sided };

enum class InvolutionId { sigma, tau, I, J, K, W, rho1, rho2, rho3, rho4, rho5 };

std::string involution_name(InvolutionId id);
InvolutionId parse_involution(std::string_view name);
bool is_chart_declared(InvolutionId id);  // sigma..W carry chart matrices

// Declared action of an involution on a named curve: the image class, the
// image's curve name when the figure names it, and the orientation sign of
// the conjugation law.
struct TableEntry {
  InvolutionId f = InvolutionId::sigma;
  CurveId curve;
  std::optional<CurveId> image;
  Gf2Vector image_class;
  int eps = -1;
  bool stated = false;  // appears verbatim as a curve-action fact
};

struct CurveChart {
  SurfaceParams params;
  std::map<CurveId, Gf2Vector> classes;
  std::map<CurveId, Sidedness> sided;
  std::map<InvolutionId, Gf2Matrix> involution_homology;
  std::map<InvolutionId, Permutation> involution_puncture;
  std::vector<TableEntry> table;

  Gf2Matrix y_homology;
  Gf2Vector y_companion;  // two-sided class the crosscap slide pushes along
  std::vector<Gf2Matrix> v_homology;  // puncture slides v_1..v_n
  std::vector<Gf2Matrix> w_homology;  // even mode only

  CurveId n1_binding;  // the already-certified curve n1 is identified with
  std::uint64_t uid = 0;

  IntersectionForm form() const { return {params.g, params.homology_dim()}; }
  const Gf2Vector& curve_class(const CurveId& id) const;
  const TableEntry* find_entry(InvolutionId f, const CurveId& c) const;
};

// Builds the canonical chart for the given parameters.  The construction
// solves for the smallest reflection/transvection parameters that make every
// declared curve action hold, then validates itself; it throws
// std::runtime_error if the result does not validate.  Deterministic for
// fixed params.
CurveChart default_chart(const SurfaceParams& params);

// Every structural constraint as one pass/fail entry: sidedness against the
// form, involutivity, form preservation, puncture-block consistency, every
// table entry against the matrices, the stated curve-action facts, and the
// slide/crosscap-slide data.
std::vector<CheckResult> validate_chart(const CurveChart& chart, const SurfaceParams& params);

nlohmann::ordered_json chart_to_json(const CurveChart& chart);
CurveChart chart_from_json(const nlohmann::json& j);
CurveChart load_chart(const std::filesystem::path& path);
void dump_chart(const CurveChart& chart, const std::filesystem::path& path);

// All curves of the twist generating set Lambda, then the reduced set
// Lambda' whose twists get certificates.
std::vector<CurveId> lambda_curves(const SurfaceParams& params);
std::vector<CurveId> lambda_prime_curves(const SurfaceParams& params);

}  // namespace mcgcert

#endif
