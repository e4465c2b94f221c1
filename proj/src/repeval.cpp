#include "mcgcert/repeval.hpp"

#include <stdexcept>

namespace mcgcert {

Evaluator::Evaluator(const CurveChart& chart)
    : chart_(&chart), form_(chart.params.g, chart.params.homology_dim()) {}

RepImage Evaluator::eval_symbol(const GeneratorSymbol& s) {
  const SurfaceParams& p = chart_->params;
  Permutation trivial = Permutation::identity(p.n);
  switch (s.kind) {
    case GeneratorSymbol::Kind::twist:
      return {transvection(form_, chart_->curve_class(s.curve_id)), trivial};
    case GeneratorSymbol::Kind::crosscap_slide:
      return {chart_->y_homology, trivial};
    case GeneratorSymbol::Kind::puncture_slide_v: {
      int i = s.slide_index;
      if (i < 1 || i > static_cast<int>(chart_->v_homology.size()))
        throw std::invalid_argument("eval: unresolvable symbol " + s.name());
      return {chart_->v_homology[static_cast<std::size_t>(i - 1)], trivial};
    }
    case GeneratorSymbol::Kind::puncture_slide_w: {
      int i = s.slide_index;
      if (i < 1 || i > static_cast<int>(chart_->w_homology.size()))
        throw std::invalid_argument("eval: unresolvable symbol " + s.name());
      return {chart_->w_homology[static_cast<std::size_t>(i - 1)], trivial};
    }
    case GeneratorSymbol::Kind::involution: {
      InvolutionId id = s.involution;
      if (is_chart_declared(id)) {
        auto hit = chart_->involution_homology.find(id);
        auto pit = chart_->involution_puncture.find(id);
        if (hit == chart_->involution_homology.end() ||
            pit == chart_->involution_puncture.end())
          throw std::invalid_argument("eval: unresolvable symbol " + s.name());
        return {hit->second, pit->second};
      }
      return eval(derived_involution_definition(id, p));
    }
  }
  throw std::invalid_argument("eval: unresolvable symbol");
}

RepImage Evaluator::compute(const MappingWord& word) {
  RepImage acc{Gf2Matrix::identity(chart_->params.homology_dim()),
               Permutation::identity(chart_->params.n)};
  for (const auto& l : word.letters()) {
    RepImage img = eval_symbol(l.symbol);
    if (l.exponent == -1) img = img.inverse();
    acc = acc * img;
  }
  return acc;
}

RepImage Evaluator::eval(const MappingWord& word) {
  std::string key = word.to_string();
  auto it = memo_.find(key);
  if (it != memo_.end()) {
    ++stats_.hits;
    return it->second;
  }
  ++stats_.misses;
  RepImage img = compute(word);
  memo_.emplace(std::move(key), img);
  return img;
}

IdentityVerdict check_identity(const MappingWord& lhs, const MappingWord& rhs,
                               const CurveChart& chart) {
  Evaluator ev(chart);
  RepImage a = ev.eval(lhs);
  RepImage b = ev.eval(rhs);
  return {a.homology == b.homology, a.punctures == b.punctures};
}

}  // namespace mcgcert
