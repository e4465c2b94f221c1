#include "mcgcert/word.hpp"

#include <sstream>
#include <stdexcept>

namespace mcgcert {

GeneratorSymbol GeneratorSymbol::twist(CurveId c) {
  GeneratorSymbol s;
  s.kind = Kind::twist;
  s.curve_id = c;
  return s;
}
GeneratorSymbol GeneratorSymbol::crosscap_slide() {
  GeneratorSymbol s;
  s.kind = Kind::crosscap_slide;
  return s;
}
GeneratorSymbol GeneratorSymbol::slide_v(int i) {
  GeneratorSymbol s;
  s.kind = Kind::puncture_slide_v;
  s.slide_index = i;
  return s;
}
GeneratorSymbol GeneratorSymbol::slide_w(int i) {
  GeneratorSymbol s;
  s.kind = Kind::puncture_slide_w;
  s.slide_index = i;
  return s;
}
GeneratorSymbol GeneratorSymbol::invol(InvolutionId id) {
  GeneratorSymbol s;
  s.kind = Kind::involution;
  s.involution = id;
  return s;
}

std::string GeneratorSymbol::name() const {
  switch (kind) {
    case Kind::twist: return "t[" + curve_id.name() + "]";
    case Kind::crosscap_slide: return "y";
    case Kind::puncture_slide_v: return "v[" + std::to_string(slide_index) + "]";
    case Kind::puncture_slide_w: return "w[" + std::to_string(slide_index) + "]";
    case Kind::involution: return involution_name(involution);
  }
  return "?";
}

GeneratorSymbol GeneratorSymbol::parse(std::string_view s) {
  if (s == "y") return crosscap_slide();
  auto bracket = [&](std::string_view prefix) -> std::optional<std::string> {
    if (s.size() > prefix.size() + 1 && s.substr(0, prefix.size()) == prefix &&
        s.back() == ']')
      return std::string(s.substr(prefix.size(), s.size() - prefix.size() - 1));
    return std::nullopt;
  };
  if (auto inner = bracket("t[")) return twist(CurveId::parse(*inner));
  if (auto inner = bracket("v[")) return slide_v(std::stoi(*inner));
  if (auto inner = bracket("w[")) return slide_w(std::stoi(*inner));
  return invol(parse_involution(s));
}

MappingWord MappingWord::single(GeneratorSymbol s, int exponent) {
  MappingWord w;
  w.letters_.push_back({s, exponent});
  return w;
}

MappingWord& MappingWord::append(const MappingWord& w) {
  letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  return *this;
}

MappingWord MappingWord::inverse() const {
  MappingWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->symbol, -it->exponent});
  return out;
}

std::string MappingWord::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << ' ';
    os << l.symbol.name();
    if (l.exponent == -1) os << "^-1";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

MappingWord MappingWord::parse(std::string_view text) {
  MappingWord out;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      exp = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    out.letters_.push_back({GeneratorSymbol::parse(tok), exp});
  }
  return out;
}

MappingWord free_reduce(const MappingWord& w) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.symbol.is_involution()) l.exponent = 1;
    if (!out.empty() && out.back().symbol == l.symbol) {
      bool cancels = l.symbol.is_involution() ? out.back().exponent == l.exponent
                                              : out.back().exponent == -l.exponent;
      if (cancels) {
        out.pop_back();
        continue;
      }
    }
    out.push_back(l);
  }
  return MappingWord(std::move(out));
}

MappingWord conjugate(const MappingWord& f, const MappingWord& w) {
  MappingWord out = f;
  out.append(w);
  out.append(f.inverse());
  return free_reduce(out);
}

MappingWord derived_involution_definition(InvolutionId rho, const SurfaceParams& params) {
  bool even = params.parity == Parity::even;
  auto inv = [](InvolutionId id) { return MappingWord::single(GeneratorSymbol::invol(id)); };
  switch (rho) {
    case InvolutionId::rho1: {
      MappingWord w = inv(InvolutionId::tau);
      w.append(MappingWord::single(GeneratorSymbol::twist(curve(CurveFamily::a, 1))));
      return w;
    }
    case InvolutionId::rho2: {
      if (params.n < 1)
        throw std::invalid_argument("rho2 is undefined without punctures (no v1)");
      MappingWord w = inv(even ? InvolutionId::K : InvolutionId::tau);
      w.append(MappingWord::single(GeneratorSymbol::slide_v(1)));
      return w;
    }
    case InvolutionId::rho3: {
      MappingWord w = inv(InvolutionId::W);
      w.append(MappingWord::single(GeneratorSymbol::crosscap_slide()));
      return w;
    }
    case InvolutionId::rho4: {
      if (!even) throw std::invalid_argument("rho4 exists only in even mode");
      MappingWord w = inv(InvolutionId::J);
      w.append(MappingWord::single(GeneratorSymbol::twist(curve(CurveFamily::b, params.r + 1))));
      return w;
    }
    case InvolutionId::rho5: {
      if (!even) throw std::invalid_argument("rho5 exists only in even mode");
      MappingWord w = inv(InvolutionId::J);
      w.append(MappingWord::single(GeneratorSymbol::twist(curve(CurveFamily::c, params.r))));
      return w;
    }
    default:
      throw std::invalid_argument(involution_name(rho) + " is chart-declared, not derived");
  }
}

std::set<InvolutionId> involution_alphabet(const SurfaceParams& params) {
  std::set<InvolutionId> out{InvolutionId::sigma, InvolutionId::tau, InvolutionId::I,
                             InvolutionId::J,     InvolutionId::W,   InvolutionId::rho1,
                             InvolutionId::rho2,  InvolutionId::rho3};
  if (params.parity == Parity::even) {
    out.insert(InvolutionId::K);
    out.insert(InvolutionId::rho4);
    out.insert(InvolutionId::rho5);
  }
  return out;
}

std::vector<GeneratorSymbol> required_targets(const SurfaceParams& params) {
  std::vector<GeneratorSymbol> out;
  for (const auto& c : lambda_prime_curves(params)) out.push_back(GeneratorSymbol::twist(c));
  for (int i = 1; i <= params.n; ++i) out.push_back(GeneratorSymbol::slide_v(i));
  if (params.parity == Parity::even)
    for (int i = 1; i <= params.n; ++i) out.push_back(GeneratorSymbol::slide_w(i));
  out.push_back(GeneratorSymbol::crosscap_slide());
  return out;
}

CertificateEngine::CertificateEngine(const CurveChart& chart) : chart_(&chart) {}

namespace {

MappingWord invol_word(InvolutionId id) {
  return MappingWord::single(GeneratorSymbol::invol(id));
}

MappingWord rule_R() {  // R = tau sigma
  MappingWord w = invol_word(InvolutionId::tau);
  w.append(invol_word(InvolutionId::sigma));
  return w;
}

MappingWord rule_R_st() {  // the even-mode slide transport st = sigma tau
  MappingWord w = invol_word(InvolutionId::sigma);
  w.append(invol_word(InvolutionId::tau));
  return w;
}

MappingWord rule_T() {  // T = J I
  MappingWord w = invol_word(InvolutionId::J);
  w.append(invol_word(InvolutionId::I));
  return w;
}

}  // namespace

Certificate CertificateEngine::make_seed(const GeneratorSymbol& target, InvolutionId left,
                                         InvolutionId right, const char* rule) {
  Certificate c;
  c.target = target;
  MappingWord w = invol_word(left);
  w.append(invol_word(right));
  c.word = w;
  c.trace = {rule};
  return c;
}

Certificate& CertificateEngine::certify_internal(const GeneratorSymbol& target) {
  auto it = cache_.find(target);
  if (it != cache_.end()) return it->second;

  const SurfaceParams& p = chart_->params;
  const int r = p.r, k = p.k, n = p.n;
  bool even = p.parity == Parity::even;

  auto conj_of = [&](const GeneratorSymbol& inner, const MappingWord& by, const char* rule,
                     bool invert) {
    Certificate base = certify_internal(inner);  // copy: recursion may rehash cache_
    Certificate c;
    c.target = target;
    MappingWord w = invert ? base.word.inverse() : base.word;
    c.word = conjugate(by, w);
    c.trace = std::move(base.trace);
    c.trace.push_back(rule);
    return c;
  };
  auto twist_of = [](CurveFamily f, int i) { return GeneratorSymbol::twist(curve(f, i)); };

  Certificate result;
  bool made = false;

  if (target.kind == GeneratorSymbol::Kind::twist) {
    CurveId id = target.curve_id;
    int i = id.index;
    switch (id.family) {
      case CurveFamily::a:
        if (i == 1) {
          result = make_seed(target, InvolutionId::tau, InvolutionId::rho1, "R1");
        } else {
          result = conj_of(twist_of(CurveFamily::a, i - 1), rule_R(),
                           ("R2 a" + std::to_string(i)).c_str(), false);
        }
        made = true;
        break;
      case CurveFamily::c:
        if (even && i == r) {
          result = make_seed(target, InvolutionId::J, InvolutionId::rho5, "R12 c");
        } else if (i == k + 1) {
          // t_{c_{k+1}} = I t_{a_{k+3}}^{-1} I
          Certificate base = certify_internal(twist_of(CurveFamily::a, k + 3));
          result.target = target;
          MappingWord w = invol_word(InvolutionId::I);
          w.append(base.word.inverse());
          w.append(invol_word(InvolutionId::I));
          result.word = free_reduce(w);
          result.trace = base.trace;
          result.trace.push_back("R3");
        } else if (i > k + 1) {
          result = conj_of(twist_of(CurveFamily::c, i - 1), rule_R(),
                           ("R4 c" + std::to_string(i)).c_str(), false);
        } else {
          result = conj_of(twist_of(CurveFamily::c, i + 1), rule_R().inverse(),
                           ("R4 c" + std::to_string(i)).c_str(), false);
        }
        made = true;
        break;
      case CurveFamily::b:
        if (even && i == r + 1) {
          result = make_seed(target, InvolutionId::J, InvolutionId::rho4, "R12 b");
        } else if (i == k) {
          Certificate base = certify_internal(twist_of(CurveFamily::c, k));
          result.target = target;
          MappingWord w = invol_word(InvolutionId::I);
          w.append(base.word.inverse());
          w.append(invol_word(InvolutionId::I));
          result.word = free_reduce(w);
          result.trace = base.trace;
          result.trace.push_back("R5");
        } else if (i > k) {
          result = conj_of(twist_of(CurveFamily::b, i - 1), rule_R(),
                           ("R6 b" + std::to_string(i)).c_str(), false);
        } else {
          result = conj_of(twist_of(CurveFamily::b, i + 1), rule_R().inverse(),
                           ("R6 b" + std::to_string(i)).c_str(), false);
        }
        made = true;
        break;
      case CurveFamily::d:
        if (i == 1 || i == 2) {
          Certificate base = certify_internal(twist_of(CurveFamily::b, i));
          result.target = target;
          MappingWord w = invol_word(InvolutionId::I);
          w.append(base.word.inverse());
          w.append(invol_word(InvolutionId::I));
          result.word = free_reduce(w);
          result.trace = base.trace;
          result.trace.push_back("R7");
          made = true;
        }
        break;
      case CurveFamily::e:
        if (i == 1) {
          Certificate base = certify_internal(GeneratorSymbol::twist(chart_->n1_binding));
          result.target = target;
          MappingWord w = invol_word(InvolutionId::J);
          w.append(base.word.inverse());
          w.append(invol_word(InvolutionId::J));
          result.word = free_reduce(w);
          result.trace = base.trace;
          result.trace.push_back(even ? "R8 seed (reconstructed)" : "R8 seed");
        } else {
          result = conj_of(twist_of(CurveFamily::e, i - 1), rule_T(),
                           (std::string(even ? "R8 (reconstructed) e" : "R8 e") +
                            std::to_string(i))
                               .c_str(),
                           false);
        }
        made = true;
        break;
      default:
        break;
    }
  } else if (target.kind == GeneratorSymbol::Kind::puncture_slide_v) {
    int i = target.slide_index;
    if (i >= 1 && i <= n) {
      if (i == 1) {
        result = make_seed(target, even ? InvolutionId::K : InvolutionId::tau,
                           InvolutionId::rho2, "R9 seed");
      } else {
        result = conj_of(GeneratorSymbol::slide_v(i - 1), rule_R(),
                         ("R9 v" + std::to_string(i)).c_str(), false);
      }
      made = true;
    }
  } else if (target.kind == GeneratorSymbol::Kind::puncture_slide_w) {
    int i = target.slide_index;
    if (even && i >= 1 && i <= n) {
      if (i == n) {
        // sigma v1 sigma = w_n^{-1}: sigma reverses the slide curve
        result = conj_of(GeneratorSymbol::slide_v(1), invol_word(InvolutionId::sigma),
                         "R10 seed", true);
      } else {
        result = conj_of(GeneratorSymbol::slide_w(i + 1), rule_R_st(),
                         ("R10 w" + std::to_string(i)).c_str(), false);
      }
      made = true;
    }
  } else if (target.kind == GeneratorSymbol::Kind::crosscap_slide) {
    result = make_seed(target, InvolutionId::W, InvolutionId::rho3, "R11");
    made = true;
  }

  if (!made)
    throw std::invalid_argument("certify: cannot derive '" + target.name() + "'");
  auto [pos, inserted] = cache_.emplace(target, std::move(result));
  (void)inserted;
  return pos->second;
}

Certificate CertificateEngine::certify(const GeneratorSymbol& target) {
  auto targets = required_targets(chart_->params);
  bool required = false;
  for (const auto& t : targets)
    if (t == target) {
      required = true;
      break;
    }
  if (!required)
    throw std::invalid_argument("not a required generator: " + target.name());
  return certify_internal(target);
}

std::vector<Certificate> certify_all(const CurveChart& chart) {
  CertificateEngine engine(chart);
  std::vector<Certificate> out;
  for (const auto& t : required_targets(chart.params)) out.push_back(engine.certify(t));
  return out;
}

std::set<InvolutionId> alphabet_census(const std::vector<Certificate>& certs) {
  std::set<InvolutionId> out;
  for (const auto& c : certs)
    for (const auto& l : c.word.letters())
      if (l.symbol.is_involution()) out.insert(l.symbol.involution);
  return out;
}

}  // namespace mcgcert
