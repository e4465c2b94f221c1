#include "mcgcert/surface.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcgcert {

// ---------------------------------------------------------------------------
// check.hpp helpers

std::string rep_name(Rep r) {
  switch (r) {
    case Rep::homology: return "homology";
    case Rep::permutation: return "permutation";
    case Rep::both: return "both";
    case Rep::symbolic: return "symbolic";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

bool check_id_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      long long va = std::stoll(a.substr(i, i2 - i));
      long long vb = std::stoll(b.substr(j, j2 - j));
      if (va != vb) return va < vb;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() < b.size() || (a.size() == b.size() && a < b);
}

// ---------------------------------------------------------------------------
// parameters

SurfaceParams build_params(int g, int n) {
  if (n < 0) throw std::invalid_argument("build_params: puncture count must be >= 0");
  SurfaceParams p;
  p.g = g;
  p.n = n;
  if (g % 2 == 1) {
    if (g < 13)
      throw std::invalid_argument("build_params: odd mode requires g >= 13 (got " +
                                  std::to_string(g) + ")");
    if (n > 0 && n % 2 == 0)
      throw std::invalid_argument("build_params: odd mode requires n odd or 0 (got n = " +
                                  std::to_string(n) + ")");
    p.parity = Parity::odd;
    p.r = (g - 1) / 2;
    p.k = p.r / 2;
    p.l = n > 0 ? (n - 1) / 2 : 0;
  } else {
    if (g % 4 != 0)
      throw std::invalid_argument(
          "build_params: even mode requires r odd (g = 2r+2 with g = 0 mod 4); g = " +
          std::to_string(g) + " gives even r");
    if (g < 16)
      throw std::invalid_argument("build_params: even mode requires g >= 16 (got " +
                                  std::to_string(g) + ")");
    if (n % 2 == 1)
      throw std::invalid_argument("build_params: even mode requires n even (got n = " +
                                  std::to_string(n) + ")");
    p.parity = Parity::even;
    p.r = (g - 2) / 2;
    p.k = p.r / 2;
    p.l = n / 2;
  }
  if (p.k + 3 > p.r)
    throw std::invalid_argument("build_params: index k+3 exceeds r; genus too small");
  return p;
}

// ---------------------------------------------------------------------------
// names

std::string CurveId::name() const {
  switch (family) {
    case CurveFamily::a: return "a" + std::to_string(index);
    case CurveFamily::b: return "b" + std::to_string(index);
    case CurveFamily::c: return "c" + std::to_string(index);
    case CurveFamily::d: return "d" + std::to_string(index);
    case CurveFamily::e: return "e" + std::to_string(index);
    case CurveFamily::alpha: return "alpha" + std::to_string(index);
    case CurveFamily::beta: return "beta" + std::to_string(index);
    case CurveFamily::xi: return "xi";
    case CurveFamily::m: return "m";
    case CurveFamily::x: return "x";
    case CurveFamily::n1: return "n1";
  }
  return "?";
}

CurveId CurveId::parse(std::string_view s) {
  auto split = [&](std::string_view prefix, CurveFamily fam) -> std::optional<CurveId> {
    if (s.size() <= prefix.size() || s.substr(0, prefix.size()) != prefix) return std::nullopt;
    std::string_view digits = s.substr(prefix.size());
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return CurveId{fam, std::stoi(std::string(digits))};
  };
  if (s == "xi") return {CurveFamily::xi, 0};
  if (s == "m") return {CurveFamily::m, 0};
  if (s == "x") return {CurveFamily::x, 0};
  if (s == "n1") return {CurveFamily::n1, 0};
  if (auto c = split("alpha", CurveFamily::alpha)) return *c;
  if (auto c = split("beta", CurveFamily::beta)) return *c;
  for (auto [ch, fam] : {std::pair{'a', CurveFamily::a}, {'b', CurveFamily::b},
                         {'c', CurveFamily::c}, {'d', CurveFamily::d}, {'e', CurveFamily::e}}) {
    if (s.size() >= 2 && s[0] == ch) {
      bool digits = true;
      for (std::size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
      if (digits) return CurveId{fam, std::stoi(std::string(s.substr(1)))};
    }
  }
  throw std::invalid_argument("CurveId: cannot parse '" + std::string(s) + "'");
}

std::string involution_name(InvolutionId id) {
  switch (id) {
    case InvolutionId::sigma: return "sigma";
    case InvolutionId::tau: return "tau";
    case InvolutionId::I: return "I";
    case InvolutionId::J: return "J";
    case InvolutionId::K: return "K";
    case InvolutionId::W: return "W";
    case InvolutionId::rho1: return "rho1";
    case InvolutionId::rho2: return "rho2";
    case InvolutionId::rho3: return "rho3";
    case InvolutionId::rho4: return "rho4";
    case InvolutionId::rho5: return "rho5";
  }
  return "?";
}

InvolutionId parse_involution(std::string_view s) {
  for (auto id : {InvolutionId::sigma, InvolutionId::tau, InvolutionId::I, InvolutionId::J,
                  InvolutionId::K, InvolutionId::W, InvolutionId::rho1, InvolutionId::rho2,
                  InvolutionId::rho3, InvolutionId::rho4, InvolutionId::rho5})
    if (involution_name(id) == s) return id;
  throw std::invalid_argument("InvolutionId: cannot parse '" + std::string(s) + "'");
}

bool is_chart_declared(InvolutionId id) {
  switch (id) {
    case InvolutionId::sigma:
    case InvolutionId::tau:
    case InvolutionId::I:
    case InvolutionId::J:
    case InvolutionId::K:
    case InvolutionId::W:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// curve inventories

std::vector<CurveId> lambda_curves(const SurfaceParams& p) {
  std::vector<CurveId> out;
  for (int i = 1; i <= p.r; ++i) out.push_back(curve(CurveFamily::a, i));
  int bmax = p.parity == Parity::even ? p.r + 1 : p.r;
  for (int i = 1; i <= bmax; ++i) out.push_back(curve(CurveFamily::b, i));
  int cmax = p.parity == Parity::even ? p.r : p.r - 1;
  for (int i = 1; i <= cmax; ++i) out.push_back(curve(CurveFamily::c, i));
  for (int i = 1; i <= p.r; ++i) out.push_back(curve(CurveFamily::d, i));
  for (int i = 1; i <= p.n - 1; ++i) out.push_back(curve(CurveFamily::e, i));
  return out;
}

std::vector<CurveId> lambda_prime_curves(const SurfaceParams& p) {
  std::vector<CurveId> out;
  for (int i = 1; i <= p.r; ++i) out.push_back(curve(CurveFamily::a, i));
  out.push_back(curve(CurveFamily::b, 1));
  out.push_back(curve(CurveFamily::b, 2));
  if (p.parity == Parity::even) out.push_back(curve(CurveFamily::b, p.r + 1));
  int cmax = p.parity == Parity::even ? p.r : p.r - 1;
  for (int i = 1; i <= cmax; ++i) out.push_back(curve(CurveFamily::c, i));
  out.push_back(curve(CurveFamily::d, 1));
  out.push_back(curve(CurveFamily::d, 2));
  for (int i = 1; i <= p.n - 1; ++i) out.push_back(curve(CurveFamily::e, i));
  return out;
}

// ---------------------------------------------------------------------------
// chart access

const Gf2Vector& CurveChart::curve_class(const CurveId& id) const {
  auto it = classes.find(id);
  if (it == classes.end())
    throw std::invalid_argument("chart has no curve '" + id.name() + "'");
  return it->second;
}

const TableEntry* CurveChart::find_entry(InvolutionId f, const CurveId& c) const {
  for (const auto& e : table)
    if (e.f == f && e.curve == c) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// default chart construction

namespace {

int mod1(int j, int g) { return ((j - 1) % g + g) % g + 1; }

struct ChartBuilder {
  SurfaceParams p;
  int g, n, r, k, d;
  IntersectionForm form;

  explicit ChartBuilder(const SurfaceParams& params)
      : p(params), g(params.g), n(params.n), r(params.r), k(params.k),
        d(params.homology_dim()), form(params.g, params.homology_dim()) {}

  Gf2Vector mu(std::initializer_list<int> idxs) const {
    Gf2Vector v(d);
    for (int j : idxs) v.flip(mod1(j, g) - 1);
    return v;
  }

  Gf2Vector delta_class(int i) const {
    Gf2Vector v(d);
    if (n <= 1) return v;  // no puncture coordinates
    if (i < n) {
      v.set(g + i - 1, true);
    } else {
      for (int t = 1; t <= n - 1; ++t) v.set(g + t - 1, true);
    }
    return v;
  }

  Gf2Vector shift_mu(const Gf2Vector& v, int t) const {
    Gf2Vector out(d);
    for (int j = 1; j <= g; ++j)
      if (v.get(j - 1)) out.flip(mod1(j + t, g) - 1);
    return out;
  }

  Gf2Vector reflect_mu(const Gf2Vector& v, int mirror) const {
    Gf2Vector out(d);
    for (int j = 1; j <= g; ++j)
      if (v.get(j - 1)) out.flip(mod1(mirror - j, g) - 1);
    return out;
  }

  // Puncture permutations of the reflections.
  Permutation pi_sigma() const {
    std::vector<std::vector<int>> cycles;
    for (int i = 1; i <= n / 2; ++i) cycles.push_back({i, n + 1 - i});
    return Permutation::from_cycles(cycles, n);
  }
  Permutation pi_tau() const {
    std::vector<std::vector<int>> cycles;
    for (int i = 2; i <= n; ++i) {
      int im = (n + 1 - i) % n + 1;
      if (im > i) cycles.push_back({i, im});
    }
    return Permutation::from_cycles(cycles, n);
  }
  Permutation pi_W() const {
    std::vector<std::vector<int>> cycles;
    for (int i = 2; i < n; ++i) {
      int im = n + 1 - i;
      if (im > i) cycles.push_back({i, im});
    }
    return Permutation::from_cycles(cycles, n);
  }

  // Permutation-part matrix: mu_j -> mu_{map(j)}, delta_i -> delta_{pi(i)}.
  Gf2Matrix perm_part(const std::function<int(int)>& mu_map, const Permutation& pi) const {
    std::vector<Gf2Vector> cols(static_cast<std::size_t>(d), Gf2Vector(d));
    for (int j = 1; j <= g; ++j) cols[static_cast<std::size_t>(j - 1)].set(mu_map(j) - 1, true);
    for (int i = 1; i <= n - 1; ++i)
      cols[static_cast<std::size_t>(g + i - 1)] = delta_class(pi.apply(i));
    return Gf2Matrix::from_columns(std::move(cols));
  }

  Gf2Matrix reflection_matrix(int mirror, const Permutation& pi) const {
    return perm_part([this, mirror](int j) { return mod1(mirror - j, g); }, pi);
  }

  // Puncture-slide action: u -> u + <u, core> delta_i (delta_n expands).
  Gf2Matrix slide_matrix(const Gf2Vector& core, int i) const {
    Gf2Vector di = delta_class(i);
    std::vector<Gf2Vector> cols;
    cols.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      Gf2Vector e(d);
      e.set(j, true);
      if (form.pairing(e, core)) e ^= di;
      cols.push_back(std::move(e));
    }
    return Gf2Matrix::from_columns(std::move(cols));
  }
};

struct CurveSystem {
  std::map<int, Gf2Vector> A, B, C, D;
  Gf2Vector x, z, a_y;
  bool has_z = false;
  int cb = 0, cz = 0;
  std::map<std::string, std::string> owner;  // bits -> curve name, for collisions
};

// The mu-level pattern system for one parameter candidate, or nullopt when a
// structural condition fails.
std::optional<CurveSystem> build_curves(const ChartBuilder& cb, int ja, int mI, int p,
                                        std::optional<int> pz) {
  const int g = cb.g, r = cb.r, k = cb.k;
  CurveSystem cs;
  Gf2Vector a1 = cb.mu({ja, 2 - ja});
  if (a1.popcount() != 2) return std::nullopt;
  for (int i = 1; i <= r; ++i) cs.A[i] = cb.shift_mu(a1, i - 1);
  cs.x = cb.mu({p, mI - p});
  if (cs.x.popcount() != 2) return std::nullopt;
  if (pz) {
    cs.z = cb.mu({*pz, mI - *pz});
    if (cs.z.popcount() != 2) return std::nullopt;
    bool disjoint = true;
    for (int j = 0; j < g; ++j)
      if (cs.z.get(j) && cs.x.get(j)) disjoint = false;
    if (!disjoint) return std::nullopt;
    cs.has_z = true;
  } else {
    cs.z = Gf2Vector(cb.d);
  }
  auto I_mu = [&](const Gf2Vector& v) {
    Gf2Vector w = v;
    if (cb.form.pairing(v, cs.x)) w ^= cs.x;
    if (cs.has_z && cb.form.pairing(v, cs.z)) w ^= cs.z;
    return cb.reflect_mu(w, mI);
  };
  if (cb.form.pairing(cs.A[k + 3], cs.x) != 1) return std::nullopt;
  Gf2Vector cseed = I_mu(cs.A[k + 3]);
  if (cseed.is_zero()) return std::nullopt;
  for (int j = 1; j <= r - 1; ++j) cs.C[j] = cb.shift_mu(cseed, j - (k + 1));
  Gf2Vector bseed = I_mu(cs.C[k]);
  if (bseed.is_zero()) return std::nullopt;
  for (int i = 1; i <= r; ++i) cs.B[i] = cb.shift_mu(bseed, i - k);
  cs.cb = cb.form.pairing(cs.B[1], cs.x);
  if (cb.form.pairing(cs.B[2], cs.x) != cs.cb) return std::nullopt;
  cs.cz = cs.has_z ? cb.form.pairing(cs.B[1], cs.z) : 0;
  if (cs.has_z && cb.form.pairing(cs.B[2], cs.z) != cs.cz) return std::nullopt;
  for (int i = 1; i <= r; ++i) {
    Gf2Vector di = cb.reflect_mu(cs.B[i], mI);
    if (cs.cb) di ^= cs.x;
    if (cs.cz) di ^= cs.z;
    cs.D[i] = di;
  }
  for (int i : {1, 2}) {
    if (!(cs.D[i] == I_mu(cs.B[i]))) return std::nullopt;
    if (cs.D[i].is_zero()) return std::nullopt;
  }
  cs.a_y = cb.mu({g - 1, g});
  // the four twist families must be pairwise distinct classes
  auto note = [&](const Gf2Vector& v, const std::string& nm) {
    auto bits = v.to_bits();
    auto [it, fresh] = cs.owner.emplace(bits, nm);
    (void)it;
    return fresh;
  };
  for (const auto& [fam, curves] : {std::pair{std::string("a"), &cs.A}, {"c", &cs.C},
                                    {"b", &cs.B}, {"d", &cs.D}})
    for (const auto& [i, v] : *curves)
      if (!note(v, fam + std::to_string(i))) return std::nullopt;
  if (cs.owner.count(cs.x.to_bits()) || cs.owner.count(cs.a_y.to_bits())) return std::nullopt;
  if (cs.x == cs.a_y) return std::nullopt;
  return cs;
}

struct JSide {
  int mJ = 0, qv = 0;
  std::optional<int> jb, jc;
  Gf2Vector v_mu, br1, cr;
};

std::optional<JSide> next_j_side(const ChartBuilder& cb, const CurveSystem& cs, int& mJ,
                                 int& qv, int& jb, int& jc) {
  const int g = cb.g;
  bool even = cb.p.parity == Parity::even;
  for (; mJ <= g; ++mJ, qv = 1) {
    for (; qv <= g; ++qv, jb = 1) {
      Gf2Vector v_mu = cb.mu({qv, mJ - qv});
      if (v_mu.popcount() != 2) continue;
      if (cb.form.pairing(cs.D.at(1), v_mu) != 1) continue;
      if (!even) {
        JSide out;
        out.mJ = mJ;
        out.qv = qv;
        out.v_mu = v_mu;
        ++qv;  // resume after this candidate
        return out;
      }
      auto meets = [&](const Gf2Vector& u, const Gf2Vector& v) {
        for (int t = 0; t < g; ++t)
          if (u.get(t) && v.get(t)) return true;
        return false;
      };
      for (; jb <= g; ++jb, jc = 1) {
        Gf2Vector br1 = cb.mu({jb, mJ - jb});
        if (br1.popcount() != 2 || cs.owner.count(br1.to_bits()) || br1 == cs.x ||
            br1 == cs.a_y || meets(br1, v_mu))
          continue;
        for (; jc <= g; ++jc) {
          Gf2Vector cr = cb.mu({jc, mJ - jc});
          if (cr.popcount() != 2 || cs.owner.count(cr.to_bits()) || cr == cs.x ||
              cr == cs.a_y || meets(cr, v_mu) || cr == br1)
            continue;
          JSide out;
          out.mJ = mJ;
          out.qv = qv;
          out.jb = jb;
          out.jc = jc;
          out.v_mu = v_mu;
          out.br1 = br1;
          out.cr = cr;
          ++jc;
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

std::uint64_t next_chart_uid() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

CurveChart assemble(const ChartBuilder& cb, const CurveSystem& cs, const JSide& js, int mI) {
  const SurfaceParams& p = cb.p;
  const int g = cb.g, n = cb.n, r = cb.r, k = cb.k, d = cb.d;
  bool even = p.parity == Parity::even;
  CurveChart chart;
  chart.params = p;
  chart.uid = next_chart_uid();

  for (const auto& [i, v] : cs.A) chart.classes[curve(CurveFamily::a, i)] = v;
  for (const auto& [i, v] : cs.B) chart.classes[curve(CurveFamily::b, i)] = v;
  for (const auto& [i, v] : cs.C) chart.classes[curve(CurveFamily::c, i)] = v;
  for (const auto& [i, v] : cs.D) chart.classes[curve(CurveFamily::d, i)] = v;
  if (even) {
    chart.classes[curve(CurveFamily::b, r + 1)] = js.br1;
    chart.classes[curve(CurveFamily::c, r)] = js.cr;
  }
  for (int i = 1; i <= n; ++i) chart.classes[curve(CurveFamily::alpha, i)] = cb.mu({i});
  if (even)
    for (int i = 1; i <= n; ++i)
      chart.classes[curve(CurveFamily::beta, i)] = cb.mu({g - n + i});
  chart.classes[curve(CurveFamily::xi)] = Gf2Vector(d);
  chart.classes[curve(CurveFamily::m)] = cb.mu({g - 1});
  chart.classes[curve(CurveFamily::x)] = cs.x;
  chart.n1_binding = curve(CurveFamily::d, 1);
  chart.classes[curve(CurveFamily::n1)] = cs.D.at(1);

  // permutations
  Permutation piS = cb.pi_sigma(), piT = cb.pi_tau(), piWp = cb.pi_W();
  chart.involution_puncture[InvolutionId::sigma] = piS;
  chart.involution_puncture[InvolutionId::tau] = piT;
  chart.involution_puncture[InvolutionId::I] = piS;
  chart.involution_puncture[InvolutionId::J] = piT;
  chart.involution_puncture[InvolutionId::W] = piWp;
  if (even) chart.involution_puncture[InvolutionId::K] = piT;

  // homology matrices
  Gf2Matrix sig = cb.reflection_matrix(g + 1, piS);
  Gf2Matrix tau = cb.reflection_matrix(g + 2, piT);
  Gf2Matrix wmat = cb.reflection_matrix(2 * (g - 1), piWp) *
                   transvection(cb.form, cb.mu({g, g - 2}));
  Gf2Matrix imat = cb.reflection_matrix(mI, piS) * transvection(cb.form, cs.x);
  if (cs.has_z) imat = imat * transvection(cb.form, cs.z);
  Gf2Vector v_full = js.v_mu;
  if (n >= 2) v_full ^= cb.delta_class(1);
  Gf2Matrix jmat = cb.reflection_matrix(js.mJ, piT) * transvection(cb.form, v_full);
  chart.involution_homology[InvolutionId::sigma] = sig;
  chart.involution_homology[InvolutionId::tau] = tau;
  chart.involution_homology[InvolutionId::I] = imat;
  chart.involution_homology[InvolutionId::J] = jmat;
  chart.involution_homology[InvolutionId::W] = wmat;
  if (even)
    chart.involution_homology[InvolutionId::K] =
        cb.reflection_matrix(g + 2, piT) * transvection(cb.form, cb.mu({5, g - 3}));

  // e-curves transported from the n1 binding through J and T = J I
  if (n >= 2) {
    Gf2Vector e = jmat.apply(cs.D.at(1));
    chart.classes[curve(CurveFamily::e, 1)] = e;
    Gf2Matrix tmat = jmat * imat;
    for (int i = 2; i <= n - 1; ++i) {
      e = tmat.apply(e);
      chart.classes[curve(CurveFamily::e, i)] = e;
    }
  }

  // sidedness tags
  for (const auto& [id, cls] : chart.classes) {
    bool one_sided = id.family == CurveFamily::alpha || id.family == CurveFamily::beta ||
                     id.family == CurveFamily::m;
    chart.sided[id] = one_sided ? Sidedness::one_sided : Sidedness::two_sided;
    (void)cls;
  }

  // crosscap slide and puncture slides
  chart.y_companion = cs.a_y;
  chart.y_homology = transvection(cb.form, cs.a_y);
  for (int i = 1; i <= n; ++i)
    chart.v_homology.push_back(cb.slide_matrix(chart.classes.at(curve(CurveFamily::alpha, i)), i));
  if (even)
    for (int i = 1; i <= n; ++i)
      chart.w_homology.push_back(cb.slide_matrix(chart.classes.at(curve(CurveFamily::beta, i)), i));

  // action table: stated facts carry curve names, everything else records the
  // image class.  The orientation sign is -1 throughout: all six chart
  // involutions are reflections, which reverse every local orientation.
  std::set<std::pair<InvolutionId, CurveId>> named;
  auto add_named = [&](InvolutionId f, CurveId c, CurveId image, bool stated) {
    TableEntry e;
    e.f = f;
    e.curve = c;
    e.image = image;
    e.image_class = chart.involution_homology.at(f).apply(chart.curve_class(c));
    e.eps = -1;
    e.stated = stated;
    chart.table.push_back(e);
    named.insert({f, c});
  };
  add_named(InvolutionId::tau, curve(CurveFamily::a, 1), curve(CurveFamily::a, 1), true);
  add_named(InvolutionId::I, curve(CurveFamily::a, k + 3), curve(CurveFamily::c, k + 1), true);
  add_named(InvolutionId::I, curve(CurveFamily::c, k + 1), curve(CurveFamily::a, k + 3), false);
  add_named(InvolutionId::I, curve(CurveFamily::c, k), curve(CurveFamily::b, k), true);
  add_named(InvolutionId::I, curve(CurveFamily::b, k), curve(CurveFamily::c, k), false);
  add_named(InvolutionId::I, curve(CurveFamily::b, 1), curve(CurveFamily::d, 1), true);
  add_named(InvolutionId::I, curve(CurveFamily::d, 1), curve(CurveFamily::b, 1), false);
  add_named(InvolutionId::I, curve(CurveFamily::b, 2), curve(CurveFamily::d, 2), true);
  add_named(InvolutionId::I, curve(CurveFamily::d, 2), curve(CurveFamily::b, 2), false);
  add_named(InvolutionId::I, curve(CurveFamily::x), curve(CurveFamily::x), true);
  add_named(InvolutionId::W, curve(CurveFamily::m), curve(CurveFamily::m), true);
  if (n >= 1) {
    if (!even)
      add_named(InvolutionId::tau, curve(CurveFamily::alpha, 1), curve(CurveFamily::alpha, 1), true);
    else {
      add_named(InvolutionId::K, curve(CurveFamily::alpha, 1), curve(CurveFamily::alpha, 1), true);
      add_named(InvolutionId::sigma, curve(CurveFamily::alpha, 1), curve(CurveFamily::beta, n), true);
    }
  }
  if (n >= 2) add_named(InvolutionId::J, curve(CurveFamily::n1), curve(CurveFamily::e, 1), true);
  if (even) {
    add_named(InvolutionId::J, curve(CurveFamily::b, r + 1), curve(CurveFamily::b, r + 1), true);
    add_named(InvolutionId::J, curve(CurveFamily::c, r), curve(CurveFamily::c, r), true);
  }
  for (auto f : {InvolutionId::sigma, InvolutionId::tau, InvolutionId::I, InvolutionId::J,
                 InvolutionId::W, InvolutionId::K}) {
    if (f == InvolutionId::K && !even) continue;
    for (const auto& [id, cls] : chart.classes) {
      if (named.count({f, id})) continue;
      TableEntry e;
      e.f = f;
      e.curve = id;
      e.image_class = chart.involution_homology.at(f).apply(cls);
      e.eps = -1;
      chart.table.push_back(e);
    }
  }
  return chart;
}

// Search-side sanity beyond validate_chart: derived e-classes must not shadow
// the named twist curves, and all alphabet letters must act differently in at
// least one representation (otherwise a corrupted certificate letter could
// evaluate identically).
bool search_extras_ok(const CurveChart& chart) {
  const SurfaceParams& p = chart.params;
  std::set<std::string> named_bits;
  for (const auto& [id, v] : chart.classes) {
    if (id.family == CurveFamily::e || id.family == CurveFamily::alpha ||
        id.family == CurveFamily::beta || id.family == CurveFamily::xi ||
        id.family == CurveFamily::m || id.family == CurveFamily::n1)
      continue;
    named_bits.insert(v.to_bits());
  }
  std::set<std::string> e_bits;
  for (int i = 1; i <= p.n - 1; ++i) {
    auto bits = chart.curve_class(curve(CurveFamily::e, i)).to_bits();
    if (named_bits.count(bits)) return false;
    if (!e_bits.insert(bits).second) return false;
  }
  if (p.n < 2) return true;
  IntersectionForm form = chart.form();
  std::vector<std::pair<Gf2Matrix, Permutation>> images;
  Permutation trivial = Permutation::identity(p.n);
  auto inv = [&](InvolutionId f) {
    return std::pair{chart.involution_homology.at(f), chart.involution_puncture.at(f)};
  };
  images.push_back(inv(InvolutionId::sigma));
  images.push_back(inv(InvolutionId::tau));
  images.push_back(inv(InvolutionId::I));
  images.push_back(inv(InvolutionId::J));
  images.push_back(inv(InvolutionId::W));
  auto [tauH, tauP] = inv(InvolutionId::tau);
  images.push_back({tauH * transvection(form, chart.curve_class(curve(CurveFamily::a, 1))), tauP});
  images.push_back({chart.involution_homology.at(InvolutionId::W) * chart.y_homology,
                    chart.involution_puncture.at(InvolutionId::W)});
  if (p.parity == Parity::even) {
    auto [kH, kP] = inv(InvolutionId::K);
    images.push_back({kH, kP});
    images.push_back({kH * chart.v_homology.at(0), kP});
    auto [jH, jP] = inv(InvolutionId::J);
    images.push_back({jH * transvection(form, chart.curve_class(curve(CurveFamily::b, p.r + 1))), jP});
    images.push_back({jH * transvection(form, chart.curve_class(curve(CurveFamily::c, p.r))), jP});
  } else {
    images.push_back({tauH * chart.v_homology.at(0), tauP});
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i].first == images[j].first && images[i].second == images[j].second)
        return false;
  return true;
}

}  // namespace

CurveChart default_chart(const SurfaceParams& params) {
  ChartBuilder cb(params);
  const int g = params.g;
  bool even = params.parity == Parity::even;
  for (int ja = 1; ja <= g; ++ja) {
    for (int mI = 1; mI <= g; ++mI) {
      for (int p = 1; p <= g; ++p) {
        for (int pzi = 0; pzi <= g; ++pzi) {
          // pzi = 0 means no second twist factor
          std::optional<int> pz = pzi == 0 ? std::nullopt : std::optional<int>(pzi);
          auto cs = build_curves(cb, ja, mI, p, pz);
          if (!cs) continue;
          int mJ = 1, qv = 1, jb = 1, jc = 1;
          while (auto js = next_j_side(cb, *cs, mJ, qv, jb, jc)) {
            CurveChart chart = assemble(cb, *cs, *js, mI);
            if (!search_extras_ok(chart)) continue;
            bool ok = true;
            for (const auto& res : validate_chart(chart, params))
              if (res.verdict == Verdict::fail) {
                ok = false;
                break;
              }
            if (ok) return chart;
          }
        }
      }
    }
  }
  throw std::runtime_error("default_chart: no consistent chart for g = " +
                           std::to_string(params.g) + ", n = " + std::to_string(params.n));
}

// ---------------------------------------------------------------------------
// validation

namespace {

struct StatedFact {
  InvolutionId f;
  CurveId c;
  CurveId image;
};

std::vector<StatedFact> stated_facts(const SurfaceParams& p) {
  std::vector<StatedFact> out;
  int k = p.k, r = p.r, n = p.n;
  bool even = p.parity == Parity::even;
  out.push_back({InvolutionId::tau, curve(CurveFamily::a, 1), curve(CurveFamily::a, 1)});
  out.push_back({InvolutionId::I, curve(CurveFamily::a, k + 3), curve(CurveFamily::c, k + 1)});
  out.push_back({InvolutionId::I, curve(CurveFamily::c, k), curve(CurveFamily::b, k)});
  out.push_back({InvolutionId::I, curve(CurveFamily::b, 1), curve(CurveFamily::d, 1)});
  out.push_back({InvolutionId::I, curve(CurveFamily::b, 2), curve(CurveFamily::d, 2)});
  out.push_back({InvolutionId::I, curve(CurveFamily::x), curve(CurveFamily::x)});
  out.push_back({InvolutionId::W, curve(CurveFamily::m), curve(CurveFamily::m)});
  if (n >= 1) {
    if (!even)
      out.push_back({InvolutionId::tau, curve(CurveFamily::alpha, 1), curve(CurveFamily::alpha, 1)});
    else {
      out.push_back({InvolutionId::K, curve(CurveFamily::alpha, 1), curve(CurveFamily::alpha, 1)});
      out.push_back({InvolutionId::sigma, curve(CurveFamily::alpha, 1), curve(CurveFamily::beta, n)});
    }
  }
  if (n >= 2) out.push_back({InvolutionId::J, curve(CurveFamily::n1), curve(CurveFamily::e, 1)});
  if (even) {
    out.push_back({InvolutionId::J, curve(CurveFamily::b, r + 1), curve(CurveFamily::b, r + 1)});
    out.push_back({InvolutionId::J, curve(CurveFamily::c, r), curve(CurveFamily::c, r)});
  }
  return out;
}

}  // namespace

std::vector<CheckResult> validate_chart(const CurveChart& chart, const SurfaceParams& params) {
  std::vector<CheckResult> out;
  auto add = [&](std::string id, std::string desc, std::string anchor, Rep rep, bool ok,
                 bool definitional = false, std::string detail = "") {
    out.push_back({std::move(id), std::move(desc), std::move(anchor), rep,
                   ok ? Verdict::pass : Verdict::fail, definitional, std::move(detail)});
  };
  const int n = params.n, r = params.r, k = params.k;
  bool even = params.parity == Parity::even;
  IntersectionForm form = chart.form();

  add("chart/params", "chart parameters match the requested surface", "plumbing", Rep::symbolic,
      chart.params == params);

  // curve inventory
  std::vector<CurveId> expected = lambda_curves(params);
  for (int i = 1; i <= n; ++i) expected.push_back(curve(CurveFamily::alpha, i));
  if (even)
    for (int i = 1; i <= n; ++i) expected.push_back(curve(CurveFamily::beta, i));
  expected.push_back(curve(CurveFamily::xi));
  expected.push_back(curve(CurveFamily::m));
  expected.push_back(curve(CurveFamily::x));
  expected.push_back(curve(CurveFamily::n1));
  std::string missing;
  for (const auto& id : expected)
    if (!chart.classes.count(id)) missing += id.name() + " ";
  add("chart/curves-present", "all required curves are present", "plumbing", Rep::symbolic,
      missing.empty(), false, missing);
  std::size_t lambda_expected = lambda_curves(params).size();
  std::size_t lambda_actual = 0;
  for (const auto& [id, v] : chart.classes) {
    (void)v;
    if (id.family == CurveFamily::a || id.family == CurveFamily::b ||
        id.family == CurveFamily::c || id.family == CurveFamily::d ||
        id.family == CurveFamily::e)
      ++lambda_actual;
  }
  add("chart/lambda-count",
      "the twist set has r + (r or r+1) + (r-1 or r) + r + (n-1) members", "plumbing",
      Rep::symbolic, lambda_actual == lambda_expected);

  // sidedness against the form
  for (const auto& [id, cls] : chart.classes) {
    int self = form.pairing(cls, cls);
    auto it = chart.sided.find(id);
    bool tagged_one = it != chart.sided.end() && it->second == Sidedness::one_sided;
    add("chart/sided/" + id.name(), "self-pairing matches sidedness of " + id.name(),
        "sidedness", Rep::homology, (self == 1) == tagged_one, false,
        it == chart.sided.end() ? "missing sidedness tag" : "");
  }

  add("chart/n1-binding", "n1 carries the class of its bound curve " + chart.n1_binding.name(),
      "n1-binding", Rep::homology,
      chart.classes.count(chart.n1_binding) &&
          chart.classes.count(curve(CurveFamily::n1)) &&
          chart.curve_class(curve(CurveFamily::n1)) == chart.curve_class(chart.n1_binding),
      true);

  // involution matrices
  for (const auto& [f, mat] : chart.involution_homology) {
    std::string nm = involution_name(f);
    add("chart/inv2/" + nm, nm + " squares to the identity on homology", "involution-order",
        Rep::homology, (mat * mat).is_identity());
    add("chart/form/" + nm, nm + " preserves the intersection form", "form-preservation",
        Rep::homology, preserves_form(mat, form));
    auto pit = chart.involution_puncture.find(f);
    if (pit == chart.involution_puncture.end()) {
      add("chart/perm2/" + nm, nm + " has a puncture permutation", "plumbing", Rep::permutation,
          false);
      continue;
    }
    if (n == 0) {
      out.push_back({"chart/perm2/" + nm, nm + " puncture action (no punctures)",
                     "involution-order", Rep::permutation, Verdict::skipped, false,
                     "skipped (n=0)"});
      out.push_back({"chart/delta/" + nm, nm + " puncture-block consistency (no punctures)",
                     "plumbing", Rep::both, Verdict::skipped, false, "skipped (n=0)"});
      continue;
    }
    const Permutation& pi = pit->second;
    add("chart/perm2/" + nm, nm + " squares to the identity on punctures", "involution-order",
        Rep::permutation, (pi * pi).is_identity() && pi.degree() == n);
    // each delta_i must map to the class of delta_{pi(i)}
    bool delta_ok = pi.degree() == n;
    ChartBuilder cb(params);
    for (int i = 1; delta_ok && i <= n; ++i)
      if (!(mat.apply(cb.delta_class(i)) == cb.delta_class(pi.apply(i)))) delta_ok = false;
    add("chart/delta/" + nm, nm + " maps puncture classes as its permutation dictates",
        "pi-consistency", Rep::both, delta_ok);
  }

  // table entries against the matrices
  for (const auto& e : chart.table) {
    std::string id = "chart/table/" + involution_name(e.f) + "/" + e.curve.name();
    auto mit = chart.involution_homology.find(e.f);
    if (mit == chart.involution_homology.end() || !chart.classes.count(e.curve)) {
      add(id, "table entry refers to known data", "plumbing", Rep::symbolic, false);
      continue;
    }
    Gf2Vector image = mit->second.apply(chart.curve_class(e.curve));
    bool ok = image == e.image_class;
    if (e.image) ok = ok && chart.classes.count(*e.image) && image == chart.curve_class(*e.image);
    add(id,
        involution_name(e.f) + " maps " + e.curve.name() + " to " +
            (e.image ? e.image->name() : std::string("the recorded class")),
        "curve-action", Rep::homology, ok);
    if (e.eps != 1 && e.eps != -1)
      add("chart/eps-valid/" + involution_name(e.f) + "/" + e.curve.name(),
          "orientation sign is +1 or -1", "plumbing", Rep::symbolic, false);
  }
  // orientation signs must pair consistently under the involution
  for (const auto& e : chart.table) {
    if (!e.image) continue;
    const TableEntry* back = chart.find_entry(e.f, *e.image);
    if (back == nullptr) continue;
    add("chart/eps/" + involution_name(e.f) + "/" + e.curve.name(),
        "sign of " + involution_name(e.f) + " on " + e.curve.name() +
            " pairs with the reverse entry",
        "conjugation-sign", Rep::symbolic, e.eps * back->eps == 1);
  }

  // stated curve-action facts
  for (const auto& fact : stated_facts(params)) {
    std::string id =
        "chart/stated/" + involution_name(fact.f) + "-" + fact.c.name();
    const TableEntry* e = chart.find_entry(fact.f, fact.c);
    bool ok = e != nullptr && e->stated && e->image && *e->image == fact.image && e->eps == -1;
    bool definitional = fact.f == InvolutionId::J && fact.c == curve(CurveFamily::n1);
    add(id, involution_name(fact.f) + "(" + fact.c.name() + ") = " + fact.image.name() +
            " with reversed orientation",
        "curve-action", Rep::symbolic, ok, definitional);
  }

  // chain transports under R = tau sigma (and S, R' in even mode)
  if (chart.involution_homology.count(InvolutionId::sigma) &&
      chart.involution_homology.count(InvolutionId::tau)) {
    const Gf2Matrix& sig = chart.involution_homology.at(InvolutionId::sigma);
    const Gf2Matrix& tau = chart.involution_homology.at(InvolutionId::tau);
    Gf2Matrix R = tau * sig;
    auto trans = [&](CurveFamily fam, int from, int to, const std::string& label,
                     const std::string& anchor, const Gf2Matrix& op, bool definitional = false) {
      CurveId cf = curve(fam, from), ct = curve(fam, to);
      if (!chart.classes.count(cf) || !chart.classes.count(ct)) {
        add(label, "transport endpoints exist", anchor, Rep::homology, false);
        return;
      }
      add(label, "transport sends " + cf.name() + " to " + ct.name(), anchor, Rep::homology,
          op.apply(chart.curve_class(cf)) == chart.curve_class(ct), definitional);
    };
    for (int i = 2; i <= r; ++i)
      trans(CurveFamily::a, i - 1, i, "chart/R/a" + std::to_string(i), "R2", R);
    for (int i = 2; i <= r; ++i)
      trans(CurveFamily::b, i - 1, i, "chart/R/b" + std::to_string(i), "R6", R);
    for (int j = 2; j <= r - 1; ++j)
      trans(CurveFamily::c, j - 1, j, "chart/R/c" + std::to_string(j), "R4", R);
    for (int i = 2; i <= n; ++i)
      trans(CurveFamily::alpha, i - 1, i,
            std::string(even ? "chart/S/alpha" : "chart/R/alpha") + std::to_string(i), "R9", R);
    if (even) {
      Gf2Matrix Rst = sig * tau;
      for (int j = n; j >= 2; --j)
        trans(CurveFamily::beta, j, j - 1, "chart/Rst/beta" + std::to_string(j), "R10", Rst);
    }
    if (n >= 3 && chart.involution_homology.count(InvolutionId::I) &&
        chart.involution_homology.count(InvolutionId::J)) {
      Gf2Matrix T = chart.involution_homology.at(InvolutionId::J) *
                    chart.involution_homology.at(InvolutionId::I);
      for (int i = 2; i <= n - 1; ++i)
        trans(CurveFamily::e, i - 1, i, "chart/T/e" + std::to_string(i), "R8", T, true);
    }
  }

  // crosscap slide data
  bool y_matrix_ok = false, companion_ok = false, xi_ok = false, w_fix_ok = false;
  if (chart.y_companion.dim() == form.dim()) {
    try {
      y_matrix_ok = chart.y_homology == transvection(form, chart.y_companion);
    } catch (const std::invalid_argument&) {
      y_matrix_ok = false;
    }
    companion_ok = chart.classes.count(curve(CurveFamily::m)) &&
                   form.pairing(chart.y_companion, chart.curve_class(curve(CurveFamily::m))) == 1 &&
                   form.pairing(chart.y_companion, chart.y_companion) == 0;
    if (chart.classes.count(curve(CurveFamily::xi)))
      xi_ok = chart.y_homology * chart.y_homology ==
              transvection(form, chart.curve_class(curve(CurveFamily::xi)));
    if (chart.involution_homology.count(InvolutionId::W))
      w_fix_ok = chart.involution_homology.at(InvolutionId::W).apply(chart.y_companion) ==
                 chart.y_companion;
  }
  add("chart/y/matrix", "crosscap slide acts as the transvection along its companion class",
      "y-action", Rep::homology, y_matrix_ok);
  add("chart/y/companion", "companion class is two-sided and meets m once", "y-action",
      Rep::homology, companion_ok);
  add("chart/y/xi", "the square of the crosscap slide is the twist along xi", "y-square",
      Rep::homology, xi_ok);
  add("chart/y/W-fixes-companion", "W fixes the companion class of the crosscap slide",
      "R11", Rep::homology, w_fix_ok);

  // puncture slides
  ChartBuilder cb(params);
  auto check_slides = [&](const std::vector<Gf2Matrix>& mats, const std::string& tag) {
    for (int i = 1; i <= static_cast<int>(mats.size()); ++i) {
      const Gf2Matrix& m = mats[static_cast<std::size_t>(i - 1)];
      std::string base = "chart/" + tag + std::to_string(i);
      add(base + "/inv2", tag + std::to_string(i) + " squares to the identity",
          "involution-order", Rep::homology, m.dim() == form.dim() && (m * m).is_identity());
      add(base + "/form", tag + std::to_string(i) + " preserves the intersection form",
          "form-preservation", Rep::homology, m.dim() == form.dim() && preserves_form(m, form));
      bool fixes = m.dim() == form.dim();
      for (int t = 1; fixes && t <= n; ++t)
        if (!(m.apply(cb.delta_class(t)) == cb.delta_class(t))) fixes = false;
      add(base + "/delta", tag + std::to_string(i) + " fixes every puncture class",
          "pi-consistency", Rep::both, fixes);
    }
  };
  add("chart/v-count", "one puncture slide v_i per puncture", "plumbing", Rep::symbolic,
      static_cast<int>(chart.v_homology.size()) == n);
  check_slides(chart.v_homology, "v");
  if (even) {
    add("chart/w-count", "one puncture slide w_i per puncture", "plumbing", Rep::symbolic,
        static_cast<int>(chart.w_homology.size()) == n);
    check_slides(chart.w_homology, "w");
  }

  return out;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

std::string sided_name(Sidedness s) { return s == Sidedness::two_sided ? "two" : "one"; }

Sidedness parse_sided(const std::string& s) {
  if (s == "two") return Sidedness::two_sided;
  if (s == "one") return Sidedness::one_sided;
  throw std::runtime_error("chart: sidedness must be 'two' or 'one', got '" + s + "'");
}

}  // namespace

nlohmann::ordered_json chart_to_json(const CurveChart& chart) {
  nlohmann::ordered_json j;
  j["params"] = {{"g", chart.params.g}, {"n", chart.params.n}};
  j["n1_binding"] = chart.n1_binding.name();
  nlohmann::ordered_json curves;
  for (const auto& [id, cls] : chart.classes) {
    nlohmann::ordered_json c;
    c["bits"] = cls.to_bits();
    c["sided"] = sided_name(chart.sided.at(id));
    curves[id.name()] = std::move(c);
  }
  j["curves"] = std::move(curves);
  nlohmann::ordered_json invs;
  for (const auto& [f, mat] : chart.involution_homology) {
    nlohmann::ordered_json entry;
    entry["matrix"] = mat.to_bit_rows();
    entry["perm"] = chart.involution_puncture.at(f).to_cycles();
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (const auto& e : chart.table) {
      if (e.f != f) continue;
      nlohmann::ordered_json te;
      te["curve"] = e.curve.name();
      if (e.image) te["image"] = e.image->name();
      te["image_bits"] = e.image_class.to_bits();
      te["eps"] = e.eps;
      if (e.stated) te["stated"] = true;
      table.push_back(std::move(te));
    }
    entry["table"] = std::move(table);
    invs[involution_name(f)] = std::move(entry);
  }
  j["involutions"] = std::move(invs);
  nlohmann::ordered_json nontwist;
  nontwist["y"] = {{"matrix", chart.y_homology.to_bit_rows()},
                   {"companion", chart.y_companion.to_bits()}};
  nlohmann::ordered_json vlist = nlohmann::ordered_json::array();
  for (const auto& m : chart.v_homology) vlist.push_back({{"matrix", m.to_bit_rows()}});
  nontwist["v"] = std::move(vlist);
  nlohmann::ordered_json wlist = nlohmann::ordered_json::array();
  for (const auto& m : chart.w_homology) wlist.push_back({{"matrix", m.to_bit_rows()}});
  nontwist["w"] = std::move(wlist);
  j["nontwist"] = std::move(nontwist);
  return j;
}

CurveChart chart_from_json(const nlohmann::json& j) {
  if (!j.contains("params") || !j["params"].contains("g") || !j["params"].contains("n"))
    throw std::runtime_error("chart: missing params.g / params.n");
  SurfaceParams params = build_params(j["params"]["g"].get<int>(), j["params"]["n"].get<int>());
  int d = params.homology_dim();
  CurveChart chart;
  chart.params = params;
  chart.uid = 0;

  if (!j.contains("curves") || !j["curves"].is_object())
    throw std::runtime_error("chart: missing curves object");
  for (const auto& [name, entry] : j["curves"].items()) {
    CurveId id = CurveId::parse(name);
    std::string bits = entry.at("bits").get<std::string>();
    if (static_cast<int>(bits.size()) != d)
      throw std::runtime_error("chart: dimension mismatch for curve '" + name + "' (expected " +
                               std::to_string(d) + " bits, got " + std::to_string(bits.size()) +
                               ")");
    chart.classes[id] = Gf2Vector::from_bits(bits);
    chart.sided[id] = parse_sided(entry.at("sided").get<std::string>());
  }
  std::vector<CurveId> required = lambda_curves(params);
  for (const auto& id : required)
    if (!chart.classes.count(id))
      throw std::runtime_error("chart: incomplete curve set, missing '" + id.name() + "'");

  chart.n1_binding = CurveId::parse(j.value("n1_binding", std::string("d1")));

  if (!j.contains("involutions") || !j["involutions"].is_object())
    throw std::runtime_error("chart: missing involutions object");
  for (const auto& [name, entry] : j["involutions"].items()) {
    InvolutionId f = parse_involution(name);
    if (!is_chart_declared(f))
      throw std::runtime_error("chart: involution '" + name + "' is derived, not chart data");
    auto rows = entry.at("matrix").get<std::vector<std::string>>();
    if (static_cast<int>(rows.size()) != d)
      throw std::runtime_error("chart: dimension mismatch in matrix of '" + name + "'");
    chart.involution_homology[f] = Gf2Matrix::from_bit_rows(rows);
    chart.involution_puncture[f] =
        Permutation::parse_cycles(entry.at("perm").get<std::string>(), params.n);
    if (entry.contains("table")) {
      for (const auto& te : entry["table"]) {
        TableEntry e;
        e.f = f;
        e.curve = CurveId::parse(te.at("curve").get<std::string>());
        if (te.contains("image")) e.image = CurveId::parse(te["image"].get<std::string>());
        std::string bits = te.at("image_bits").get<std::string>();
        if (static_cast<int>(bits.size()) != d)
          throw std::runtime_error("chart: dimension mismatch in table of '" + name + "'");
        e.image_class = Gf2Vector::from_bits(bits);
        e.eps = te.at("eps").get<int>();
        e.stated = te.value("stated", false);
        chart.table.push_back(std::move(e));
      }
    }
  }
  for (auto f : {InvolutionId::sigma, InvolutionId::tau, InvolutionId::I, InvolutionId::J,
                 InvolutionId::W})
    if (!chart.involution_homology.count(f))
      throw std::runtime_error("chart: missing involution '" + involution_name(f) + "'");
  if (params.parity == Parity::even && !chart.involution_homology.count(InvolutionId::K))
    throw std::runtime_error("chart: missing involution 'K' (even mode)");

  if (!j.contains("nontwist") || !j["nontwist"].contains("y"))
    throw std::runtime_error("chart: missing nontwist.y");
  const auto& y = j["nontwist"]["y"];
  chart.y_homology = Gf2Matrix::from_bit_rows(y.at("matrix").get<std::vector<std::string>>());
  std::string cb = y.at("companion").get<std::string>();
  if (static_cast<int>(cb.size()) != d)
    throw std::runtime_error("chart: dimension mismatch in crosscap-slide companion");
  chart.y_companion = Gf2Vector::from_bits(cb);
  for (const auto& v : j["nontwist"].value("v", nlohmann::json::array()))
    chart.v_homology.push_back(
        Gf2Matrix::from_bit_rows(v.at("matrix").get<std::vector<std::string>>()));
  for (const auto& w : j["nontwist"].value("w", nlohmann::json::array()))
    chart.w_homology.push_back(
        Gf2Matrix::from_bit_rows(w.at("matrix").get<std::vector<std::string>>()));

  static std::atomic<std::uint64_t> loaded_uid{1u << 20};
  chart.uid = loaded_uid.fetch_add(1);
  return chart;
}

CurveChart load_chart(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open chart file: " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("chart parse error in " + path.string() + ": " + e.what());
  }
  return chart_from_json(j);
}

void dump_chart(const CurveChart& chart, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write chart file: " + path.string());
  out << chart_to_json(chart).dump(1) << "\n";
}

}  // namespace mcgcert
