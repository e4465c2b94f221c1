#include "mcgcert/perm.hpp"

#include <cctype>
#include <stdexcept>

namespace mcgcert {

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative degree");
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p.img_[static_cast<std::size_t>(i)] = i;
  return p;
}

Permutation Permutation::from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  Permutation p = identity(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& cyc : cycles) {
    for (int v : cyc) {
      if (v < 1 || v > n)
        throw std::invalid_argument("from_cycles: point " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n));
      if (seen[static_cast<std::size_t>(v - 1)])
        throw std::invalid_argument("from_cycles: repeated point " + std::to_string(v));
      seen[static_cast<std::size_t>(v - 1)] = true;
    }
    if (cyc.size() < 2) continue;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i] - 1;
      int to = cyc[(i + 1) % cyc.size()] - 1;
      p.img_[static_cast<std::size_t>(from)] = to;
    }
  }
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i >= text.size() || text == "id")
    return identity(n);
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("parse_cycles: expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("parse_cycles: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int v = 0;
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected digit at position " + std::to_string(i));
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(cycles, n);
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree())
    throw std::invalid_argument("Permutation: point outside domain");
  return img_[static_cast<std::size_t>(i - 1)] + 1;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Permutation: degree mismatch");
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[i] = img_[static_cast<std::size_t>(rhs.img_[i])];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    out.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start] || img_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = true;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = static_cast<std::size_t>(img_[cur]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::size_t Permutation::hash() const {
  std::size_t h = img_.size() * 0x9e3779b97f4a7c15ull + 1;
  for (int v : img_) h = h * 1099511628211ull + static_cast<std::size_t>(v);
  return h;
}

std::vector<Permutation> Bsgs::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : level_generators)
    for (const auto& g : level) {
      bool dup = false;
      for (const auto& h : out)
        if (h == g) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(g);
    }
  return out;
}

std::uint64_t Bsgs::order() const {
  std::uint64_t n = 1;
  for (const auto& tr : transversals) {
    std::uint64_t orbit = 0;
    for (const auto& t : tr)
      if (t.has_value()) ++orbit;
    n *= orbit;
  }
  return n;
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree) return false;
  Permutation residue = p;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (residue.is_identity()) return true;
    int target = residue.apply(base[i]);
    const auto& rep = transversals[i][static_cast<std::size_t>(target - 1)];
    if (!rep.has_value()) return false;
    residue = rep->inverse() * residue;
  }
  return residue.is_identity();
}

namespace {

// Deterministic Schreier-Sims.  Levels are extended with the smallest moved
// point; orbits grow in BFS order with generators applied in list order.
class SchreierSimsBuilder {
 public:
  explicit SchreierSimsBuilder(int degree) : degree_(degree) {}

  void insert(const Permutation& g) {
    if (g.is_identity()) return;
    sift_in(g, 0);
  }

  Bsgs finish() {
    Bsgs out;
    out.degree = degree_;
    out.base = base_;
    out.level_generators = gens_;
    out.transversals = transversals_;
    return out;
  }

 private:
  int smallest_moved(const Permutation& g) const {
    for (int i = 1; i <= degree_; ++i)
      if (g.apply(i) != i) return i;
    return 0;
  }

  void rebuild_orbit(std::size_t level) {
    auto& tr = transversals_[level];
    tr.assign(static_cast<std::size_t>(degree_), std::nullopt);
    int b = base_[level];
    tr[static_cast<std::size_t>(b - 1)] = Permutation::identity(degree_);
    std::vector<int> queue{b};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int p = queue[qi];
      const Permutation& up = *tr[static_cast<std::size_t>(p - 1)];
      for (const auto& s : gens_[level]) {
        int q = s.apply(p);
        if (!tr[static_cast<std::size_t>(q - 1)].has_value()) {
          tr[static_cast<std::size_t>(q - 1)] = s * up;
          queue.push_back(q);
        }
      }
    }
  }

  // Sift g through levels starting at `level`; if a nontrivial residue
  // remains it becomes a strong generator there and closure is restored.
  void sift_in(Permutation g, std::size_t level) {
    for (std::size_t i = level; i < base_.size(); ++i) {
      if (g.is_identity()) return;
      int target = g.apply(base_[i]);
      const auto& rep = transversals_[i][static_cast<std::size_t>(target - 1)];
      if (!rep.has_value()) {
        add_generator(g, i);
        return;
      }
      g = rep->inverse() * g;
    }
    if (!g.is_identity()) {
      int b = smallest_moved(g);
      base_.push_back(b);
      gens_.emplace_back();
      transversals_.emplace_back();
      add_generator(g, base_.size() - 1);
    }
  }

  void add_generator(const Permutation& g, std::size_t level) {
    gens_[level].push_back(g);
    close_level(level);
  }

  void close_level(std::size_t level) {
    rebuild_orbit(level);
    // Schreier generators of the stabilizer; re-run whenever the orbit grew.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      std::vector<int> orbit;
      for (int p = 1; p <= degree_; ++p)
        if (transversals_[level][static_cast<std::size_t>(p - 1)].has_value()) orbit.push_back(p);
      for (int p : orbit) {
        const Permutation up = *transversals_[level][static_cast<std::size_t>(p - 1)];
        for (std::size_t si = 0; si < gens_[level].size(); ++si) {
          Permutation s = gens_[level][si];
          int q = s.apply(p);
          if (!transversals_[level][static_cast<std::size_t>(q - 1)].has_value()) {
            rebuild_orbit(level);
            dirty = true;
            break;
          }
          Permutation schreier =
              transversals_[level][static_cast<std::size_t>(q - 1)]->inverse() * s * up;
          if (!schreier.is_identity()) sift_in(schreier, level + 1);
        }
        if (dirty) break;
      }
    }
  }

  int degree_;
  std::vector<int> base_;
  std::vector<std::vector<Permutation>> gens_;
  std::vector<std::vector<std::optional<Permutation>>> transversals_;
};

}  // namespace

Bsgs schreier_sims(const std::vector<Permutation>& generators) {
  int degree = 0;
  for (const auto& g : generators) {
    if (degree == 0)
      degree = g.degree();
    else if (g.degree() != degree)
      throw std::invalid_argument("schreier_sims: generators on different degrees");
  }
  SchreierSimsBuilder builder(degree);
  for (const auto& g : generators) builder.insert(g);
  return builder.finish();
}

std::uint64_t factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n > 20) throw std::invalid_argument("factorial: result exceeds 64 bits");
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::vector<Permutation> symn_lemma_generators(int n, Parity parity) {
  if (n < 1) throw std::invalid_argument("symn_lemma_generators: need n >= 1");
  bool n_even = (n % 2 == 0);
  if ((parity == Parity::odd) == n_even)
    throw std::invalid_argument("symn_lemma_generators: parity mismatch for n = " +
                                std::to_string(n));
  std::vector<int> r1(static_cast<std::size_t>(n)), r2(static_cast<std::size_t>(n)),
      r3(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    r1[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    r2[static_cast<std::size_t>(i - 1)] = (n + 1 - i) % n + 1;
    r3[static_cast<std::size_t>(i - 1)] = (i == 1 || i == n) ? i : n + 1 - i;
  }
  auto from_images = [n](const std::vector<int>& img) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int s = 1; s <= n; ++s) {
      if (seen[static_cast<std::size_t>(s - 1)]) continue;
      std::vector<int> cyc;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur - 1)]) {
        seen[static_cast<std::size_t>(cur - 1)] = true;
        cyc.push_back(cur);
        cur = img[static_cast<std::size_t>(cur - 1)];
      }
      cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(cycles, n);
  };
  return {from_images(r1), from_images(r2), from_images(r3)};
}

bool symn_generated(int n, Parity parity) {
  if (n < 1) throw std::invalid_argument("symn_generated: need n >= 1");
  bool n_even = (n % 2 == 0);
  if ((parity == Parity::odd) == n_even)
    throw std::invalid_argument("symn_generated: parity mismatch for n = " + std::to_string(n));
  if (n == 1) return true;  // Sym_1 is trivial
  auto gens = symn_lemma_generators(n, parity);
  return schreier_sims(gens).order() == factorial(n);
}

}  // namespace mcgcert
