#include "mcgcert/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace mcgcert {

namespace {
constexpr int kWordBits = 64;

int word_count(int dim) { return (dim + kWordBits - 1) / kWordBits; }
}  // namespace

Gf2Vector::Gf2Vector(int dim) : dim_(dim), words_(word_count(dim), 0) {
  if (dim < 0) throw std::invalid_argument("Gf2Vector: negative dimension");
}

Gf2Vector Gf2Vector::from_bits(std::string_view bits) {
  Gf2Vector v(static_cast<int>(bits.size()));
  for (int i = 0; i < v.dim_; ++i) {
    char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1')
      throw std::invalid_argument("Gf2Vector: bit-string must be 0/1");
    if (c == '1') v.set(i, true);
  }
  return v;
}

bool Gf2Vector::get(int i) const {
  return (words_[static_cast<std::size_t>(i / kWordBits)] >> (i % kWordBits)) & 1u;
}

void Gf2Vector::set(int i, bool value) {
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  auto& w = words_[static_cast<std::size_t>(i / kWordBits)];
  if (value)
    w |= mask;
  else
    w &= ~mask;
}

void Gf2Vector::flip(int i) {
  words_[static_cast<std::size_t>(i / kWordBits)] ^= std::uint64_t{1} << (i % kWordBits);
}

bool Gf2Vector::is_zero() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

int Gf2Vector::popcount() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool Gf2Vector::dot_prefix(const Gf2Vector& other, int limit) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("Gf2Vector: dimension mismatch");
  if (limit < 0 || limit > dim_) limit = dim_;
  int parity = 0;
  int full = limit / kWordBits;
  for (int i = 0; i < full; ++i)
    parity ^= std::popcount(words_[static_cast<std::size_t>(i)] &
                            other.words_[static_cast<std::size_t>(i)]) & 1;
  int rem = limit % kWordBits;
  if (rem) {
    std::uint64_t mask = (std::uint64_t{1} << rem) - 1;
    parity ^= std::popcount(words_[static_cast<std::size_t>(full)] &
                            other.words_[static_cast<std::size_t>(full)] & mask) & 1;
  }
  return parity != 0;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (dim_ != other.dim_)
    throw std::invalid_argument("Gf2Vector: dimension mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string Gf2Vector::to_bits() const {
  std::string out(static_cast<std::size_t>(dim_), '0');
  for (int i = 0; i < dim_; ++i)
    if (get(i)) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::size_t Gf2Vector::hash() const {
  std::size_t h = static_cast<std::size_t>(dim_) * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

Gf2Matrix Gf2Matrix::identity(int dim) {
  std::vector<Gf2Vector> cols(static_cast<std::size_t>(dim), Gf2Vector(dim));
  for (int j = 0; j < dim; ++j) cols[static_cast<std::size_t>(j)].set(j, true);
  Gf2Matrix m;
  m.cols_ = std::move(cols);
  return m;
}

Gf2Matrix Gf2Matrix::from_columns(std::vector<Gf2Vector> cols) {
  int dim = static_cast<int>(cols.size());
  for (const auto& c : cols)
    if (c.dim() != dim)
      throw std::invalid_argument("Gf2Matrix: column dimension mismatch");
  Gf2Matrix m;
  m.cols_ = std::move(cols);
  return m;
}

Gf2Matrix Gf2Matrix::from_bit_rows(const std::vector<std::string>& rows) {
  int dim = static_cast<int>(rows.size());
  std::vector<Gf2Vector> cols(static_cast<std::size_t>(dim), Gf2Vector(dim));
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != dim)
      throw std::invalid_argument("Gf2Matrix: row length mismatch");
    for (int j = 0; j < dim; ++j) {
      char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != '0' && c != '1')
        throw std::invalid_argument("Gf2Matrix: bit-string must be 0/1");
      if (c == '1') cols[static_cast<std::size_t>(j)].set(i, true);
    }
  }
  Gf2Matrix m;
  m.cols_ = std::move(cols);
  return m;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& v) const {
  if (v.dim() != dim())
    throw std::invalid_argument("Gf2Matrix: dimension mismatch in apply");
  Gf2Vector out(dim());
  for (int j = 0; j < dim(); ++j)
    if (v.get(j)) out ^= cols_[static_cast<std::size_t>(j)];
  return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (dim() != rhs.dim())
    throw std::invalid_argument("Gf2Matrix: dimension mismatch in product");
  std::vector<Gf2Vector> cols;
  cols.reserve(static_cast<std::size_t>(dim()));
  for (int j = 0; j < dim(); ++j) cols.push_back(apply(rhs.cols_[static_cast<std::size_t>(j)]));
  return from_columns(std::move(cols));
}

bool Gf2Matrix::is_identity() const {
  for (int j = 0; j < dim(); ++j) {
    const auto& c = cols_[static_cast<std::size_t>(j)];
    if (c.popcount() != 1 || !c.get(j)) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::inverse() const {
  int n = dim();
  // Row-reduce [M | I] using rows as bit vectors.
  std::vector<Gf2Vector> rows(static_cast<std::size_t>(n), Gf2Vector(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (cols_[static_cast<std::size_t>(j)].get(i)) rows[static_cast<std::size_t>(i)].set(j, true);
    rows[static_cast<std::size_t>(i)].set(n + i, true);
  }
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (rows[static_cast<std::size_t>(i)].get(col)) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("Gf2Matrix: singular matrix");
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    for (int i = 0; i < n; ++i)
      if (i != rank && rows[static_cast<std::size_t>(i)].get(col))
        rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  std::vector<Gf2Vector> cols(static_cast<std::size_t>(n), Gf2Vector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rows[static_cast<std::size_t>(i)].get(n + j)) cols[static_cast<std::size_t>(j)].set(i, true);
  return from_columns(std::move(cols));
}

std::vector<std::string> Gf2Matrix::to_bit_rows() const {
  int n = dim();
  std::vector<std::string> rows(static_cast<std::size_t>(n),
                                std::string(static_cast<std::size_t>(n), '0'));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (cols_[static_cast<std::size_t>(j)].get(i))
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = '1';
  return rows;
}

std::size_t Gf2Matrix::hash() const {
  std::size_t h = 0x2545f4914f6cdd1dull;
  for (const auto& c : cols_) h = (h * 0x9e3779b97f4a7c15ull) ^ c.hash();
  return h;
}

IntersectionForm::IntersectionForm(int genus, int dim) : genus_(genus), dim_(dim) {
  if (genus < 0 || dim < genus)
    throw std::invalid_argument("IntersectionForm: need 0 <= genus <= dim");
}

int IntersectionForm::pairing(const Gf2Vector& u, const Gf2Vector& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw std::invalid_argument("IntersectionForm: dimension mismatch");
  return u.dot_prefix(v, genus_) ? 1 : 0;
}

Gf2Matrix IntersectionForm::gram() const {
  std::vector<Gf2Vector> cols(static_cast<std::size_t>(dim_), Gf2Vector(dim_));
  for (int j = 0; j < genus_; ++j) cols[static_cast<std::size_t>(j)].set(j, true);
  return Gf2Matrix::from_columns(std::move(cols));
}

Gf2Matrix transvection(const IntersectionForm& form, const Gf2Vector& c) {
  if (c.dim() != form.dim())
    throw std::invalid_argument("transvection: dimension mismatch");
  if (form.pairing(c, c) != 0)
    throw std::invalid_argument("cannot twist along one-sided curve");
  std::vector<Gf2Vector> cols;
  cols.reserve(static_cast<std::size_t>(form.dim()));
  for (int j = 0; j < form.dim(); ++j) {
    Gf2Vector e(form.dim());
    e.set(j, true);
    if (form.pairing(e, c)) e ^= c;
    cols.push_back(std::move(e));
  }
  return Gf2Matrix::from_columns(std::move(cols));
}

bool preserves_form(const Gf2Matrix& m, const IntersectionForm& form) {
  if (m.dim() != form.dim())
    throw std::invalid_argument("preserves_form: dimension mismatch");
  for (int a = 0; a < form.dim(); ++a) {
    for (int b = a; b < form.dim(); ++b) {
      int expect = (a == b && a < form.genus()) ? 1 : 0;
      if (form.pairing(m.column(a), m.column(b)) != expect) return false;
    }
  }
  return true;
}

}  // namespace mcgcert
