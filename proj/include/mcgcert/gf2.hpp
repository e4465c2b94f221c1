#ifndef MCGCERT_GF2_HPP
#define MCGCERT_GF2_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcgcert {

// Dense bit-packed vector over GF(2).  Coordinate 0 is the leftmost bit of
// the serialized form ("110...0").
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int dim);
  static Gf2Vector from_bits(std::string_view bits);

  int dim() const { return dim_; }
  bool get(int i) const;
  void set(int i, bool value);
  void flip(int i);
  bool is_zero() const;
  int popcount() const;

  // Parity of the overlap with `other` restricted to the first `limit`
  // coordinates (limit = -1 means all).
  bool dot_prefix(const Gf2Vector& other, int limit = -1) const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend Gf2Vector operator^(Gf2Vector lhs, const Gf2Vector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const Gf2Vector& other) const = default;

  std::string to_bits() const;
  std::size_t hash() const;

 private:
  int dim_ = 0;
  std::vector<std::uint64_t> words_;
};

// Square matrix over GF(2), stored column-major so that apply() is a fold of
// column xors.  apply(v) treats v as a column vector.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  static Gf2Matrix identity(int dim);
  static Gf2Matrix from_columns(std::vector<Gf2Vector> cols);
  static Gf2Matrix from_bit_rows(const std::vector<std::string>& rows);

  int dim() const { return static_cast<int>(cols_.size()); }
  const Gf2Vector& column(int j) const { return cols_[j]; }

  Gf2Vector apply(const Gf2Vector& v) const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;  // apply rhs first
  bool operator==(const Gf2Matrix& other) const = default;
  bool is_identity() const;

  // Gauss-Jordan inverse; throws std::invalid_argument on a singular matrix.
  Gf2Matrix inverse() const;

  std::vector<std::string> to_bit_rows() const;
  std::size_t hash() const;

 private:
  std::vector<Gf2Vector> cols_;
};

// Mod-2 intersection pairing: identity on the crosscap block (first `genus`
// coordinates), zero on the puncture block.  The puncture block is the
// radical of the form.
class IntersectionForm {
 public:
  IntersectionForm(int genus, int dim);

  int genus() const { return genus_; }
  int dim() const { return dim_; }

  int pairing(const Gf2Vector& u, const Gf2Vector& v) const;
  Gf2Matrix gram() const;

 private:
  int genus_ = 0;
  int dim_ = 0;
};

// Mod-2 action of a Dehn twist along a two-sided class c: x -> x + <x,c> c.
// Throws std::invalid_argument when c is one-sided (self-pairing 1).
Gf2Matrix transvection(const IntersectionForm& form, const Gf2Vector& c);

bool preserves_form(const Gf2Matrix& m, const IntersectionForm& form);

}  // namespace mcgcert

#endif
