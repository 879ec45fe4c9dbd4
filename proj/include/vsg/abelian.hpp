#pragma once

// Integer matrices over GMP, Smith normal form, abelianization and the
// class-2 quotient Gamma_2 / Gamma_3 of a finitely presented group.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vsg/presentation.hpp"

namespace vsg {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::vector<std::vector<long long>> const& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  mpz_class const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, mpz_class const& k);
  void add_col(std::size_t dst, std::size_t src, mpz_class const& k);
  void negate_row(std::size_t r);
  void append_row(std::vector<mpz_class> const& row);
  std::vector<mpz_class> row(std::size_t r) const;

  friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
// Fraction-free (Bareiss) determinant of a square matrix.
mpz_class determinant(IntMatrix const& a);
// Whitespace-separated integers, one row per line.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(IntMatrix const& m);

struct SNFResult {
  IntMatrix diagonal;            // D, same shape as A
  IntMatrix left;                // U
  IntMatrix right;               // V, with U * A * V = D
  std::vector<mpz_class> invariants;  // d_1 | d_2 | ... (nonzero ones), then zeros
  std::size_t rank = 0;
};

// Deterministic: the pivot is the smallest nonzero |entry| of the remaining
// block, first in row-major order.
SNFResult smith_normal_form(IntMatrix const& a);
// Invariant factors only, after an integer row-echelon pass.
std::vector<mpz_class> smith_invariants(IntMatrix a);

// Row-echelon basis of the integer row span (zero rows dropped).
IntMatrix echelon_basis(IntMatrix a);

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // entries > 1, each dividing the next
  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

// Cokernel of the row span of `relations` inside Z^cols.
AbelianInvariants cokernel_invariants(IntMatrix const& relations);
// "Z^2 + Z_2"; the trivial group renders as "0".
std::string format_invariants(AbelianInvariants const& inv);

// Relator exponent-sum matrix (relators x generators).
IntMatrix exponent_matrix(Presentation const& p);
AbelianInvariants abelianization(Presentation const& p);

// Element of the free nilpotent group of class 2 on k generators: a in Z^k,
// b in Z^K indexed by basic commutators [g_j, g_i], j > i, ordered by j then i.
struct Class2Element {
  std::vector<mpz_class> a;
  std::vector<mpz_class> b;
  friend bool operator==(Class2Element const&, Class2Element const&) = default;
};

std::size_t commutator_index(std::size_t j, std::size_t i);  // j > i
Class2Element class2_identity(std::size_t k);
Class2Element class2_multiply(Class2Element const& x, Class2Element const& y);
Class2Element class2_inverse(Class2Element const& x);
Class2Element class2_power(Class2Element const& x, mpz_class const& c);
// Generators are numbered by their position in p.
Class2Element eval_class2(Presentation const& p, Word const& w);
std::vector<mpz_class> bracket(std::vector<mpz_class> const& x, std::vector<mpz_class> const& y);

struct Class2Quotient {
  std::size_t generators = 0;
  AbelianInvariants abelianization;
  AbelianInvariants gamma2_mod_gamma3;
  std::vector<Class2Element> relator_images;
  IntMatrix commutator_lattice;  // echelon basis of (N cap Z) inside Z^K
  bool consistent = false;       // abelianization agrees with abelianization(p)
};

Class2Quotient class2_quotient(Presentation const& p);

}  // namespace vsg
