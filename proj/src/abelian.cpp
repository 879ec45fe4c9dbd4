#include "vsg/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace vsg {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::vector<std::vector<long long>> const& rows) {
  std::size_t const cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rows[r][c]);
  }
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, mpz_class const& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) {
    auto const& s = (*this)(src, c);
    if (s != 0) (*this)(dst, c) += k * s;
  }
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, mpz_class const& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    auto const& s = (*this)(r, src);
    if (s != 0) (*this)(r, dst) += k * s;
  }
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::append_row(std::vector<mpz_class> const& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<mpz_class> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
  if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

mpz_class determinant(IntMatrix const& a) {
  if (a.rows() != a.cols()) throw Error("determinant of a non-square matrix");
  std::size_t const n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix parse_matrix(std::string_view text) {
  IntMatrix m;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<mpz_class> row;
    std::string tok;
    while (ls >> tok) {
      mpz_class v;
      if (v.set_str(tok, 10) != 0) throw Error("bad matrix entry '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) m.append_row(row);
  }
  return m;
}

std::string format_matrix(IntMatrix const& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c).get_str();
    os << '\n';
  }
  return os.str();
}

namespace {

// Smallest nonzero |entry| in the block [t.., t..], first in row-major order.
bool find_pivot(IntMatrix const& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  mpz_class best;
  for (std::size_t r = t; r < m.rows(); ++r)
    for (std::size_t c = t; c < m.cols(); ++c) {
      auto const& v = m(r, c);
      if (v == 0) continue;
      if (!found || mpz_cmpabs((v).get_mpz_t(), (best).get_mpz_t()) < 0) {
        found = true;
        best = abs(v);
        pr = r;
        pc = c;
      }
    }
  return found;
}

mpz_class floor_quotient(mpz_class const& a, mpz_class const& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

SNFResult snf(IntMatrix a, bool track) {
  std::size_t const rows = a.rows(), cols = a.cols();
  SNFResult res;
  if (track) {
    res.left = IntMatrix::identity(rows);
    res.right = IntMatrix::identity(cols);
  }
  std::size_t t = 0;
  while (t < std::min(rows, cols)) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(a, t, pr, pc)) break;
    a.swap_rows(t, pr);
    a.swap_cols(t, pc);
    if (track) {
      res.left.swap_rows(t, pr);
      res.right.swap_cols(t, pc);
    }
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      mpz_class q = -floor_quotient(a(i, t), a(t, t));
      a.add_row(i, t, q);
      if (track) res.left.add_row(i, t, q);
      clean = clean && a(i, t) == 0;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      mpz_class q = -floor_quotient(a(t, j), a(t, t));
      a.add_col(j, t, q);
      if (track) res.right.add_col(j, t, q);
      clean = clean && a(t, j) == 0;
    }
    if (!clean) continue;  // a smaller remainder becomes the next pivot
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(i, j) == 0 || mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) continue;
        a.add_row(t, i, 1);
        if (track) res.left.add_row(t, i, 1);
        divides = false;
        break;
      }
    if (!divides) continue;
    if (a(t, t) < 0) {
      a.negate_row(t);
      if (track) res.left.negate_row(t);
    }
    ++t;
  }
  res.rank = t;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) res.invariants.push_back(a(i, i));
  res.diagonal = std::move(a);
  return res;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix const& a) { return snf(a, true); }

IntMatrix echelon_basis(IntMatrix a) {
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t r = pr; r < a.rows(); ++r)
        if (a(r, c) != 0 && (best == a.rows() || mpz_cmpabs(a(r, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0)) best = r;
      if (best == a.rows()) break;
      a.swap_rows(pr, best);
      bool done = true;
      for (std::size_t r = pr + 1; r < a.rows(); ++r) {
        if (a(r, c) == 0) continue;
        a.add_row(r, pr, -floor_quotient(a(r, c), a(pr, c)));
        done = done && a(r, c) == 0;
      }
      if (done) break;
    }
    if (pr < a.rows() && a(pr, c) != 0) ++pr;
  }
  IntMatrix out(0, a.cols());
  for (std::size_t r = 0; r < pr; ++r) out.append_row(a.row(r));
  return out;
}

std::vector<mpz_class> smith_invariants(IntMatrix a) {
  return snf(echelon_basis(std::move(a)), false).invariants;
}

AbelianInvariants cokernel_invariants(IntMatrix const& relations) {
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (auto const& d : smith_invariants(relations)) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) inv.torsion.push_back(d);
  }
  inv.free_rank = relations.cols() - rank;
  return inv;
}

std::string format_invariants(AbelianInvariants const& inv) {
  std::string out;
  if (inv.free_rank > 0) out = "Z^" + std::to_string(inv.free_rank);
  for (auto const& d : inv.torsion) out += (out.empty() ? "Z_" : " + Z_") + d.get_str();
  return out.empty() ? "0" : out;
}

IntMatrix exponent_matrix(Presentation const& p) {
  IntMatrix m(p.relators().size(), p.rank());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (Letter l : p.relators()[r].word.letters()) m(r, p.require_index(l.gen)) += l.exp;
  return m;
}

AbelianInvariants abelianization(Presentation const& p) {
  return cokernel_invariants(exponent_matrix(p));
}

std::size_t commutator_index(std::size_t j, std::size_t i) {
  if (j <= i) throw Error("commutator index needs j > i");
  return j * (j - 1) / 2 + i;
}

Class2Element class2_identity(std::size_t k) {
  return {std::vector<mpz_class>(k), std::vector<mpz_class>(k * (k - (k ? 1 : 0)) / 2)};
}

namespace {

// b += scale * Lambda(x, y), Lambda(x, y)_[j,i] = x_j y_i.
void add_lambda(std::vector<mpz_class>& b, std::vector<mpz_class> const& x,
                std::vector<mpz_class> const& y, mpz_class const& scale) {
  for (std::size_t j = 1; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < j; ++i)
      if (y[i] != 0) b[commutator_index(j, i)] += scale * x[j] * y[i];
  }
}

}  // namespace

Class2Element class2_multiply(Class2Element const& x, Class2Element const& y) {
  Class2Element z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  for (std::size_t i = 0; i < z.b.size(); ++i) z.b[i] += y.b[i];
  add_lambda(z.b, x.a, y.a, 1);
  return z;
}

Class2Element class2_inverse(Class2Element const& x) { return class2_power(x, -1); }

Class2Element class2_power(Class2Element const& x, mpz_class const& c) {
  // (a, b)^c = (c a, c b + C(c, 2) Lambda(a, a))
  Class2Element z{x.a, x.b};
  for (auto& v : z.a) v *= c;
  for (auto& v : z.b) v *= c;
  mpz_class choose = c * (c - 1) / 2;
  add_lambda(z.b, x.a, x.a, choose);
  return z;
}

Class2Element eval_class2(Presentation const& p, Word const& w) {
  Class2Element acc = class2_identity(p.rank());
  for (Letter l : w.letters()) {
    Class2Element g = class2_identity(p.rank());
    g.a[p.require_index(l.gen)] = l.exp;
    acc = class2_multiply(acc, g);
  }
  return acc;
}

std::vector<mpz_class> bracket(std::vector<mpz_class> const& x, std::vector<mpz_class> const& y) {
  if (x.size() != y.size()) throw Error("bracket of vectors of different length");
  std::size_t const k = x.size();
  std::vector<mpz_class> out(k * (k - (k ? 1 : 0)) / 2);
  for (std::size_t j = 1; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i) out[commutator_index(j, i)] = x[j] * y[i] - x[i] * y[j];
  return out;
}

// Gamma_2/Gamma_3 of G = F/R is Z / (Z cap N), where Z = [F,F]/gamma_3 F is
// central in the free class-2 group and N is the normal closure of the
// relators there. N cap Z is spanned by the brackets [r_j, g_i] together with
// the products prod_j r_j^{c_j} for c in the integer left kernel of the
// relator exponent matrix; reordering such a product only changes it by
// brackets, so one product per kernel basis vector suffices.
Class2Quotient class2_quotient(Presentation const& p) {
  std::size_t const k = p.rank();
  std::size_t const big_k = k * (k - (k ? 1 : 0)) / 2;
  Class2Quotient q;
  q.generators = k;
  for (auto const& r : p.relators()) q.relator_images.push_back(eval_class2(p, r.word));

  IntMatrix a(0, k);
  for (auto const& img : q.relator_images) a.append_row(img.a);
  q.abelianization = cokernel_invariants(a);
  q.consistent = q.abelianization == abelianization(p);

  IntMatrix lattice(0, big_k);
  if (big_k > 0) {
    for (auto const& img : q.relator_images) {
      if (std::all_of(img.a.begin(), img.a.end(), [](mpz_class const& v) { return v == 0; }))
        continue;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<mpz_class> e(k);
        e[i] = 1;
        lattice.append_row(bracket(img.a, e));
      }
    }
    if (a.rows() > 0) {
      SNFResult s = smith_normal_form(a);
      for (std::size_t row = s.rank; row < a.rows(); ++row) {
        Class2Element prod = class2_identity(k);
        for (std::size_t j = 0; j < a.rows(); ++j) {
          auto const& c = s.left(row, j);
          if (c != 0) prod = class2_multiply(prod, class2_power(q.relator_images[j], c));
        }
        for (auto const& v : prod.a)
          if (v != 0) throw Error("class-2 kernel product has nonzero abelian part");
        lattice.append_row(prod.b);
      }
    }
  }
  q.commutator_lattice = echelon_basis(std::move(lattice));
  q.gamma2_mod_gamma3 = cokernel_invariants(q.commutator_lattice);
  return q;
}

}  // namespace vsg
