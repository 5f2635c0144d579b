#include "quatlat/lattice.hpp"

#include <stdexcept>

namespace quatlat {

GramMatrix::GramMatrix(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("Gram matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m_(i, j) != m_(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");
}

bool GramMatrix::is_positive_definite() const {
  const std::size_t n = rank();
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = m_(i, j);
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

bool GramMatrix::is_integral() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) {
      Rational v = i == j ? m_(i, j) : 2 * m_(i, j);
      if (!quatlat::is_integer(v)) return false;
    }
  return true;
}

Rational GramMatrix::norm(const IntegerVector& x) const { return inner(x, x); }
Rational GramMatrix::norm(const RationalVector& x) const { return inner(x, x); }

Rational GramMatrix::inner(const IntegerVector& x, const IntegerVector& y) const {
  return inner(to_rational(x), to_rational(y));
}

Rational GramMatrix::inner(const RationalVector& x, const RationalVector& y) const {
  return dot(row_times(x, m_), y);
}

GramMatrix GramMatrix::transformed(const IntegerMatrix& u) const {
  RationalMatrix ur = to_rational(u);
  return GramMatrix(ur * m_ * ur.transpose());
}

GramMatrix GramMatrix::scaled(const Rational& s) const {
  RationalMatrix r = m_;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= s;
  return GramMatrix(r);
}

ExactLattice::ExactLattice(RationalMatrix basis, RationalMatrix form)
    : basis_(std::move(basis)), form_(std::move(form)) {
  if (form_.rows() != form_.cols()) throw std::invalid_argument("ambient form must be square");
  if (basis_.rows() > 0 && basis_.cols() != form_.rows())
    throw std::invalid_argument("basis dimension does not match ambient form");
  if (basis_.rows() == 0) basis_ = RationalMatrix(0, form_.rows());
  if (rank() > 0 && quatlat::rank(basis_) != rank())
    throw std::invalid_argument("lattice basis is not linearly independent");
  gram_ = GramMatrix(basis_ * form_ * basis_.transpose());
}

ExactLattice ExactLattice::from_gram(const GramMatrix& g) {
  return ExactLattice(RationalMatrix::identity(g.rank()), g.matrix());
}

ExactLattice ExactLattice::standard(std::size_t n) {
  return ExactLattice(RationalMatrix::identity(n), RationalMatrix::identity(n));
}

RationalVector ExactLattice::embed(const IntegerVector& coords) const {
  return row_times(to_rational(coords), basis_);
}

RationalVector ExactLattice::embed(const RationalVector& coords) const {
  return row_times(coords, basis_);
}

std::optional<RationalVector> ExactLattice::coordinates(const RationalVector& ambient) const {
  if (rank() == 0) {
    for (const auto& x : ambient)
      if (x != 0) return std::nullopt;
    return RationalVector{};
  }
  return solve_left(basis_, ambient);
}

bool ExactLattice::contains(const RationalVector& ambient) const {
  auto c = coordinates(ambient);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

Rational ExactLattice::ambient_inner(const RationalVector& x, const RationalVector& y) const {
  return dot(row_times(x, form_), y);
}

namespace {

// HNF of the Z-span of rational rows; returns scaled-back rational basis.
RationalMatrix hnf_rows(const std::vector<RationalVector>& vectors, std::size_t dim) {
  RationalMatrix m(vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw std::invalid_argument("vector length mismatch");
    m.set_row(i, vectors[i]);
  }
  Integer d = common_denominator(m);
  IntegerMatrix mi(m.rows(), dim);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < dim; ++j) mi(i, j) = Rational(m(i, j) * d).get_num();
  IntegerMatrix h = hnf(mi).h;
  RationalMatrix out(h.rows(), dim);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = make_rational(h(i, j), d);
  return out;
}

}  // namespace

SpanResult hnf_span(const ExactLattice& ambient, const std::vector<RationalVector>& vectors) {
  SpanResult r;
  r.coords = hnf_rows(vectors, ambient.rank());
  r.rank = r.coords.rows();
  r.sublattice = ExactLattice(r.rank ? r.coords * ambient.basis() : RationalMatrix(0, ambient.ambient_dim()),
                              ambient.form());
  if (r.rank == ambient.rank()) r.index = abs(determinant(r.coords));
  return r;
}

SpanResult hnf_span(const ExactLattice& ambient, const std::vector<IntegerVector>& vectors) {
  std::vector<RationalVector> rv;
  rv.reserve(vectors.size());
  for (const auto& v : vectors) rv.push_back(to_rational(v));
  return hnf_span(ambient, rv);
}

ExactLattice span_ambient(const std::vector<RationalVector>& vectors, const RationalMatrix& form) {
  return ExactLattice(hnf_rows(vectors, form.rows()), form);
}

DetDisc det_and_disc(const ExactLattice& l) {
  Rational det = l.gram().det();
  Rational disc = det;
  for (std::size_t i = 0; i < l.rank(); ++i) disc *= 2;
  return {det, disc};
}

std::optional<Integer> relative_index(const ExactLattice& super, const ExactLattice& sub) {
  if (super.rank() != sub.rank()) return std::nullopt;
  RationalMatrix x(sub.rank(), super.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = super.coordinates(sub.basis().row(i));
    if (!c) return std::nullopt;
    for (const auto& v : *c)
      if (!is_integer(v)) return std::nullopt;
    x.set_row(i, *c);
  }
  Rational d = abs(determinant(x));
  if (d == 0) return std::nullopt;
  return Integer(d.get_num());
}

RationalMatrix dual_basis(const RationalMatrix& basis) { return inverse(basis).transpose(); }

ExactLattice intersect(const ExactLattice& a, const ExactLattice& b) {
  const std::size_t m = a.ambient_dim();
  if (a.rank() != m || b.rank() != m) throw std::invalid_argument("intersect needs full-rank lattices");
  RationalMatrix da = dual_basis(a.basis()), db = dual_basis(b.basis());
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < m; ++i) rows.push_back(da.row(i));
  for (std::size_t i = 0; i < m; ++i) rows.push_back(db.row(i));
  RationalMatrix sum = hnf_rows(rows, m);
  RationalMatrix inter = dual_basis(sum);
  std::vector<RationalVector> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(inter.row(i));
  return span_ambient(out, a.form());
}

}  // namespace quatlat
