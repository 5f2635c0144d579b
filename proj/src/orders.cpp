#include "quatlat/orders.hpp"


namespace quatlat {

ExactLattice quat_lattice(const AlgebraRef& alg, const std::vector<Quat>& gens) {
  std::vector<RationalVector> rows;
  rows.reserve(gens.size());
  for (const auto& q : gens) rows.push_back(q.coords());
  return span_ambient(rows, alg->norm_form());
}

Quat to_quat(const AlgebraRef& alg, const RationalVector& coords) { return Quat(alg, coords); }

std::vector<Quat> lattice_quats(const AlgebraRef& alg, const ExactLattice& l) {
  std::vector<Quat> out;
  for (std::size_t i = 0; i < l.rank(); ++i) out.emplace_back(alg, l.basis().row(i));
  return out;
}

std::vector<IntegerVector> projective_points(long ell, std::size_t dim) {
  std::vector<IntegerVector> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    const std::size_t free = dim - lead - 1;
    long total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= ell;
    for (long code = 0; code < total; ++code) {
      IntegerVector v(dim);
      v[lead] = 1;
      long c = code;
      for (std::size_t i = 0; i < free; ++i) {
        v[dim - 1 - i] = c % ell;
        c /= ell;
      }
      out.push_back(v);
    }
  }
  return out;
}

Rational trace_discriminant(const std::vector<Quat>& basis) {
  const std::size_t n = basis.size();
  RationalMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(i, j) = (basis[i] * basis[j]).trace();
  return abs(determinant(t));
}

namespace {

std::string product_name(std::size_t i, std::size_t j) {
  return "b" + std::to_string(i + 1) + "*b" + std::to_string(j + 1);
}

}  // namespace

Order Order::from_generators(const AlgebraRef& alg, const std::vector<Quat>& gens) {
  ExactLattice l = quat_lattice(alg, gens);
  if (l.rank() != 4) throw OrderError(OrderErrorKind::NotFullRank, "order basis does not span a rank-4 lattice");
  std::vector<Quat> b = lattice_quats(alg, l);
  if (!l.contains(Quat(alg, 1).coords())) throw OrderError(OrderErrorKind::NotUnital, "1 is not in the lattice");
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integer(b[i].trace()) || !is_integer(b[i].norm()))
      throw OrderError(OrderErrorKind::NotIntegral,
                       "b" + std::to_string(i + 1) + " = " + b[i].str() + " has non-integral trace or norm");
  }
  std::vector<Quat> prods;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Quat x = b[i] * b[j];
      if (!is_integer(x.trace()) || !is_integer(x.norm()))
        throw OrderError(OrderErrorKind::NotIntegral,
                         product_name(i, j) + " = " + x.str() + " has non-integral trace or norm");
    }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Quat x = b[i] * b[j];
      if (!l.contains(x.coords()))
        throw OrderError(OrderErrorKind::NotClosed, product_name(i, j) + " = " + x.str() + " is not in the lattice");
    }
  Rational d = trace_discriminant(b);
  return Order(alg, l, d.get_num());
}

Order Order::from_basis(const AlgebraRef& alg, const std::vector<Quat>& basis) {
  if (basis.size() != 4) throw std::invalid_argument("an order basis has 4 elements");
  return from_generators(alg, basis);
}

Order order_from_basis(const AlgebraRef& alg, const std::vector<Quat>& basis) {
  return Order::from_basis(alg, basis);
}

namespace {

bool integral_element(const Quat& x) { return is_integer(x.trace()) && is_integer(x.norm()); }

// An order containing o with index ell, or nullopt.
std::optional<Order> step_up(const Order& o, long ell) {
  const AlgebraRef& alg = o.algebra();
  std::vector<Quat> b = o.basis();
  for (const auto& c : projective_points(ell, 4)) {
    Quat v(alg);
    for (std::size_t i = 0; i < 4; ++i) v = v + b[i] * Rational(c[i]);
    Quat w = v / Rational(ell);
    if (!integral_element(w)) continue;
    std::vector<Quat> gens = b;
    gens.push_back(w);
    try {
      return Order::from_generators(alg, gens);
    } catch (const OrderError&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace

Order saturate(const Order& o, const Integer& p) {
  if (!is_prime(p)) throw std::domain_error("saturate: p must be prime");
  const Integer p2 = p * p;
  if (o.discriminant() % p2 != 0) throw SaturationError("saturate: disc not divisible by p^2");
  Integer f;
  if (!is_square(o.discriminant() / p2, &f)) throw SaturationError("saturate: disc/p^2 is not a square");
  Order cur = o;
  for (const auto& ell : prime_divisors(f)) {
    while (true) {
      Integer g;
      is_square(cur.discriminant() / p2, &g);
      if (g % ell != 0) break;
      long l = to_long(ell);
      auto next = step_up(cur, l);
      if (!next)
        throw SaturationError("saturate: no integral superorder at " + ell.get_str() + " (disc " +
                              cur.discriminant().get_str() + ")");
      cur = *next;
    }
  }
  if (cur.discriminant() != p2) throw SaturationError("saturate: did not reach disc p^2");
  return cur;
}

Order maximal_order(const Integer& p) {
  AlgebraRef alg = bp_algebra(p);
  Order start = Order::from_basis(alg, {Quat(alg, 1), Quat(alg, 0, 1), Quat(alg, 0, 0, 1), Quat(alg, 0, 0, 0, 1)});
  return saturate(start, p);
}

GrossLattice gross(const Order& o) {
  std::vector<Quat> t;
  for (const auto& b : o.basis()) t.push_back(tau(b));
  return {o, quat_lattice(o.algebra(), t)};
}

ExactLattice trace_zero_part(const Order& o) {
  std::vector<Quat> b = o.basis();
  IntegerMatrix tr(4, 1);
  for (std::size_t i = 0; i < 4; ++i) tr(i, 0) = b[i].trace().get_num();
  IntegerMatrix k = left_kernel(tr);
  std::vector<RationalVector> rows;
  for (std::size_t r = 0; r < k.rows(); ++r) rows.push_back(o.lattice().embed(k.row(r)));
  return span_ambient(rows, o.lattice().form());
}

IndexChain index_chain(const Order& o) {
  ExactLattice o0 = trace_zero_part(o);
  std::vector<RationalVector> zo0{Quat(o.algebra(), 1).coords()};
  for (std::size_t i = 0; i < o0.rank(); ++i) zo0.push_back(o0.basis().row(i));
  ExactLattice z_plus = span_ambient(zo0, o.lattice().form());
  ExactLattice ot = gross(o).lattice;
  RationalMatrix twice = o0.basis();
  for (std::size_t i = 0; i < twice.rows(); ++i)
    for (std::size_t j = 0; j < twice.cols(); ++j) twice(i, j) *= 2;
  ExactLattice two_o0(twice, o.lattice().form());
  auto need = [](std::optional<Integer> v, const char* what) {
    if (!v) throw std::logic_error(std::string("index chain: inclusion failed for ") + what);
    return *v;
  };
  return {need(relative_index(o.lattice(), z_plus), "Z+O0 in O"), need(relative_index(o0, ot), "OT in O0"),
          need(relative_index(ot, two_o0), "2O0 in OT")};
}

std::size_t embedding_count(const Order& o, const Integer& d, bool optimal) {
  Integer r = mod(d, 4);
  if (d <= 0 || r == 1 || r == 2) return 0;
  GrossLattice g = gross(o);
  std::size_t n = 0;
  for (const auto& v : vectors_of_norm(g.lattice.gram(), Rational(d))) {
    if (optimal) {
      Integer gc = 0;
      for (const auto& c : v.coords) gc = gcd(gc, c);
      if (gc != 1) continue;
    }
    ++n;
  }
  return n;
}

EichlerResult eichler_intersect(const Order& o1, const Order& o2) {
  ExactLattice l = intersect(o1.lattice(), o2.lattice());
  Order o = Order::from_generators(o1.algebra(), lattice_quats(o1.algebra(), l));
  auto idx = relative_index(o1.lattice(), o.lattice());
  if (!idx) throw std::logic_error("eichler_intersect: intersection not contained in o1");
  return {o, *idx};
}

Quat min_trace_lift(const GrossLattice& g, const Quat& beta) {
  if (!g.lattice.contains(beta.coords())) throw std::domain_error("min_trace_lift: element not in the Gross lattice");
  Rational n = beta.norm();
  Integer delta = mod(n.get_num(), 2);
  Quat alpha = (Quat(beta.algebra(), Rational(delta)) + beta) / 2;
  if (!g.parent.contains(alpha)) throw std::logic_error("min_trace_lift: lift not in order");
  if (!(tau(alpha) == beta)) throw std::logic_error("min_trace_lift: round trip failed");
  return alpha;
}

}  // namespace quatlat
