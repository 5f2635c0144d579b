#include "quatlat/classes.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace quatlat {

Integer nrd_by_det(const ExactLattice& ideal, const Order& o) {
  Rational ratio = ideal.gram().det() / o.lattice().gram().det();
  Integer num = iroot(ratio.get_num(), 4), den = iroot(ratio.get_den(), 4);
  if (pow(num, 4) != ratio.get_num() || pow(den, 4) != ratio.get_den() || den != 1)
    throw std::domain_error("nrd_by_det: det ratio " + ratio.get_str() + " is not an integral fourth power");
  return num;
}

Integer nrd_by_gcd(const AlgebraRef& alg, const ExactLattice& ideal) {
  std::vector<Quat> b = lattice_quats(alg, ideal);
  Integer g = 0;
  auto take = [&](const Rational& v) {
    if (!is_integer(v)) throw std::domain_error("nrd_by_gcd: non-integral norm form");
    g = gcd(g, v.get_num());
  };
  for (std::size_t i = 0; i < b.size(); ++i) {
    take(b[i].norm());
    for (std::size_t j = i + 1; j < b.size(); ++j) take(2 * inner(b[i], b[j]));
  }
  return g;
}

GramMatrix normalized_gram(const std::vector<Quat>& basis, const Integer& nrd) {
  const std::size_t n = basis.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = inner(basis[i], basis[j]) / Rational(nrd);
  return GramMatrix(m);
}

RightIdeal make_right_ideal(const Order& o, const std::vector<Quat>& gens) {
  const AlgebraRef& alg = o.algebra();
  ExactLattice l = quat_lattice(alg, gens);
  if (l.rank() != 4) throw std::invalid_argument("right ideal must have rank 4");
  auto ib = lattice_quats(alg, l);
  for (const auto& x : ib)
    for (const auto& y : o.basis())
      if (!l.contains((x * y).coords())) throw std::domain_error("lattice is not a right ideal: " + (x * y).str());
  Integer a = nrd_by_det(l, o), b = nrd_by_gcd(alg, l);
  if (a != b)
    throw std::logic_error("reduced norm mismatch: det gives " + a.get_str() + ", gcd gives " + b.get_str());
  return {o, l, a};
}

std::vector<RightIdeal> right_ideals_norm_ell(const Order& o, long ell) {
  if (!is_prime(ell)) throw std::domain_error("right_ideals_norm_ell: ell must be prime");
  if (o.discriminant() % ell == 0) throw std::domain_error("right_ideals_norm_ell: ell divides disc");
  const AlgebraRef& alg = o.algebra();
  std::vector<Quat> b = o.basis();
  std::vector<RightIdeal> out;
  for (const auto& c : projective_points(ell, 4)) {
    Quat alpha(alg);
    for (int i = 0; i < 4; ++i) alpha = alpha + b[i] * Rational(c[i]);
    if (alpha.norm().get_num() % ell != 0) continue;
    std::vector<Quat> gens;
    for (const auto& x : b) gens.push_back(x * Rational(ell));
    for (const auto& x : b) gens.push_back(alpha * x);
    ExactLattice l = quat_lattice(alg, gens);
    bool seen = std::any_of(out.begin(), out.end(), [&](const RightIdeal& r) { return r.lattice == l; });
    if (seen) continue;
    out.push_back(make_right_ideal(o, lattice_quats(alg, l)));
  }
  if (out.size() != static_cast<std::size_t>(ell + 1))
    throw std::logic_error("right_ideals_norm_ell: found " + std::to_string(out.size()) + " ideals, expected " +
                           std::to_string(ell + 1));
  for (const auto& r : out)
    if (r.norm != ell) throw std::logic_error("right_ideals_norm_ell: ideal norm is not ell");
  return out;
}

Order left_order(const RightIdeal& i) {
  const AlgebraRef& alg = i.order.algebra();
  std::vector<Quat> b = lattice_quats(alg, i.lattice);
  std::optional<ExactLattice> acc;
  for (const auto& bm : b) {
    Quat inv = bm.conj() / bm.norm();
    std::vector<Quat> gens;
    for (const auto& bn : b) gens.push_back(bn * inv);
    ExactLattice l = quat_lattice(alg, gens);
    acc = acc ? intersect(*acc, l) : l;
  }
  Order o = Order::from_generators(alg, lattice_quats(alg, *acc));
  if (i.order.discriminant() == o.discriminant()) return o;
  throw std::logic_error("left_order: discriminant " + o.discriminant().get_str() + " differs from right order");
}

bool isomorphic_orders(const Order& a, const Order& b) {
  if (a.discriminant() != b.discriminant()) return false;
  return isometry(gross(a).lattice.gram(), gross(b).lattice.gram()).has_value();
}

GramMatrix canonical_gross_gram(const Order& o) {
  GramMatrix g = gross(o).lattice.gram();
  Minima m = successive_minima(g);
  auto vs = enumerate_up_to(g, m.values[2]);
  std::array<std::vector<IntegerVector>, 3> pools;
  for (const auto& v : vs)
    for (int i = 0; i < 3; ++i)
      if (v.norm == m.values[i]) pools[i].push_back(v.coords);
  std::optional<GramMatrix> best;
  for (const auto& a : pools[0])
    for (const auto& b : pools[1]) {
      if (a == b) continue;
      Rational ab = g.inner(a, b);
      for (const auto& c : pools[2]) {
        IntegerMatrix u(3, 3);
        u.set_row(0, a);
        u.set_row(1, b);
        u.set_row(2, c);
        if (determinant(u) == 0) continue;
        GramMatrix h = g.transformed(u);
        if (!best || h.matrix() < best->matrix()) best = h;
      }
    }
  if (!best) throw std::logic_error("canonical_gross_gram: no basis attaining the minima");
  return *best;
}

std::pair<Rational, Rational> type_number_bounds(long p) {
  return {make_rational(p - 1, 24), make_rational(p + 13, 12)};
}

std::optional<std::size_t> find_class(const ClassSet& cs, const Order& o) {
  GramMatrix key = canonical_gross_gram(o);
  for (std::size_t i = 0; i < cs.canonical_grams.size(); ++i)
    if (cs.canonical_grams[i] == key) return i;
  return std::nullopt;
}

ClassSet class_enumerate(long p, long ell) {
  if (!is_prime(p)) throw std::domain_error("class_enumerate: p must be prime");
  if (ell == 0) ell = p == 2 ? 3 : 2;
  if (ell == p || !is_prime(ell)) throw std::domain_error("class_enumerate: need a prime ell != p");
  // Discovery order: BFS. The canonical Gross Gram is a complete invariant
  // (isometric lattices share it), so it doubles as the dedup key; the
  // isometry test cross-checks each identification.
  std::vector<Order> found;
  std::vector<GramMatrix> keys;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto locate = [&](const Order& o, const GramMatrix& key) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (!(keys[i] == key)) continue;
      if (!isomorphic_orders(found[i], o)) throw std::logic_error("class_enumerate: equal keys, not isometric");
      return i;
    }
    return std::nullopt;
  };
  Order start = maximal_order(p);
  found.push_back(start);
  keys.push_back(canonical_gross_gram(start));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& ideal : right_ideals_norm_ell(found[cur], ell)) {
      Order lo = left_order(ideal);
      GramMatrix key = canonical_gross_gram(lo);
      auto idx = locate(lo, key);
      if (!idx) {
        found.push_back(lo);
        keys.push_back(key);
        idx = found.size() - 1;
        queue.push_back(*idx);
      }
      edges.emplace_back(cur, *idx);
    }
  }
  // Sort classes by canonical key.
  std::vector<std::size_t> perm(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return keys[a].matrix() < keys[b].matrix(); });
  std::vector<std::size_t> where(found.size());
  for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  ClassSet cs;
  cs.p = p;
  cs.ell = ell;
  for (std::size_t i : perm) {
    cs.representatives.push_back(found[i]);
    cs.canonical_grams.push_back(keys[i]);
  }
  for (auto [a, b] : edges) cs.edges.emplace_back(where[a], where[b]);
  std::sort(cs.edges.begin(), cs.edges.end());
  return cs;
}

bool P151Report::ok() const {
  return order_valid && order_disc == 151 * 151 && nrd1_det == 512 && nrd1_gcd == 512 && nrd2_det == 512 &&
         nrd2_gcd == 512 && ideals_right_stable && gram1_matches && gram2_matches &&
         det1 == make_rational(151 * 151, 16) && det2 == make_rational(151 * 151, 16) && isospectral &&
         printed_prefix_matches && !isometric && !orth_3_6_lattice1 && orth_3_6_lattice2 && !left_orders_isomorphic &&
         left_disc1 == 151 * 151 && left_disc2 == 151 * 151;
}

namespace {

GramMatrix half_gram(std::initializer_list<std::initializer_list<long>> rows) {
  RationalMatrix m(4, 4);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = make_rational(v, 2);
    ++i;
  }
  return GramMatrix(m);
}

// Whether every vector of norm a is orthogonal to every vector of norm b.
bool norms_orthogonal(const GramMatrix& g, long a, long b) {
  auto vs = enumerate_up_to(g, std::max(a, b));
  for (const auto& x : vs) {
    if (x.norm != a) continue;
    for (const auto& y : vs)
      if (y.norm == b && g.inner(x.coords, y.coords) != 0) return false;
  }
  return true;
}

}  // namespace

P151Report repro_p151() {
  P151Report r;
  auto B = make_algebra(-1, -151);
  auto q = [&](Rational t, Rational x, Rational y, Rational z) { return Quat(B, t, x, y, z); };
  std::vector<Quat> ob{q(Rational(1, 2), 0, Rational(1, 2), 4), q(0, Rational(1, 32), Rational(3, 4), Rational(69, 32)),
                       q(0, 0, 1, 8), q(0, 0, 0, 16)};
  std::vector<Quat> i1{q(-5, 1, -1, -3), q(10, -42, 2, -2), q(-7, 11, 5, -1), q(74, 22, 2, -2)};
  std::vector<Quat> i2{q(-16, 26, 0, 2), q(12, 19, 4, -1), q(48, 26, 0, 2), q(-4, -31, 4, 5)};
  std::optional<Order> o;
  try {
    o = Order::from_basis(B, ob);
    r.order_valid = true;
    r.order_disc = o->discriminant();
  } catch (const OrderError&) {
    return r;
  }
  std::optional<RightIdeal> r1, r2;
  try {
    r1 = make_right_ideal(*o, i1);
    r2 = make_right_ideal(*o, i2);
    r.ideals_right_stable = true;
  } catch (const std::exception&) {
    return r;
  }
  r.nrd1_det = nrd_by_det(r1->lattice, *o);
  r.nrd1_gcd = nrd_by_gcd(B, r1->lattice);
  r.nrd2_det = nrd_by_det(r2->lattice, *o);
  r.nrd2_gcd = nrd_by_gcd(B, r2->lattice);
  r.gram1 = normalized_gram(i1, r1->norm);
  r.gram2 = normalized_gram(i2, r2->norm);
  r.gram1_matches = r.gram1 == half_gram({{6, 2, -1, 1}, {2, 12, 5, 4}, {-1, 5, 16, 6}, {1, 4, 6, 28}});
  r.gram2_matches = r.gram2 == half_gram({{6, 0, 2, 3}, {0, 12, 3, 4}, {2, 3, 14, 2}, {3, 4, 2, 28}});
  r.det1 = r.gram1.det();
  r.det2 = r.gram2.det();
  r.theta1 = theta_coeffs(r.gram1, 24);
  r.theta2 = theta_coeffs(r.gram2, 24);
  r.isospectral = r.theta1 == r.theta2;
  // Printed prefix, in-order terms only; zero elsewhere up to q^12, then q^15.
  std::map<long, std::int64_t> printed{{0, 1}, {3, 2}, {6, 2}, {7, 2}, {8, 2}, {9, 4}, {10, 2}, {11, 2}, {12, 4}, {15, 4}};
  bool match = true;
  for (long k = 0; k <= 12; ++k) {
    auto it = printed.find(k);
    match = match && r.theta1[k] == (it == printed.end() ? 0 : it->second);
  }
  match = match && r.theta1[15] == 4;
  r.printed_prefix_matches = match;
  for (long k = 13; k <= 14; ++k)
    if (r.theta1[k] != 0) r.slot_between_12_and_15.emplace_back(k, r.theta1[k]);
  r.isometric = isometry(r.gram1, r.gram2).has_value();
  r.orth_3_6_lattice1 = norms_orthogonal(r.gram1, 3, 6);
  r.orth_3_6_lattice2 = norms_orthogonal(r.gram2, 3, 6);
  Order lo1 = left_order(*r1), lo2 = left_order(*r2);
  r.left_disc1 = lo1.discriminant();
  r.left_disc2 = lo2.discriminant();
  r.left_orders_isomorphic = isomorphic_orders(lo1, lo2);
  return r;
}

}  // namespace quatlat
