#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "quatlat/orders.hpp"

namespace quatlat::cli {

json to_json(const Integer& n) { return to_string(n); }
json to_json(const Rational& q) { return to_string(q); }

json to_json(const GramMatrix& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < g.rank(); ++j) r.push_back(to_json(g(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const IntegerVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Quat& q) {
  json a = json::array();
  for (std::size_t i = 0; i < 4; ++i) a.push_back(to_json(q[i]));
  return a;
}

json to_json(const ThetaSeries& t) { return {{"n", t.n}, {"coeffs", t.coeffs}}; }

namespace {

Rational rational_entry(const json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<long>());
  throw UsageError("matrix entries must be integers or rational strings");
}

json quats(const std::vector<Quat>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

json integers(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json vectors(const std::vector<IntegerVector>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json minima_json(const Minima& m) {
  json values = json::array();
  for (const auto& x : m.values) values.push_back(to_json(x));
  return {{"values", values}, {"vectors", vectors(m.vectors)}};
}

json facts_json(const std::vector<std::pair<std::string, std::string>>& facts) {
  json o = json::object();
  for (const auto& [k, v] : facts) o[k] = v;
  return o;
}

json span_json(const NormSpanReport& r) {
  json steps = json::array();
  for (const auto& s : r.trajectory)
    steps.push_back({{"norm", to_json(s.norm)},
                     {"vectors", s.vectors},
                     {"index", s.index ? to_json(*s.index) : json(nullptr)}});
  json basis = json::array();
  for (std::size_t i = 0; i < r.span.rows(); ++i) basis.push_back(to_json(r.span.row(i)));
  return {{"trajectory", steps},
          {"final_index", r.final_index ? to_json(*r.final_index) : json(nullptr)},
          {"span", basis}};
}

std::vector<std::int64_t> prefix(const ThetaSeries& t, long n) {
  return {t.coeffs.begin(), t.coeffs.begin() + std::min<long>(n, t.n) + 1};
}

const char* kind_name(PipelineKind k) {
  switch (k) {
    case PipelineKind::UniqueClass: return "unique-class";
    case PipelineKind::SmallCase: return "small-case";
    case PipelineKind::Full: return "full";
  }
  return "";
}

json pipeline_json(const PipelineResult& r) {
  json j = {{"kind", kind_name(r.kind)}, {"terms_used", r.terms_used}};
  if (r.kind != PipelineKind::UniqueClass) j["d1"] = to_json(r.d1);
  if (r.triple) {
    j["triple"] = integers({r.triple->d1, r.triple->d2, r.triple->d3});
    j["provenance"] = r.triple->provenance;
  }
  if (r.gram) {
    j["gram"] = to_json(r.gram->gram);
    j["traces"] = integers({r.gram->t12, r.gram->t13, r.gram->t23});
    j["sign"] = r.gram->plus ? "+" : "-";
  }
  return j;
}

void require_prime(long p, const char* what) {
  if (p < 2 || !is_prime(p)) throw UsageError(std::string(what) + " must be prime");
}

const char* solubility_name(Solubility s) {
  switch (s) {
    case Solubility::Soluble: return "soluble";
    case Solubility::Insoluble: return "insoluble";
    case Solubility::Undecided: return "undecided";
  }
  return "";
}

Outcome repro_p151() {
  P151Report r = quatlat::repro_p151();
  json slot = json::array();
  for (const auto& [k, c] : r.slot_between_12_and_15) slot.push_back({k, c});
  json j = {{"command", "repro"},
            {"name", "p151"},
            {"order_valid", r.order_valid},
            {"order_disc", to_json(r.order_disc)},
            {"nrd", {{"I1", {to_json(r.nrd1_det), to_json(r.nrd1_gcd)}}, {"I2", {to_json(r.nrd2_det), to_json(r.nrd2_gcd)}}}},
            {"ideals_right_stable", r.ideals_right_stable},
            {"gram1", to_json(r.gram1)},
            {"gram2", to_json(r.gram2)},
            {"gram1_matches_printed", r.gram1_matches},
            {"gram2_matches_printed", r.gram2_matches},
            {"det1", to_json(r.det1)},
            {"det2", to_json(r.det2)},
            {"theta1", r.theta1.coeffs},
            {"theta2", r.theta2.coeffs},
            {"isospectral", r.isospectral},
            {"printed_prefix_matches", r.printed_prefix_matches},
            {"slot_between_12_and_15", slot},
            {"isometric", r.isometric},
            {"norm3_perp_norm6", {r.orth_3_6_lattice1, r.orth_3_6_lattice2}},
            {"left_orders_isomorphic", r.left_orders_isomorphic},
            {"left_discs", {to_json(r.left_disc1), to_json(r.left_disc2)}}};
  j["verified"] = r.ok();
  return {j, r.ok()};
}

ExactLattice tau_image(const AlgebraRef& alg, const ExactLattice& l) {
  std::vector<Quat> t;
  for (const auto& b : lattice_quats(alg, l)) t.push_back(tau(b));
  return quat_lattice(alg, t);
}

Outcome repro_b3_tau() {
  AlgebraRef alg = make_algebra(-1, -3);
  Rational h(1, 2);
  ExactLattice l1 = quat_lattice(alg, {Quat(alg, 1), Quat(alg, 0, 1), Quat(alg, h, 0, h), Quat(alg, 0, 0, 0, 1)});
  ExactLattice l2 = quat_lattice(alg, {Quat(alg, 1), Quat(alg, 0, 1), Quat(alg, 0, h, h), Quat(alg, 0, 0, 0, 1)});
  ExactLattice t1 = tau_image(alg, l1), t2 = tau_image(alg, l2);
  const long n = 60;
  bool iso = isometry(l1.gram(), l2.gram()).has_value();
  bool theta_same = theta_equal(l1, l2, n);
  bool tau_iso = isometry(t1.gram(), t2.gram()).has_value();
  bool tau_theta_same = theta_equal(t1, t2, n);
  bool ok = iso && theta_same && !tau_iso && !tau_theta_same;
  json j = {{"command", "repro"},
            {"name", "b3-tau"},
            {"algebra", {"-1", "-3"}},
            {"L1", quats(lattice_quats(alg, l1))},
            {"L2", quats(lattice_quats(alg, l2))},
            {"L1_L2_isometric", iso},
            {"L1_L2_theta_equal_to", theta_same ? json(n) : json(false)},
            {"tau_L1_gram", to_json(t1.gram())},
            {"tau_L2_gram", to_json(t2.gram())},
            {"tau_images_isometric", tau_iso},
            {"tau_theta1", prefix(theta_coeffs(t1, 12), 12)},
            {"tau_theta2", prefix(theta_coeffs(t2, 12), 12)},
            {"verified", ok}};
  return {j, ok};
}

}  // namespace

GramMatrix gram_from_json(const json& j) {
  if (j.is_object() && !j.contains("gram")) throw UsageError("gram file needs a gram array");
  const json& rows = j.is_object() ? j.at("gram") : j;
  if (!rows.is_array() || rows.empty()) throw UsageError("gram must be a non-empty square array");
  std::size_t n = rows.size();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw UsageError("gram must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_entry(rows[i][k]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (m(i, k) != m(k, i)) throw UsageError("gram must be symmetric");
  return GramMatrix(m);
}

ThetaSeries theta_from_json(const json& j) {
  if (j.is_object() && j.contains("theta")) return theta_from_json(j.at("theta"));
  if (j.is_object() && !j.contains("coeffs")) throw UsageError("theta file needs a coeffs array");
  const json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array() || c.empty()) throw UsageError("theta coefficients must be a non-empty array");
  ThetaSeries t;
  for (const auto& e : c) {
    if (e.is_number_integer()) {
      t.coeffs.push_back(e.get<std::int64_t>());
    } else if (e.is_string()) {
      t.coeffs.push_back(std::stoll(e.get<std::string>()));
    } else {
      throw UsageError("theta coefficients must be integers");
    }
  }
  t.n = static_cast<long>(t.coeffs.size()) - 1;
  return t;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

unsigned workers() {
  if (const char* env = std::getenv("QUATLAT_WORKERS")) {
    long w = std::strtol(env, nullptr, 10);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Outcome order_report(long p) {
  require_prime(p, "p");
  Order o = maximal_order(p);
  Integer expect = Integer(p) * p;
  bool ok = o.discriminant() == expect;
  json j = {{"command", "order"},
            {"p", p},
            {"algebra", {to_json(o.algebra()->a()), to_json(o.algebra()->b())}},
            {"basis", quats(o.basis())},
            {"gram", to_json(o.lattice().gram())},
            {"discriminant", to_json(o.discriminant())},
            {"verified", ok}};
  return {j, ok};
}

Outcome gross_report(long p) {
  require_prime(p, "p");
  Order o = maximal_order(p);
  GrossLattice g = gross(o);
  IndexChain c = index_chain(o);
  Rational det = g.lattice.gram().det();
  bool ok = det == 4 * Integer(p) * p && c.o_over_z_plus_o0 == 2 && c.o0_over_ot == 4 && c.ot_over_2o0 == 2;
  json basis = json::array();
  for (std::size_t i = 0; i < g.lattice.rank(); ++i) basis.push_back(to_json(to_quat(o.algebra(), g.lattice.basis().row(i))));
  json j = {{"command", "gross"},
            {"p", p},
            {"basis", basis},
            {"gram", to_json(g.lattice.gram())},
            {"det", to_json(det)},
            {"index_chain", integers({c.o_over_z_plus_o0, c.o0_over_ot, c.ot_over_2o0})},
            {"minima", minima_json(successive_minima(g.lattice.gram()))},
            {"verified", ok}};
  return {j, ok};
}

Outcome theta_report(const GramMatrix& g, long n) {
  if (n < 0) throw UsageError("N must be non-negative");
  if (!g.is_positive_definite() || !g.is_integral()) throw UsageError("gram must be positive definite and integral");
  json j = {{"command", "theta"}, {"gram", to_json(g)}, {"theta", to_json(theta_coeffs(g, n))}};
  return {j, true};
}

Outcome minima_report(const GramMatrix& g) {
  if (!g.is_positive_definite()) throw UsageError("gram must be positive definite");
  json j = {{"command", "minima"}, {"gram", to_json(g)}, {"minima", minima_json(successive_minima(g))}};
  return {j, true};
}

Outcome class_minima_report(long p) {
  require_prime(p, "p");
  ClassSet cs = class_enumerate(p);
  json classes = json::array();
  for (std::size_t i = 0; i < cs.representatives.size(); ++i) {
    Minima m = successive_minima(gross(cs.representatives[i]).lattice.gram());
    classes.push_back({{"class", i}, {"gross_gram", to_json(cs.canonical_grams[i])}, {"minima", minima_json(m)}});
  }
  return {{{"command", "minima"}, {"p", p}, {"classes", classes}}, true};
}

Outcome classes_report(long p, long ell) {
  require_prime(p, "p");
  if (ell != 0) {
    require_prime(ell, "ell");
    if (ell == p) throw UsageError("ell must differ from p");
  }
  ClassSet cs = class_enumerate(p, ell);
  const std::size_t h = cs.representatives.size();
  const long n = (p + 5) / 6 + 2;
  auto thetas = parallel_map<ThetaSeries>(h, [&](std::size_t i) { return theta_coeffs(cs.representatives[i].lattice(), n); });
  bool pairwise_non_iso = true, prefixes_distinct = true;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t k = i + 1; k < h; ++k) {
      if (isomorphic_orders(cs.representatives[i], cs.representatives[k])) pairwise_non_iso = false;
      if (thetas[i] == thetas[k]) prefixes_distinct = false;
    }
  auto [lo, hi] = type_number_bounds(p);
  bool in_bounds = lo <= Rational(h) && Rational(h) <= hi;
  json classes = json::array();
  for (std::size_t i = 0; i < h; ++i)
    classes.push_back({{"class", i},
                       {"basis", quats(cs.representatives[i].basis())},
                       {"gross_gram", to_json(cs.canonical_grams[i])},
                       {"theta", thetas[i].coeffs}});
  json edges = json::array();
  for (const auto& [a, b] : cs.edges) edges.push_back({a, b});
  bool ok = pairwise_non_iso && prefixes_distinct && in_bounds;
  json j = {{"command", "classes"},
            {"p", p},
            {"ell", cs.ell},
            {"count", h},
            {"bounds", {to_json(lo), to_json(hi)}},
            {"theta_terms", n},
            {"pairwise_non_isomorphic", pairwise_non_iso},
            {"theta_prefixes_distinct", prefixes_distinct},
            {"classes", classes},
            {"neighbour_edges", edges},
            {"verified", ok}};
  return {j, ok};
}

Outcome recon_report(long p) {
  require_prime(p, "p");
  ClassSet cs = class_enumerate(p);
  const std::size_t h = cs.representatives.size();
  std::vector<Minima> minima(h);
  for (std::size_t i = 0; i < h; ++i) minima[i] = successive_minima(gross(cs.representatives[i]).lattice.gram());
  auto results = parallel_map<json>(h, [&](std::size_t i) {
    const Order& o = cs.representatives[i];
    const Minima& m = minima[i];
    PipelineResult r = full_pipeline([&](long n) { return theta_coeffs(o.lattice(), n); }, Integer(p));
    json j = pipeline_json(r);
    j["class"] = i;
    j["minima"] = json::array({to_json(m.values[0]), to_json(m.values[1]), to_json(m.values[2])});
    bool ok = true;
    if (r.kind == PipelineKind::UniqueClass) {
      ok = h == 1;
    } else if (r.kind == PipelineKind::SmallCase) {
      ok = r.d1 == m.values[0];
      for (std::size_t k = 0; k < h; ++k)
        if (k != i && minima[k].values[0] == m.values[0]) ok = false;
      j["d1_unique_among_classes"] = ok;
    } else {
      ok = r.triple->d1 == m.values[0] && r.triple->d2 == m.values[1] && r.triple->d3 == m.values[2];
      bool iso = isometry(r.gram->gram, gross(o).lattice.gram()).has_value();
      j["gram_isometric_to_gross"] = iso;
      ok = ok && iso;
    }
    j["verified"] = ok;
    return j;
  });
  bool ok = true;
  for (const auto& r : results) ok = ok && r["verified"].get<bool>();
  json j = {{"command", "recon"}, {"p", p}, {"classes", results}, {"verified", ok}};
  return {j, ok};
}

Outcome recon_series_report(const ThetaSeries& theta, long p) {
  require_prime(p, "p");
  PipelineResult r = full_pipeline(theta, Integer(p));
  json j = pipeline_json(r);
  j = {{"command", "recon"}, {"p", p}, {"result", j}};
  return {j, true};
}

Outcome genset_report(long p, long ell, int k_max) {
  require_prime(p, "p");
  require_prime(ell, "ell");
  if (ell == p) throw UsageError("ell must differ from p");
  if (k_max < 0 || k_max > 40) throw UsageError("kmax must lie in 0..40");
  NormGenerationReport r = verify_norm_generation(p, ell, k_max);
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"class", c.class_index},
                       {"minimal_k", c.minimal_k ? json(*c.minimal_k) : json(nullptr)},
                       {"status", c.minimal_k ? "generated" : "inconclusive"},
                       {"span", span_json(c.span)}});
  json j = {{"command", "genset"}, {"p", p}, {"ell", ell}, {"kmax", k_max}, {"classes", classes}, {"all_generated", r.all_generated()}};
  return {j, true};
}

Outcome lsc_report(const GramMatrix& form, const Integer& s, long ell) {
  require_prime(ell, "ell");
  if (s < 1) throw UsageError("s must be positive");
  if (!form.is_integral()) throw UsageError("form must be integral");
  QForm q(form);
  StrongResult st = strong_lsc(q, s, ell);
  WeakResult wk = weak_lsc(q, s, ell);
  auto basis = local_norm_basis(q, s, ell);
  json j = {{"command", "lsc-check"},
            {"form", to_json(form)},
            {"s", to_json(s)},
            {"ell", ell},
            {"strong", {{"holds", st.holds}, {"witness", st.witness ? to_json(*st.witness) : json(nullptr)}}},
            {"weak",
             {{"status", solubility_name(wk.status)},
              {"witness", wk.witness ? to_json(*wk.witness) : json(nullptr)},
              {"depth", wk.depth}}}};
  j["local_basis"] = basis ? json{{"vectors", vectors(basis->vectors)}, {"depth", basis->depth}} : json(nullptr);
  bool ok = true;
  if (st.holds && wk.status != Solubility::Soluble) ok = false;
  if (wk.witness) ok = ok && hensel_liftable(q, *wk.witness, s, ell, wk.depth);
  if (ell != 2) {
    Descent d = descent_chain(q, s, ell);
    json steps = json::array();
    for (const auto& st2 : d.steps) steps.push_back({{"stage", st2.stage}, {"forced", st2.forced}});
    j["descent"] = {{"steps", steps}, {"soluble", d.soluble}};
  }
  j["verified"] = ok;
  return {j, ok};
}

std::vector<std::string> repro_names() {
  std::vector<std::string> names{"p151"};
  for (const auto& n : counterexample_names()) names.push_back(n);
  names.push_back("b3-tau");
  return names;
}

Outcome repro(const std::string& name) {
  if (name == "p151") return repro_p151();
  if (name == "b3-tau") return repro_b3_tau();
  auto names = counterexample_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw UsageError("unknown repro target: " + name);
  CounterexampleReport r = verify_counterexample(name);
  json spans = json::array();
  for (const auto& s : r.spans) spans.push_back(span_json(s));
  json j = {{"command", "repro"}, {"name", r.name}, {"facts", facts_json(r.facts)}, {"spans", spans}, {"verified", r.reproduced}};
  return {j, r.reproduced};
}

int run(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for maximal orders in definite quaternion algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "Write the JSON report to this file");

  long p = 0, n = 0, ell = 0;
  int kmax = 8;
  std::string gram_file, theta_file, form_file, s_text, target;

  auto* order = app.add_subcommand("order", "Maximal order of B_p");
  order->add_option("-p", p, "Prime")->required();

  auto* theta = app.add_subcommand("theta", "Theta coefficients of a maximal order or a Gram matrix");
  auto* theta_p = theta->add_option("-p", p, "Prime");
  auto* theta_gram = theta->add_option("--gram", gram_file, "JSON Gram matrix");
  theta->add_option("-N", n, "Truncation order")->required();
  theta_p->excludes(theta_gram);

  auto* grossc = app.add_subcommand("gross", "Gross lattice of a maximal order");
  grossc->add_option("-p", p, "Prime")->required();

  auto* minima = app.add_subcommand("minima", "Successive minima of O^T for each class, or of a Gram matrix");
  auto* minima_p = minima->add_option("-p", p, "Prime");
  auto* minima_gram = minima->add_option("--gram", gram_file, "JSON Gram matrix");
  minima_p->excludes(minima_gram);

  auto* genset = app.add_subcommand("genset", "Least K such that norms ℓ^0..ℓ^K generate each class");
  genset->add_option("-p", p, "Prime")->required();
  genset->add_option("--ell", ell, "Prime ℓ")->required();
  genset->add_option("--kmax", kmax, "Largest exponent tried");

  auto* lsc = app.add_subcommand("lsc-check", "Local solubility of Q(x) = s at ℓ");
  lsc->add_option("--form", form_file, "JSON Gram matrix")->required();
  lsc->add_option("-s", s_text, "Target")->required();
  lsc->add_option("--ell", ell, "Prime ℓ")->required();

  auto* recon = app.add_subcommand("recon", "Recover the successive minima of O^T from theta coefficients");
  recon->add_option("-p", p, "Prime")->required();
  recon->add_option("--theta", theta_file, "JSON theta coefficients");

  auto* classes = app.add_subcommand("classes", "Isomorphism classes of maximal orders");
  classes->add_option("-p", p, "Prime")->required();
  classes->add_option("--ell", ell, "Neighbour prime");

  auto* reproc = app.add_subcommand("repro", "Reproduce a worked example");
  reproc->add_option("target", target, "Example name")->required()->check(CLI::IsMember(repro_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Outcome out;
  try {
    if (*order) {
      out = order_report(p);
    } else if (*theta) {
      if (!gram_file.empty()) {
        out = theta_report(gram_from_json(read_json_file(gram_file)), n);
      } else if (*theta_p) {
        require_prime(p, "p");
        out = theta_report(maximal_order(p).lattice().gram(), n);
        out.report["p"] = p;
      } else {
        throw UsageError("theta needs -p or --gram");
      }
    } else if (*grossc) {
      out = gross_report(p);
    } else if (*minima) {
      if (!gram_file.empty())
        out = minima_report(gram_from_json(read_json_file(gram_file)));
      else if (*minima_p)
        out = class_minima_report(p);
      else
        throw UsageError("minima needs -p or --gram");
    } else if (*genset) {
      out = genset_report(p, ell, kmax);
    } else if (*lsc) {
      Integer s;
      try {
        Rational q = parse_rational(s_text);
        if (!is_integer(q)) throw std::invalid_argument("not an integer");
        s = q.get_num();
      } catch (const std::invalid_argument&) {
        throw UsageError("-s must be an integer");
      }
      out = lsc_report(gram_from_json(read_json_file(form_file)), s, ell);
    } else if (*recon) {
      out = theta_file.empty() ? recon_report(p) : recon_series_report(theta_from_json(read_json_file(theta_file)), p);
    } else if (*classes) {
      out = classes_report(p, ell);
    } else if (*reproc) {
      out = repro(target);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientTerms& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintViolated& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const CaseViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const AmbiguousSigns& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }

  std::string text = out.report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      std::cerr << "error: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  return out.verified ? 0 : 1;
}

}  // namespace quatlat::cli
