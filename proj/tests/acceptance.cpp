// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/monomial_average.hpp"
#include "packcert/bounds.hpp"
#include "packcert/cli.hpp"
#include "packcert/constructions.hpp"
#include "packcert/etf.hpp"
#include "packcert/gegenbauer.hpp"
#include "packcert/io.hpp"
#include "packcert/leven.hpp"

using namespace packcert;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const Condition* find(const FeasibilityReport& r, const std::string& id) { return r.find(id); }

std::optional<WitnessValue> witness(const Condition* c, const std::string& key) {
  if (!c) return std::nullopt;
  for (const auto& [k, v] : c->witness) {
    if (k == key) return v;
  }
  return std::nullopt;
}

bool witness_is(const Condition* c, const std::string& key, const Surd& expected) {
  const auto v = witness(c, key);
  if (!v) return false;
  if (const auto* q = std::get_if<Rational>(&*v)) return Surd(*q) == expected;
  if (const auto* s = std::get_if<Surd>(&*v)) return *s == expected;
  return false;
}

bool witness_is(const Condition* c, const std::string& key, const std::string& expected) {
  const auto v = witness(c, key);
  const auto* s = v ? std::get_if<std::string>(&*v) : nullptr;
  return s && *s == expected;
}

void gegenbauer_normalization(Check& c) {
  for (int d = 2; d <= 10; ++d) {
    for (int k = 0; k <= 12; ++k) {
      const Rational at_one = gegenbauer_eval(d, k, Rational(1));
      c.expect(at_one == Rational(harm_dim(d, k)), "G_" + std::to_string(k) + "(1) != h_k at d=" + std::to_string(d));
    }
  }
}

void krein_gerzon(Check& c) {
  const auto t0 = Clock::now();
  long mismatches = 0, cases = 0;
  for (long d = 3; d <= 60; ++d) {
    for (long n = d + 2; n <= d * (d + 1) / 2 + 50; ++n) {
      ++cases;
      const KreinValues k = krein(etf_srg(d, n).params);
      const GerzonResult g = gerzon_check(d, n);
      const bool lower = g.lower_form >= 0, upper = 2 * n <= d * (d + 1);
      if ((k.k1.sign() >= 0) != lower || (k.k2.sign() >= 0) != upper || k.satisfied() != g.inside()) ++mismatches;
    }
  }
  const double elapsed = seconds_since(t0);
  c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches in " + std::to_string(cases) + " cases");
  c.expect(elapsed < 10, "runtime " + std::to_string(elapsed) + " s");
}

void etf_pipeline(Check& c) {
  const FeasibilityReport r = etf_report(6, 16);
  c.expect(r.verdict == Verdict::feasible, "verdict");
  const Condition* aw = find(r, "aw_integrality");
  c.expect(aw && aw->status == Status::pass, "aw_integrality");
  c.expect(witness_is(aw, "sqrt_d(n-1)/(n-d)", Surd(3)), "witness 3");
  c.expect(witness_is(aw, "sqrt_(n-d)(n-1)/d", Surd(5)), "witness 5");
  const Condition* srg = find(r, "srg_consistency");
  c.expect(srg && srg->status == Status::pass, "srg_consistency");
  c.expect(witness_is(srg, "v", Surd(15)) && witness_is(srg, "k", Surd(6)) && witness_is(srg, "lambda", Surd(1)) &&
               witness_is(srg, "mu", Surd(3)),
           "srg parameters (15,6,1,3)");
  c.expect(witness_is(srg, "r1", Surd(1)) && witness_is(srg, "r2", Surd(-3)), "eigenvalues (1,-3)");
  c.expect(witness_is(srg, "n1", Surd(9)) && witness_is(srg, "n2", Surd(5)), "multiplicities (9,5)");
  const Condition* kr = find(r, "krein");
  c.expect(witness_is(kr, "K1", Surd(26)) && witness_is(kr, "K2", Surd(6)), "krein (26,6)");
  const Condition* w = find(r, "coro1_window");
  c.expect(witness_is(w, "class", std::string("window")), "class window");
  c.expect(witness_is(w, "window_lo", Surd(11)) && witness_is(w, "window_hi", Surd(16)), "window [11,16]");
}

void leven_pipeline(Check& c) {
  std::vector<long> all, filtered;
  for (const SizeCandidate& s : enumerate_sizes(7, false)) all.push_back(s.n.get_si());
  for (const SizeCandidate& s : enumerate_sizes(7, true)) filtered.push_back(s.n.get_si());
  c.expect(all == std::vector<long>{35, 39, 42, 63, 84}, "enumerate_sizes(7)");
  c.expect(filtered == std::vector<long>{63}, "filtered sizes");
  const LevenGraph g = leven_srg(7, 63);
  c.expect(g.params.v == Surd(63) && g.params.k == Surd(32) && g.params.lambda == Surd(16) && g.params.mu == Surd(16),
           "srg (63,32,16,16)");
  c.expect(g.spectrum.r1 == Surd(4) && g.spectrum.r2 == Surd(-4), "eigenvalues (4,-4)");
  c.expect(*g.spectrum.n1 == Surd(27) && *g.spectrum.n2 == Surd(35), "multiplicities (27,35)");
  const EmbeddingAngles a = embedding_angles(7, 63);
  c.expect(a.negative == Rational(-1, 8) && a.positive == Rational(1, 10), "embedding angles");
  const TwoDistanceCheck td = two_distance_bound_check(7, 63);
  c.expect(td.status == Status::pass && td.limit == 665, "two-distance 63 <= 665");
}

void icosahedron_end_to_end(Check& c) {
  const PointSet x = icosahedron();
  const PointSet h = half(x);
  const double coh = coherence(h);
  c.expect(std::abs(coh * coh - welch_sq(3, 6).get_d()) < 1e-9 && welch_sq(3, 6) == Rational(1, 5), "coherence^2 1/5");
  const StrengthResult st = design_strength(x, 8);
  c.expect(st.strength == 5, "strength " + std::to_string(st.strength));
  c.expect(std::abs(gegenbauer_moment(x, 6) - 823.68) < 1e-6, "S_6");
  c.expect(dgs_antipodal(3, 3).value && *dgs_antipodal(3, 3).value == x.size(), "dgs bound 12");
  const AnnihilatorIdentity id = verify_annihilator_identity(h);
  c.expect(id.residual < 1e-9, "annihilator residual");
  c.expect(id.coeffs.size() == 4 && std::abs(id.coeffs[1] - 1.0 / 6) < 1e-12 && std::abs(id.coeffs[3] - 1.0 / 14) < 1e-12,
           "expansion (1/6, 1/14)");
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}}) {
    c.expect(verify_orthogonality(h, k, l, 5) < 1e-9, "orthogonality " + std::to_string(k) + "," + std::to_string(l));
  }
  c.expect(dim_identity(h).dimension == 6, "dim identity");
}

void e8_reproduction(Check& c) {
  const auto t0 = Clock::now();
  const PointSet e8 = e8_roots();
  c.expect(e8.size() == 240, "240 roots");
  c.expect(design_strength(e8, 8).strength == 7, "strength 7");
  const PointSet z = derived_code(e8, 0);
  c.expect(z.size() == 126 && z.dim() == 7, "derived code 126 in R^7");
  std::vector<Rational> angles;
  for (const AngleClass& a : angle_set(z)) angles.push_back(a.exact.value_or(Rational(99)));
  c.expect(angles == std::vector<Rational>{-1, Rational(-1, 2), 0, Rational(1, 2)}, "angle set {-1,0,+-1/2}");
  const DesignProfile p = classify(half(z));
  c.expect(p.verdict == PackingVerdict::levenstein, "half classifies as Levenstein");
  c.expect(p.coherence_sq && *p.coherence_sq == Rational(1, 4) && levenstein_sq(7, 63) == Rational(1, 4),
           "coherence 1/2");
  c.expect(half(z).size() == 63 && 63 * 9 == 7 * 9 * 9, "n = 63 = d(d+2)^2/9");
  const double elapsed = seconds_since(t0);
  c.expect(elapsed < 10, "runtime " + std::to_string(elapsed) + " s");
}

void bound_relations(Check& c) {
  for (long d = 4; d <= 50; ++d) {
    const Integer D(d);
    const Rational a = make_rational(2 * D * (D + 2) * (D + 2), 9);
    const Rational b = make_rational(D * (D + 1) * (D + 2), 3);
    const Rational ns = make_rational((D + 2) * (D * D * D + 4 * D * D - 9 * D + 12), 12);
    c.expect(a < b && b < ns, "chain at d=" + std::to_string(d));
  }
  for (int d = 2; d <= 30; ++d) {
    for (int t = 1; t <= 13; t += 2) {
      for (int s = 1; s <= t + 2; ++s) {
        const BoundReport x = xxy_bound(d, s, t);
        if (!x.applicable) continue;
        const BoundReport g = dgs_antipodal(d, s);
        c.expect(g.value && *x.value == *g.value - 2 * Rational(harm_dim(d, t - s + 2)),
                 "xxy at (" + std::to_string(d) + "," + std::to_string(s) + "," + std::to_string(t) + ")");
      }
    }
  }
}

Eigen::MatrixXd random_unit_rows(std::mt19937_64& rng, Eigen::Index n, Eigen::Index d) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < d; ++k) m(i, k) = g(rng);
    m.row(i).normalize();
  }
  return m;
}

void strength_oracle(Check& c) {
  std::vector<std::pair<std::string, PointSet>> sets = {{"simplex(4)", simplex_etf(4)},
                                                        {"cross(4)", cross_polytope(4)},
                                                        {"icosahedron", icosahedron()},
                                                        {"e8", e8_roots()},
                                                        {"e8-derived", derived_code(e8_roots(), 0)}};
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> nd(1, 12), dd(2, 4);
  for (int i = 0; i < 20; ++i) {
    const int d = dd(rng);
    Eigen::MatrixXd rows = random_unit_rows(rng, nd(rng), d);
    if (i % 3 == 0) {
      const Eigen::Index m = std::max<Eigen::Index>(1, rows.rows() / 2);
      Eigen::MatrixXd sym(2 * m, d);
      sym << rows.topRows(m), -rows.topRows(m);
      rows = sym;
    }
    sets.emplace_back("random " + std::to_string(i), PointSet::from_rows(rows));
  }
  for (const auto& [name, x] : sets) {
    const int a = design_strength(x, 8).strength, b = oracle::design_strength(x.points(), 8);
    c.expect(a == b, name + ": moments " + std::to_string(a) + " vs oracle " + std::to_string(b));
  }
}

void nozaki_suda_closed_form(Check& c) {
  for (int d = 4; d <= 20; ++d) {
    const Integer D(d);
    const Rational expected = make_rational((D + 2) * (D * D * D + 4 * D * D - 9 * D + 12), 12);
    const BoundReport r = nozaki_suda(d, 4, 5);
    c.expect(r.value && *r.value == expected, "d=" + std::to_string(d));
  }
}

int cli_run(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "packcert");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const cli::ParseOutcome p = cli::parse(static_cast<int>(argv.size()), argv.data(), out, err);
  const int code = p.config ? cli::run(*p.config, out, err) : p.exit_code;
  if (out_text) *out_text = out.str();
  return code;
}

void negative_controls(Check& c) {
  c.expect(cli_run({"etf", "--d", "6", "--n", "18"}) == cli::kExitInfeasible, "etf 6 18 not infeasible");
  c.expect(etf_report(6, 18).verdict == Verdict::infeasible, "etf_report(6,18)");
  c.expect(cli_run({"leven", "--d", "7", "--n", "42"}) == cli::kExitInfeasible, "leven 7 42 not infeasible");
  const Condition* al = find(leven_report(7, 42), "al_integrality");
  c.expect(al && al->status == Status::fail, "al_integrality at (7,42)");

  std::mt19937_64 rng(10);
  std::normal_distribution<double> g;
  Eigen::MatrixXd rows = icosahedron().points();
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index k = 0; k < rows.cols(); ++k) rows(i, k) += 1e-3 * g(rng);
    rows.row(i).normalize();
  }
  const auto dir = std::filesystem::temp_directory_path();
  const std::string full = (dir / "packcert_acceptance_perturbed.json").string();
  const std::string half_path = (dir / "packcert_acceptance_perturbed_half.json").string();
  write_points(PointSet::from_rows(rows), full);
  Eigen::MatrixXd h(6, 3);
  const PointSet ideal_half = half(icosahedron());
  for (Eigen::Index i = 0, r = 0; i < 12 && r < 6; ++i) {
    for (Eigen::Index j = 0; j < 6; ++j) {
      if ((icosahedron().points().row(i) - ideal_half.points().row(j)).norm() < 1e-12) h.row(r++) = rows.row(i);
    }
  }
  write_points(PointSet::from_rows(h), half_path);

  std::string out;
  c.expect(cli_run({"verify", "--input", full, "--claim", "design:5"}, &out) == cli::kExitInfeasible,
           "design:5 claim passed on the perturbed icosahedron");
  const auto j = nlohmann::json::parse(out);
  c.expect(j["profile"]["strength"].get<int>() < 5, "perturbed strength not below 5");
  c.expect(cli_run({"verify", "--input", full, "--claim", "etf"}) == cli::kExitInfeasible, "etf claim passed (full)");
  c.expect(cli_run({"verify", "--input", half_path, "--claim", "etf"}) == cli::kExitInfeasible,
           "etf claim passed (half)");
  std::filesystem::remove(full);
  std::filesystem::remove(half_path);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"Gegenbauer normalization G_k(1) = h_k, d in [2,10], k in [0,12]", gegenbauer_normalization},
      {"Krein <=> Gerzon for ETF graphs, d in [3,60]", krein_gerzon},
      {"ETF pipeline at (6,16)", etf_pipeline},
      {"Levenstein pipeline at d = 7", leven_pipeline},
      {"icosahedron end to end", icosahedron_end_to_end},
      {"E8 to the (7,63) Levenstein packing", e8_reproduction},
      {"size bound chain and xxy = DGS - 2h", bound_relations},
      {"design strength agrees with the monomial oracle", strength_oracle},
      {"Nozaki-Suda closed form for d in [4,20]", nozaki_suda_closed_form},
      {"negative controls", negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].first << " (" << seconds_since(t0)
              << " s)\n";
    for (const std::string& f : c.failures) std::cout << "       " << f << "\n";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
