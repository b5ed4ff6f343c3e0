#include "packcert/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "packcert/bounds.hpp"
#include "packcert/constructions.hpp"
#include "packcert/etf.hpp"
#include "packcert/io.hpp"
#include "packcert/leven.hpp"

namespace packcert::cli {

using nlohmann::json;

namespace {

int exit_for(Verdict v) { return v == Verdict::feasible ? kExitOk : kExitInfeasible; }

long require(const std::optional<long>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string(flag) + " is required");
  return *v;
}

void emit_report(const FeasibilityReport& r, const RunConfig& c, std::ostream& out) {
  if (c.format == "csv") {
    out << to_csv(r);
  } else if (c.format == "text") {
    out << to_text(r);
  } else {
    out << to_json(r).dump(2) << "\n";
  }
}

json bound_json(const BoundReport& b) {
  json candidates = json::array();
  for (const auto& [id, value] : b.candidates) candidates.push_back({{"formula_id", to_string(id)}, {"value", to_json(value)}});
  return {{"formula_id", to_string(b.formula_id)},
          {"applicable", b.applicable},
          {"value", b.value ? to_json(*b.value) : json(nullptr)},
          {"note", b.note},
          {"candidates", candidates}};
}

int run_bounds(const RunConfig& c, std::ostream& out) {
  const int d = static_cast<int>(require(c.d, "--d"));
  if (!c.s || !c.t) throw std::invalid_argument("--s and --t are required");
  const int s = *c.s, t = *c.t;

  std::vector<BoundReport> all = {dgs_antipodal(d, s), nozaki_suda(d, s, t), xxy_bound(d, s, t)};
  std::erase_if(all, [](const BoundReport& b) { return !b.applicable; });
  const BoundReport best = best_known(d, s, t);

  if (c.format == "csv") {
    out << "role,formula_id,value,approx,note\n";
    auto row = [&](const char* role, const BoundReport& b) {
      out << role << ',' << to_string(b.formula_id) << ',' << (b.value ? to_string(*b.value) : "") << ','
          << (b.value ? std::to_string(b.value->get_d()) : "") << ',' << csv_escape(b.note) << '\n';
    };
    for (const BoundReport& b : all) row("bound", b);
    row("best_known", best);
  } else if (c.format == "text") {
    out << "bounds d=" << d << " s=" << s << " t=" << t << "\n";
    for (const BoundReport& b : all) {
      out << "  " << to_string(b.formula_id) << ": " << to_string(*b.value);
      if (!b.note.empty()) out << "  (" << b.note << ")";
      out << "\n";
    }
    out << "best known: " << to_string(*best.value) << " via " << to_string(best.formula_id) << "  (" << best.note
        << ")\n";
  } else {
    json bounds = json::array();
    for (const BoundReport& b : all) bounds.push_back(bound_json(b));
    const Witness query = {{"d", Rational(d)}, {"s", Rational(s)}, {"t", Rational(t)}};
    out << json{{"schema_version", kSchemaVersion},
                {"kind", "bounds"},
                {"query", to_json(query)},
                {"bounds", bounds},
                {"best_known", bound_json(best)}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

int run_etf(const RunConfig& c, std::ostream& out) {
  const FeasibilityReport r = etf_report(require(c.d, "--d"), require(c.n, "--n"));
  emit_report(r, c, out);
  return exit_for(r.verdict);
}

int run_leven(const RunConfig& c, std::ostream& out) {
  const long d = require(c.d, "--d");
  if (c.n) {
    const FeasibilityReport r = leven_report(d, *c.n);
    emit_report(r, c, out);
    return exit_for(r.verdict);
  }

  const std::vector<SizeCandidate> sizes = enumerate_sizes(d, c.al_filter);
  std::vector<Verdict> verdicts;
  for (const SizeCandidate& s : sizes) verdicts.push_back(leven_report(d, s.n.get_si()).verdict);
  const bool any = std::find(verdicts.begin(), verdicts.end(), Verdict::feasible) != verdicts.end();

  if (c.format == "csv") {
    out << "n,alpha,in_window,is_half_size,is_tight_size,al_integrality,verdict\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const SizeCandidate& s = sizes[i];
      out << to_string(s.n) << ',' << (s.alpha ? std::to_string(*s.alpha) : "") << ',' << s.in_window << ','
          << s.is_half_size << ',' << s.is_tight_size << ',' << to_string(s.al) << ',' << to_string(verdicts[i])
          << '\n';
    }
  } else if (c.format == "text") {
    out << "leven sizes d=" << d << (c.al_filter ? " (integrality filter)" : "") << "\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const SizeCandidate& s = sizes[i];
      out << "  n=" << to_string(s.n);
      if (s.alpha) out << " alpha=" << *s.alpha;
      if (s.in_window) out << " window";
      if (s.is_half_size) out << " half-size";
      if (s.is_tight_size) out << " tight-size";
      out << " al=" << to_string(s.al) << " -> " << to_string(verdicts[i]) << "\n";
    }
  } else {
    json rows = json::array();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      const SizeCandidate& s = sizes[i];
      rows.push_back({{"n", to_json(Rational(s.n))},
                      {"alpha", s.alpha ? to_json(Rational(*s.alpha)) : json(nullptr)},
                      {"in_window", s.in_window},
                      {"is_half_size", s.is_half_size},
                      {"is_tight_size", s.is_tight_size},
                      {"al_integrality", to_string(s.al)},
                      {"verdict", to_string(verdicts[i])}});
    }
    const Witness query = {{"d", Rational(d)}, {"al_filter", c.al_filter}};
    out << json{{"schema_version", kSchemaVersion},
                {"kind", "leven_sizes"},
                {"query", to_json(query)},
                {"rows", rows},
                {"verdict", any ? "feasible" : "infeasible"}}
               .dump(2)
        << "\n";
  }
  return any ? kExitOk : kExitInfeasible;
}

struct ScanRow {
  long d = 0;
  std::vector<long> survivors;
  std::string note;
};

ScanRow scan_one(const std::string& mode, long d) {
  ScanRow row;
  row.d = d;
  if (mode == "etf") {
    for (long n = d + 2; 2 * n <= d * (d + 1); ++n) {
      if (etf_report(d, n).verdict == Verdict::feasible) row.survivors.push_back(n);
    }
  } else if (d < 4) {
    row.note = "size enumeration needs d >= 4";
  } else {
    for (const SizeCandidate& s : enumerate_sizes(d, false)) {
      if (leven_report(d, s.n.get_si()).verdict == Verdict::feasible) row.survivors.push_back(s.n.get_si());
    }
  }
  return row;
}

unsigned scan_threads() {
  if (const char* env = std::getenv("PACKCERT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int run_scan(const RunConfig& c, std::ostream& out) {
  const long lo = require(c.d_min, "--d-min"), hi = require(c.d_max, "--d-max");
  if (c.mode != "etf" && c.mode != "leven") throw std::invalid_argument("--mode must be etf or leven");
  if (lo < 2 || hi < lo) throw std::invalid_argument("need 2 <= d-min <= d-max");

  std::vector<ScanRow> rows(static_cast<std::size_t>(hi - lo + 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = scan_one(c.mode, lo + static_cast<long>(i));
  };
  const unsigned count = std::min<unsigned>(scan_threads(), static_cast<unsigned>(rows.size()));
  std::vector<std::jthread> pool;
  for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  pool.clear();

  const bool any = std::any_of(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.survivors.empty(); });
  if (c.format == "csv") {
    out << "mode,d,n\n";
    for (const ScanRow& r : rows) {
      for (long n : r.survivors) out << c.mode << ',' << r.d << ',' << n << '\n';
    }
  } else if (c.format == "text") {
    for (const ScanRow& r : rows) {
      out << c.mode << " d=" << r.d << ":";
      for (long n : r.survivors) out << " " << n;
      if (!r.note.empty()) out << "  (" << r.note << ")";
      out << "\n";
    }
  } else {
    json table = json::array();
    for (const ScanRow& r : rows) {
      json row = {{"d", r.d}, {"survivors", r.survivors}};
      if (!r.note.empty()) row["note"] = r.note;
      table.push_back(row);
    }
    const Witness query = {{"mode", c.mode}, {"d_min", Rational(lo)}, {"d_max", Rational(hi)}};
    out << json{{"schema_version", kSchemaVersion},
                {"kind", "scan"},
                {"query", to_json(query)},
                {"rows", table},
                {"verdict", any ? "feasible" : "infeasible"}}
               .dump(2)
        << "\n";
  }
  return any ? kExitOk : kExitInfeasible;
}

struct Claim {
  enum class Kind { none, etf, leven, design } kind = Kind::none;
  int strength = 0;
};

Claim parse_claim(const std::string& text) {
  Claim c;
  if (text.empty()) return c;
  if (text == "etf") {
    c.kind = Claim::Kind::etf;
  } else if (text == "leven") {
    c.kind = Claim::Kind::leven;
  } else if (text.rfind("design:", 0) == 0) {
    c.kind = Claim::Kind::design;
    const std::string digits = text.substr(7);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw std::invalid_argument("claim design:T needs a positive integer T");
    }
    c.strength = std::stoi(digits);
    if (c.strength < 1) throw std::invalid_argument("claim design:T needs a positive integer T");
  } else {
    throw std::invalid_argument("unknown claim '" + text + "' (expected etf, leven or design:T)");
  }
  return c;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  if (c.input.empty()) throw std::invalid_argument("--input is required");
  const Claim claim = parse_claim(c.claim);
  const PointSet x = read_points(c.input, c.tolerance);

  int kmax = c.kmax.value_or(0);
  if (claim.kind == Claim::Kind::design && kmax > 0 && kmax < claim.strength) kmax = claim.strength;
  const DesignProfile p = classify(x, kmax);

  bool pass = true;
  std::string note;
  switch (claim.kind) {
    case Claim::Kind::none: break;
    case Claim::Kind::etf:
      pass = p.etf;
      if (!pass) note = "not an equiangular set meeting the Welch bound";
      break;
    case Claim::Kind::leven:
      pass = p.levenstein;
      if (!pass) note = "angle set is not {0, +-alpha} at the Levenstein bound";
      break;
    case Claim::Kind::design:
      pass = p.strength.strength >= claim.strength;
      note = "measured strength " + std::to_string(p.strength.strength);
      break;
  }
  const char* status = pass ? "pass" : "fail";

  if (c.format == "csv") {
    out << "field,value\n"
        << "n," << x.size() << "\nd," << x.dim() << "\nmode," << to_string(x.mode()) << "\ns," << p.s
        << "\ncoherence," << p.coherence << "\nstrength," << p.strength.strength << "\nantipodal," << p.antipodal
        << "\ntight_frame," << p.tight_frame << "\nverdict," << to_string(p.verdict) << "\nclaim," << c.claim
        << "\nclaim_status," << status << "\n";
  } else if (c.format == "text") {
    out << c.input << ": " << x.size() << " points in R^" << x.dim() << " (" << to_string(x.mode()) << ")\n"
        << to_text(p);
    if (claim.kind != Claim::Kind::none) out << "claim " << c.claim << ": " << status << "\n";
  } else {
    json query = {{"input", c.input},
                  {"n", x.size()},
                  {"d", x.dim()},
                  {"tolerance", x.tolerance()},
                  {"mode", to_string(x.mode())}};
    json report = {{"schema_version", kSchemaVersion}, {"kind", "verify"}, {"query", query}, {"profile", to_json(p)}};
    if (claim.kind != Claim::Kind::none) report["claim"] = {{"name", c.claim}, {"status", status}, {"note", note}};
    report["verdict"] = status;
    out << report.dump(2) << "\n";
  }
  return pass ? kExitOk : kExitInfeasible;
}

int run_construct(const RunConfig& c, std::ostream& out) {
  if (c.output.empty()) throw std::invalid_argument("--output is required");
  auto fixed_dimension = [&](long d) {
    if (c.d && *c.d != d) throw std::invalid_argument(c.name + " lives in dimension " + std::to_string(d));
  };

  std::optional<PointSet> x;
  if (c.name == "simplex") {
    x = simplex_etf(static_cast<int>(require(c.d, "--d")));
  } else if (c.name == "cross") {
    x = cross_polytope(static_cast<int>(require(c.d, "--d")));
  } else if (c.name == "icosahedron") {
    fixed_dimension(3);
    x = icosahedron();
  } else if (c.name == "e8") {
    fixed_dimension(8);
    x = e8_roots();
  } else if (c.name == "e8-derived") {
    fixed_dimension(7);
    x = derived_code(e8_roots(), 0);
  } else {
    throw std::invalid_argument("unknown construction '" + c.name + "'");
  }
  if (c.half) x = half(*x);
  write_points(*x, c.output);

  if (c.format == "text") {
    out << c.name << ": " << x->size() << " points in R^" << x->dim() << " written to " << c.output << "\n";
  } else if (c.format == "csv") {
    out << "name,n,d,mode,output\n"
        << c.name << ',' << x->size() << ',' << x->dim() << ',' << to_string(x->mode()) << ',' << csv_escape(c.output)
        << "\n";
  } else {
    out << json{{"schema_version", kSchemaVersion},
                {"kind", "construct"},
                {"name", c.name},
                {"half", c.half},
                {"n", x->size()},
                {"d", x->dim()},
                {"mode", to_string(x->mode())},
                {"output", c.output}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

}  // namespace

ParseOutcome parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Necessary-condition certificates for antipodal spherical designs, real ETFs and Levenstein packings",
               "packcert"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig cfg;
  long d = 0, n = 0, d_min = 0, d_max = 0;
  int s = 0, t = 0, kmax = 0;
  double tol = 0;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* bounds = app.add_subcommand("bounds", "Size bounds for antipodal s-distance sets of strength t");
  bounds->add_option("--d", d)->required();
  bounds->add_option("--s", s)->required();
  bounds->add_option("--t", t)->required();

  auto* etf = app.add_subcommand("etf", "Necessary conditions for a real ETF of n vectors in R^d");
  etf->add_option("--d", d)->required();
  etf->add_option("--n", n)->required();

  auto* leven = app.add_subcommand("leven", "Levenstein-equality packings: one size, or the table of admissible sizes");
  leven->add_option("--d", d)->required();
  auto* leven_n = leven->add_option("--n", n);
  leven->add_flag("--al-filter", cfg.al_filter, "Keep only sizes passing the 1/alpha integrality test");

  auto* scan = app.add_subcommand("scan", "Per-dimension survivor tables");
  scan->add_option("--mode", cfg.mode)->required()->check(CLI::IsMember({"etf", "leven"}));
  scan->add_option("--d-min", d_min)->required();
  scan->add_option("--d-max", d_max)->required();

  auto* verify = app.add_subcommand("verify", "Profile a point file and check an optional claim");
  verify->add_option("--input", cfg.input)->required();
  auto* verify_tol = verify->add_option("--tol", tol, "Override the file tolerance");
  verify->add_option("--claim", cfg.claim, "etf, leven or design:T");
  auto* verify_kmax = verify->add_option("--kmax", kmax, "Highest moment degree (default 2s+2)");

  auto* construct = app.add_subcommand("construct", "Write a built-in configuration to a point file");
  construct->add_option("--name", cfg.name)
      ->required()
      ->check(CLI::IsMember({"simplex", "cross", "icosahedron", "e8", "e8-derived"}));
  auto* construct_d = construct->add_option("--d", d);
  construct->add_option("--output", cfg.output)->required();
  construct->add_flag("--half", cfg.half, "Keep one point of each antipodal pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {std::nullopt, code == 0 ? kExitOk : kExitUsage};
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  if (sub == bounds) {
    cfg.d = d;
    cfg.s = s;
    cfg.t = t;
  } else if (sub == etf) {
    cfg.d = d;
    cfg.n = n;
  } else if (sub == leven) {
    cfg.d = d;
    if (leven_n->count() > 0) cfg.n = n;
  } else if (sub == scan) {
    cfg.d_min = d_min;
    cfg.d_max = d_max;
  } else if (sub == verify) {
    if (verify_tol->count() > 0) cfg.tolerance = tol;
    if (verify_kmax->count() > 0) cfg.kmax = kmax;
  } else if (sub == construct) {
    if (construct_d->count() > 0) cfg.d = d;
  }
  return {cfg, kExitOk};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "json" && config.format != "csv" && config.format != "text") {
      throw std::invalid_argument("--format must be json, csv or text");
    }
    const std::string& sub = config.subcommand;
    if (sub == "bounds") return run_bounds(config, out);
    if (sub == "etf") return run_etf(config, out);
    if (sub == "leven") return run_leven(config, out);
    if (sub == "scan") return run_scan(config, out);
    if (sub == "verify") return run_verify(config, out);
    if (sub == "construct") return run_construct(config, out);
    throw std::invalid_argument("unknown subcommand '" + sub + "'");
  } catch (const std::exception& e) {
    err << "packcert: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main(int argc, const char* const* argv) {
  const ParseOutcome parsed = parse(argc, argv, std::cout, std::cerr);
  if (!parsed.config) return parsed.exit_code;
  return run(*parsed.config, std::cout, std::cerr);
}

}  // namespace packcert::cli
