#include "packcert/io.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace packcert {

using nlohmann::json;

namespace {

struct Entry {
  std::optional<Rational> exact;
  double real = 0;
};

bool exact_literal(const std::string& s) {
  static const std::regex pattern(R"(\s*[-+]?\d+(\s*/\s*\d+)?\s*)");
  return std::regex_match(s, pattern);
}

Entry parse_entry(const std::string& s) {
  Entry e;
  if (exact_literal(s)) {
    std::string text = s;
    std::erase_if(text, [](char c) { return c == '+' || std::isspace(static_cast<unsigned char>(c)); });
    e.exact = parse_rational(text);
    e.real = e.exact->get_d();
    return e;
  }
  std::size_t used = 0;
  try {
    e.real = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed coordinate '" + s + "'");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw std::invalid_argument("malformed coordinate '" + s + "'");
  return e;
}

Entry parse_entry(const json& j) {
  if (j.is_string()) return parse_entry(j.get<std::string>());
  if (j.is_number_integer()) {
    Entry e;
    e.exact = Rational(j.dump());
    e.real = j.get<double>();
    return e;
  }
  if (j.is_number()) return Entry{std::nullopt, j.get<double>()};
  throw std::invalid_argument("coordinates must be numbers or numeric strings");
}

PointSet build(const std::vector<std::vector<Entry>>& rows, std::optional<long> dim, const Rational& gram_scale,
               double tol) {
  if (rows.empty()) throw std::invalid_argument("point file has no points");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size()) throw std::invalid_argument("ragged input: point " + std::to_string(i));
  }
  if (dim && static_cast<std::size_t>(*dim) != rows.front().size()) {
    throw std::invalid_argument("declared dim does not match the coordinates");
  }
  bool exact = true;
  for (const auto& row : rows) {
    for (const Entry& e : row) exact = exact && e.exact.has_value();
  }
  if (exact) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& row : rows) {
      auto& p = pts.emplace_back();
      for (const Entry& e : row) p.push_back(*e.exact);
    }
    return validate_exact(pts, gram_scale, tol);
  }
  if (gram_scale != 1) throw std::invalid_argument("gram_scale requires exact coordinates");
  std::vector<std::vector<double>> pts;
  for (const auto& row : rows) {
    auto& p = pts.emplace_back();
    for (const Entry& e : row) p.push_back(e.real);
  }
  return validate(pts, tol);
}

std::string format_rational(const Rational& q) { return to_string(q); }

}  // namespace

json to_json(const Rational& q) {
  return {{"num", to_string(Integer(q.get_num()))}, {"den", to_string(Integer(q.get_den()))}, {"approx", q.get_d()}};
}

json to_json(const Surd& x) {
  return {{"rational", to_json(x.rational_part())},
          {"coeff", to_json(x.coefficient())},
          {"radicand", to_json(x.radicand())},
          {"approx", x.approx()}};
}

json to_json(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Surd>) {
          return to_json(x);
        } else {
          return x;
        }
      },
      v);
}

json to_json(const Witness& w) {
  json out = json::object();
  for (const auto& [key, value] : w) out[key] = to_json(value);
  return out;
}

json to_json(const FeasibilityReport& r) {
  json conditions = json::array();
  for (const Condition& c : r.conditions) {
    conditions.push_back(
        {{"id", c.id}, {"status", to_string(c.status)}, {"witness", to_json(c.witness)}, {"note", c.note}});
  }
  return {{"schema_version", kSchemaVersion},
          {"kind", r.kind},
          {"query", to_json(r.query)},
          {"conditions", conditions},
          {"verdict", to_string(r.verdict)},
          {"notes", r.notes}};
}

json to_json(const DesignProfile& p) {
  json angles = json::array();
  for (const AngleClass& a : p.angles) {
    json entry = {{"value", a.value}, {"pairs", a.pairs}};
    if (a.exact) entry["exact"] = to_json(*a.exact);
    angles.push_back(entry);
  }
  json out = {{"angle_set", angles},
              {"s", p.s},
              {"coherence", p.coherence},
              {"antipodal", p.antipodal},
              {"strength", p.strength.strength},
              {"strength_capped", p.strength.capped},
              {"exact", p.strength.exact},
              {"moments", p.strength.moments.values},
              {"tight_frame", p.tight_frame},
              {"etf", p.etf},
              {"levenstein", p.levenstein},
              {"verdict", to_string(p.verdict)},
              {"dgs_tight", p.dgs_tight},
              {"notes", p.notes}};
  if (p.coherence_sq) out["coherence_sq"] = to_json(*p.coherence_sq);
  if (p.welch_sq) out["welch_sq"] = to_json(*p.welch_sq);
  if (p.levenstein_sq) out["levenstein_sq"] = to_json(*p.levenstein_sq);
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_object()) return make_rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  throw std::invalid_argument("expected an exact rational");
}

std::string format_value(const WitnessValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return format_rational(x);
        } else if constexpr (std::is_same_v<T, Surd>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          return x;
        }
      },
      v);
}

std::string format_witness(const Witness& w) {
  std::string out;
  for (const auto& [key, value] : w) {
    if (!out.empty()) out += "; ";
    out += key + "=" + format_value(value);
  }
  return out;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const FeasibilityReport& r) {
  std::ostringstream os;
  os << "id,status,witness,note\n";
  for (const Condition& c : r.conditions) {
    os << csv_escape(c.id) << ',' << to_string(c.status) << ',' << csv_escape(format_witness(c.witness)) << ','
       << csv_escape(c.note) << '\n';
  }
  return os.str();
}

std::string to_text(const FeasibilityReport& r) {
  std::ostringstream os;
  os << r.kind << " " << format_witness(r.query) << "\n";
  for (const Condition& c : r.conditions) {
    os << "  " << c.id << ": " << to_string(c.status);
    if (!c.witness.empty()) os << "  [" << format_witness(c.witness) << "]";
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << "\n";
  }
  for (const std::string& n : r.notes) os << "  note: " << n << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  return os.str();
}

std::string to_text(const DesignProfile& p) {
  std::ostringstream os;
  os << "angle set (" << p.s << "):";
  for (const AngleClass& a : p.angles) {
    os << " " << (a.exact ? to_string(*a.exact) : std::to_string(a.value)) << "x" << a.pairs;
  }
  os << "\ncoherence: " << p.coherence;
  if (p.coherence_sq) os << " (squared " << to_string(*p.coherence_sq) << ")";
  os << "\nantipodal: " << (p.antipodal ? "yes" : "no") << "\nstrength: " << p.strength.strength
     << (p.strength.capped ? " (capped)" : "") << "\ntight frame: " << (p.tight_frame ? "yes" : "no")
     << "\nverdict: " << to_string(p.verdict) << "\n";
  for (const std::string& n : p.notes) os << "note: " << n << "\n";
  return os.str();
}

PointSet parse_points_json(const std::string& text, std::optional<double> tol_override) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("point file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw std::invalid_argument("point file needs a \"points\" array");
  }
  const double tol = tol_override ? *tol_override : j.value("tolerance", kDefaultTolerance);
  std::optional<long> dim;
  if (j.contains("dim")) dim = j["dim"].get<long>();
  const Rational scale = j.contains("gram_scale") ? rational_from_json(j["gram_scale"]) : Rational(1);

  std::vector<std::vector<Entry>> rows;
  for (const json& p : j["points"]) {
    if (!p.is_array()) throw std::invalid_argument("each point must be an array");
    auto& row = rows.emplace_back();
    for (const json& c : p) row.push_back(parse_entry(c));
  }
  return build(rows, dim, scale, tol);
}

PointSet parse_points_csv(const std::string& text, std::optional<double> tol_override) {
  std::vector<std::vector<Entry>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto& row = rows.emplace_back();
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) row.push_back(parse_entry(field));
  }
  return build(rows, std::nullopt, Rational(1), tol_override.value_or(kDefaultTolerance));
}

PointSet read_points(const std::string& path, std::optional<double> tol_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return parse_points_csv(buf.str(), tol_override);
  }
  return parse_points_json(buf.str(), tol_override);
}

json points_to_json(const PointSet& x) {
  json pts = json::array();
  json out = {{"dim", x.dim()}, {"tolerance", x.tolerance()}};
  if (const auto& r = x.exact_rows()) {
    for (Eigen::Index i = 0; i < r->rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < r->cols(); ++c) row.push_back(to_string((*r)(i, c)));
      pts.push_back(row);
    }
    if (x.gram_scale() != 1) out["gram_scale"] = to_string(x.gram_scale());
  } else {
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < x.dim(); ++c) row.push_back(x.points()(i, c));
      pts.push_back(row);
    }
  }
  out["points"] = pts;
  return out;
}

void write_points(const PointSet& x, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << points_to_json(x).dump(2) << "\n";
}

}  // namespace packcert
