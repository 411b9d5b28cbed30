#include "cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "goldenk3/certifier.hpp"
#include "goldenk3/disc_group.hpp"
#include "goldenk3/golden_ring.hpp"
#include "goldenk3/quad_lattice.hpp"
#include "goldenk3/surface_model.hpp"

namespace goldenk3::cli {

using nlohmann::json;

namespace {

constexpr const char* kPrecisionNote =
    "real values are IEEE double computations from exact integer data, rounded to 12 "
    "significant digits; integers are exact";
constexpr const char* kExactNote = "all values are exact";

// Malformed arguments that CLI11 cannot see (list syntax, ranges).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact integers: JSON numbers when they fit in 64 bits, decimal strings
// otherwise, so nothing is ever printed in floating notation.
json exact(const Integer& x) {
  if (const auto v = to_int64(x)) return *v;
  return x.get_str();
}

json exact_list(const std::vector<Integer>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(exact(x));
  return arr;
}

json real(double x) { return round12(x); }

std::vector<Integer> parse_integer_list(const std::string& text, std::size_t count,
                                        const std::string& flag) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw UsageError(flag + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.size() != count || (!text.empty() && text.back() == ',')) {
    throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

GramForm parse_gram(const std::string& text) {
  const auto v = parse_integer_list(text, 3, "--gram");
  return {v[0], v[1], v[2]};
}

LatticeMap parse_map(const std::string& text) {
  const auto v = parse_integer_list(text, 4, "--map");
  return {v[0], v[1], v[2], v[3]};
}

std::complex<double> parse_complex(const std::string& text, const std::string& flag) {
  std::stringstream ss(text);
  std::string re_s, im_s;
  std::getline(ss, re_s, ',');
  std::getline(ss, im_s, ',');
  std::string extra;
  if (std::getline(ss, extra, ',')) throw UsageError(flag + " expects re or re,im");
  try {
    std::size_t used = 0;
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw UsageError(flag + ": bad number '" + re_s + "'");
    double im = 0.0;
    if (!im_s.empty()) {
      im = std::stod(im_s, &used);
      if (used != im_s.size()) throw UsageError(flag + ": bad number '" + im_s + "'");
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": bad number '" + text + "'");
  }
}

json gram_json(const GramForm& g) { return json::array({exact(g.p), exact(g.q), exact(g.r)}); }

json map_json(const LatticeMap& m) {
  return json::array({exact(m.m11), exact(m.m12), exact(m.m21), exact(m.m22)});
}

json envelope(const std::string& command, json inputs, json result, bool has_reals) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"precision_note", has_reals ? kPrecisionNote : kExactNote}};
}

std::string verdict_text(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---- table rendering (reads the same payload the JSON carries) ----

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_number_float()) return format_real(v.get<double>());
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cell(v[i]);
    return s + "]";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

void render_scan_table(const json& result, std::ostream& out) {
  static const std::vector<std::pair<std::string, int>> columns{
      {"q", 5},           {"even", 5},          {"signature", 18},      {"disc", 12},
      {"represents0", 12}, {"representsPlus2", 16}, {"representsMinus2", 17}, {"minus_id", 9},
      {"verdict", 7}};
  for (const auto& [name, width] : columns) out << std::left << std::setw(width + 1) << name;
  out << '\n';
  for (const auto& row : result["rows"]) {
    for (const auto& [name, width] : columns) {
      out << std::left << std::setw(width + 1) << cell(row[name]);
    }
    out << '\n';
  }
  out << "rows: " << result["rows"].size() << '\n';
}

void render_certificate_table(const json& result, std::ostream& out) {
  const json& in = result["input"];
  out << "input: gram " << cell(in["gram"]) << "  map " << cell(in["map"]) << "  eps "
      << cell(in["eps"]) << "  family_q " << cell(in["family_q"]) << '\n';
  for (const auto& c : result["checks"]) {
    out << c["id"].get<std::string>() << ' ' << std::left << std::setw(36)
        << c["name"].get<std::string>() << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
        << c["evidence"].get<std::string>() << '\n';
  }
  out << "verdict: " << result["verdict"].get<std::string>() << '\n';
  const json& d = result["derived"];
  out << "charpoly: " << cell(d["charpoly"]) << '\n';
  out << "eigenvalues: " << cell(d["eigenvalues"]) << '\n';
  out << "spectral_radius: " << cell(d["spectral_radius"]) << '\n';
  out << "entropy: " << cell(d["entropy"]) << '\n';
  out << "lefschetz: " << cell(d["lefschetz_k1"]) << '\n';
  out << "disc_invariants: " << cell(d["disc_invariants"]) << '\n';
  out << "projectivity_note: " << cell(d["projectivity_note"]) << '\n';
  if (result.contains("power")) {
    const json& p = result["power"];
    out << "power k=" << cell(p["k"]) << ": lefschetz " << cell(p["lefschetz"])
        << "  no_fixed_curves " << cell(p["no_fixed_curves"]) << "  note: "
        << cell(p["note"]) << '\n';
  }
}

void render_calc_table(const json& result, std::ostream& out) { out << cell(result["value"]) << '\n'; }

void emit(const json& env, const std::string& format, std::ostream& out,
          void (*table)(const json&, std::ostream&)) {
  if (format == "json") {
    out << env.dump() << '\n';
  } else {
    table(env["result"], out);
  }
}

// ---- payload builders ----

json scan_payload(long q_min, long q_max) {
  json rows = json::array();
  for (const ScanRow& r : family_scan(q_min, q_max)) {
    rows.push_back({{"q", exact(r.q)},
                    {"even", r.even},
                    {"signature", to_string(r.signature)},
                    {"disc", exact_list(r.disc_factors)},
                    {"represents0", r.represents_zero},
                    {"representsPlus2", r.represents_plus2},
                    {"representsMinus2", r.represents_minus2},
                    {"minus_id", r.minus_id},
                    {"verdict", verdict_text(r.verdict)}});
  }
  return {{"rows", std::move(rows)}};
}

json eigenvalues_json(const Eigenvalues& ev) {
  if (ev.real) return json::array({real(ev.first), real(ev.second)});
  return json::array({json{{"re", real(ev.first)}, {"im", real(ev.second)}},
                      json{{"re", real(ev.first)}, {"im", real(-ev.second)}}});
}

json certificate_payload(const Certificate& c) {
  json checks = json::array();
  for (const auto& ch : c.checks) {
    checks.push_back({{"id", ch.id}, {"name", ch.name}, {"pass", ch.pass}, {"evidence", ch.evidence}});
  }
  const DerivedQuantities& d = c.derived;
  return {{"input",
           {{"gram", gram_json(c.input.gram)},
            {"map", map_json(c.input.map)},
            {"eps", c.input.eps},
            {"family_q", c.input.family_q ? exact(*c.input.family_q) : json(nullptr)}}},
          {"checks", std::move(checks)},
          {"verdict", verdict_text(c.verdict())},
          {"derived",
           {{"charpoly", to_string(d.charpoly)},
            {"charpoly_trace", exact(d.charpoly.trace)},
            {"charpoly_det", exact(d.charpoly.det)},
            {"eigenvalues", eigenvalues_json(d.eigenvalues)},
            {"spectral_radius", real(d.spectral_radius)},
            {"entropy", real(d.entropy)},
            {"lefschetz_k1", d.lefschetz_k1 ? exact(*d.lefschetz_k1) : json(nullptr)},
            {"disc_invariants", exact_list(d.disc_invariants)},
            {"projectivity_note", d.projectivity_note}}}};
}

json power_payload(const PowerFixedPoints& p) {
  return {{"k", p.k},
          {"lefschetz", exact(p.lefschetz)},
          {"no_fixed_curves", p.no_fixed_curves},
          {"has_fixed_points", p.has_fixed_points},
          {"note", p.note}};
}

std::string complex_text(std::complex<double> z) {
  const double re = round12(z.real());
  const double im = round12(z.imag());
  if (std::fabs(im) < 1e-12) return format_real(re);
  std::string s = std::fabs(re) < 1e-12 ? "" : format_real(re);
  if (!s.empty() && im > 0) s += "+";
  return s + format_real(im) + "i";
}

}  // namespace

double round12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", round12(x));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice arithmetic and certificates for free K3 automorphisms of positive "
               "entropy built from the golden ratio",
               "goldenk3"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const std::vector<std::string> formats{"table", "json"};

  // scan
  auto* scan = app.add_subcommand("scan", "Classify the golden family [[2q,q],[q,-2q]] over a q range");
  long q_min = 0, q_max = 0;
  std::string scan_format = "table";
  scan->add_option("--q-min", q_min, "Smallest q")->required();
  scan->add_option("--q-max", q_max, "Largest q")->required();
  scan->add_option("--format", scan_format, "Output format")->check(CLI::IsMember(formats));

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "Certify the free positive-entropy construction");
  std::optional<long> cert_q;
  std::string gram_text, map_text, cert_format = "table";
  std::optional<int> eps;
  std::optional<long> power_k;
  auto* q_opt = certify_cmd->add_option("--q", cert_q, "Golden family parameter (uses eta^6, eps = -1)");
  auto* gram_opt = certify_cmd->add_option("--gram", gram_text, "Gram entries p,q,r");
  auto* map_opt = certify_cmd->add_option("--map", map_text, "Map entries m11,m12,m21,m22 (row-major)");
  auto* eps_opt = certify_cmd->add_option("--eps", eps, "Action on T(S): +1 or -1")->check(CLI::IsMember({-1, 1}));
  certify_cmd->add_option("--format", cert_format, "Output format")->check(CLI::IsMember(formats));
  certify_cmd->add_option("--power", power_k, "Also report the Lefschetz number of g^k")
      ->check(CLI::PositiveNumber);
  q_opt->excludes(gram_opt)->excludes(map_opt)->excludes(eps_opt);
  gram_opt->needs(map_opt)->needs(eps_opt);
  map_opt->needs(gram_opt);
  eps_opt->needs(gram_opt);

  // calc
  auto* calc = app.add_subcommand("calc", "Single-quantity calculators");
  calc->require_subcommand(1);
  std::string calc_format = "table";
  calc->add_option("--format", calc_format, "Output format")->check(CLI::IsMember(formats));

  auto* cp = calc->add_subcommand("charpoly", "Characteristic polynomial of eta^(2n) on Z[eta]");
  long cp_n = 1;
  cp->add_option("--n", cp_n, "n >= 1")->required()->check(CLI::PositiveNumber);

  auto* lf = calc->add_subcommand("lefschetz", "Topological Lefschetz number of g^k");
  long lf_q = 2, lf_k = 1;
  int lf_eps = -1;
  std::string lf_gram, lf_map;
  auto* lf_q_opt = lf->add_option("--q", lf_q, "Golden family parameter; g* = eta^6 on NS")->capture_default_str();
  auto* lf_gram_opt = lf->add_option("--gram", lf_gram, "Gram entries p,q,r");
  auto* lf_map_opt = lf->add_option("--map", lf_map, "Map entries m11,m12,m21,m22");
  lf->add_option("--eps", lf_eps, "Action on T(S)")->check(CLI::IsMember({-1, 1}));
  lf->add_option("--power", lf_k, "k >= 1")->check(CLI::PositiveNumber);
  lf_q_opt->excludes(lf_gram_opt)->excludes(lf_map_opt);
  lf_gram_opt->needs(lf_map_opt);
  lf_map_opt->needs(lf_gram_opt);

  auto* holo = calc->add_subcommand("holo", "Holomorphic Lefschetz number");
  std::string holo_case, alpha_text = "1", beta_text = "1";
  holo->add_option("--case", holo_case, "rational, enriques, torus or k3")
      ->required()
      ->check(CLI::IsMember({"rational", "enriques", "rational-or-enriques", "torus", "k3"}));
  holo->add_option("--alpha", alpha_text, "Eigenvalue re or re,im on the unit circle");
  holo->add_option("--beta", beta_text, "Second torus eigenvalue re or re,im");

  auto* sn = calc->add_subcommand("snf", "Smith normal form diagonal of a Gram matrix");
  std::string snf_gram;
  sn->add_option("--gram", snf_gram, "Gram entries p,q,r")->required();

  auto* en = calc->add_subcommand("entropy", "Entropy log d1 of eta^(2n) on the golden family");
  long en_q = 2, en_n = 3;
  en->add_option("--q", en_q, "Golden family parameter")->required();
  en->add_option("--n", en_n, "Power eta^(2n), n >= 1")->check(CLI::PositiveNumber);

  for (auto* leaf : {cp, lf, holo, sn, en}) leaf->fallthrough();

  std::vector<const char*> argv{"goldenk3"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*scan) {
      json inputs{{"q_min", q_min}, {"q_max", q_max}, {"format", scan_format}};
      if (q_min > q_max) throw UsageError("--q-min must not exceed --q-max");
      emit(envelope("scan", inputs, scan_payload(q_min, q_max), false), scan_format, out,
           render_scan_table);
      return kOk;
    }

    if (*certify_cmd) {
      Certificate c;
      json inputs{{"format", cert_format}};
      if (cert_q) {
        if (*cert_q == 0) throw UsageError("--q must be nonzero");
        inputs["q"] = *cert_q;
        c = certify(*cert_q);
      } else if (!gram_text.empty()) {
        const GramForm g = parse_gram(gram_text);
        const LatticeMap m = parse_map(map_text);
        inputs["gram"] = gram_json(g);
        inputs["map"] = map_json(m);
        inputs["eps"] = *eps;
        c = certify_explicit(g, m, *eps);
      } else {
        throw UsageError("certify needs --q or --gram/--map/--eps");
      }
      json result = certificate_payload(c);
      if (power_k) {
        inputs["power"] = *power_k;
        if (c.verdict()) {
          result["power"] = power_payload(fixed_point_count_power(c, *power_k));
        } else {
          err << "note: --power skipped because the certificate failed\n";
        }
      }
      emit(envelope("certify", inputs, result, true), cert_format, out, render_certificate_table);
      if (!c.verdict()) {
        err << "certificate failed at " << c.first_failure()->id << " ("
            << c.first_failure()->name << ")\n";
        return kCertificateFail;
      }
      return kOk;
    }

    if (*cp) {
      const CharPoly poly = charpoly(mult_matrix(eta_pow(2 * cp_n)));
      json result{{"value", to_string(poly)}, {"trace", exact(poly.trace)}, {"det", exact(poly.det)}};
      emit(envelope("calc charpoly", {{"n", cp_n}}, result, false), calc_format, out, render_calc_table);
      return kOk;
    }

    if (*lf) {
      json inputs{{"eps", lf_eps}, {"power", lf_k}};
      K3Model model;
      if (!lf_gram.empty()) {
        const GramForm g = parse_gram(lf_gram);
        const LatticeMap m = parse_map(lf_map);
        inputs["gram"] = gram_json(g);
        inputs["map"] = map_json(m);
        model = K3Model::create(g, m, lf_eps);
      } else {
        if (lf_q == 0) throw UsageError("--q must be nonzero");
        inputs["q"] = lf_q;
        model = K3Model::create(golden_family(lf_q), mult_matrix(eta_pow(6)), lf_eps);
      }
      const Integer value = topological_lefschetz(model, lf_k);
      emit(envelope("calc lefschetz", inputs, {{"value", exact(value)}}, false), calc_format, out,
           render_calc_table);
      return kOk;
    }

    if (*holo) {
      SurfaceHodgeCase c;
      json inputs{{"case", holo_case}};
      if (holo_case == "torus") {
        c = SurfaceHodgeCase::torus(parse_complex(alpha_text, "--alpha"), parse_complex(beta_text, "--beta"));
        inputs["alpha"] = alpha_text;
        inputs["beta"] = beta_text;
      } else if (holo_case == "k3") {
        c = SurfaceHodgeCase::k3(parse_complex(alpha_text, "--alpha"));
        inputs["alpha"] = alpha_text;
      } else {
        c = SurfaceHodgeCase::rational_or_enriques();
      }
      const std::complex<double> h = holomorphic_lefschetz(c);
      json result{{"value", complex_text(h)}, {"re", real(h.real())}, {"im", real(h.imag())}};
      emit(envelope("calc holo", inputs, result, true), calc_format, out, render_calc_table);
      return kOk;
    }

    if (*sn) {
      const GramForm g = parse_gram(snf_gram);
      const SnfResult s = snf(g);
      json result{{"value", s.d1.get_str() + "," + s.d2.get_str()},
                  {"diagonal", json::array({exact(s.d1), exact(s.d2)})},
                  {"u", map_json(s.u)},
                  {"v", map_json(s.v)}};
      emit(envelope("calc snf", {{"gram", gram_json(g)}}, result, false), calc_format, out,
           render_calc_table);
      return kOk;
    }

    if (*en) {
      if (en_q == 0) throw UsageError("--q must be nonzero");
      const GramForm g = golden_family(en_q);
      const LatticeMap m = mult_matrix(eta_pow(2 * en_n));
      if (!is_isometry(g, m)) throw std::logic_error("eta^(2n) is not an isometry of the family");
      const CharPoly poly = charpoly(m);
      json result{{"value", real(entropy(poly))},
                  {"spectral_radius", real(spectral_radius(poly))},
                  {"charpoly", to_string(poly)}};
      emit(envelope("calc entropy", {{"q", en_q}, {"n", en_n}}, result, true), calc_format, out,
           render_calc_table);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace goldenk3::cli
