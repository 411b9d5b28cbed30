// One line per acceptance criterion; exit status is nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "goldenk3/certifier.hpp"
#include "goldenk3/disc_group.hpp"
#include "goldenk3/golden_ring.hpp"
#include "goldenk3/quad_lattice.hpp"
#include "goldenk3/surface_model.hpp"
#include "oracles.hpp"

using namespace goldenk3;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

Outcome fibonacci_powers() {
  Outcome o;
  LatticeMap acc = LatticeMap::identity();
  for (long n = 1; n <= 40; ++n) {
    acc = oracle::multiply(oracle::eta_matrix(), acc);
    const GoldenInt e = eta_pow(n);
    const GoldenInt expected{oracle::fibonacci(n - 1), oracle::fibonacci(n)};
    if (!(e == expected)) o.fail("eta^" + std::to_string(n) + " = " + to_string(e));
    // column of acc is the image of 1 = (1, 0)
    if (!(Vec2{acc.m11, acc.m21} == Vec2{e.a, e.b})) o.fail("matrix power mismatch at n = " + std::to_string(n));
    if (!(mult_matrix(e) == acc)) o.fail("mult_matrix(eta^n) mismatch at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 1..40, eta^40 = " + to_string(eta_pow(40));
  return o;
}

Outcome characteristic_polynomials() {
  Outcome o;
  for (long n = 1; n <= 20; ++n) {
    const CharPoly c = charpoly(mult_matrix(eta_pow(2 * n)));
    const Integer trace = oracle::fibonacci(2 * n) + 2 * oracle::fibonacci(2 * n - 1);
    if (!(c == CharPoly{trace, 1})) o.fail("n = " + std::to_string(n) + ": " + to_string(c));
  }
  const std::array<CharPoly, 3> printed{CharPoly{3, 1}, CharPoly{7, 1}, CharPoly{18, 1}};
  for (long n = 1; n <= 3; ++n) {
    if (!(charpoly(mult_matrix(eta_pow(2 * n))) == printed[n - 1])) o.fail("printed value at n = " + std::to_string(n));
  }
  if (o.pass) o.detail = "n = 1..20; n = 3 gives " + to_string(charpoly(mult_matrix(eta_pow(6))));
  return o;
}

Outcome family_sweep() {
  Outcome o;
  for (long q = -20; q <= 20; ++q) {
    if (q == 0) continue;
    const std::string tag = "q = " + std::to_string(q) + ": ";
    const GramForm g = golden_family(q);
    const Integer aq = std::labs(q);
    if (!is_even(g) || signature(g) != Signature::Hyperbolic) o.fail(tag + "not even hyperbolic");
    const SnfResult s = snf(g);
    if (s.d1 != aq || s.d2 != 5 * aq) o.fail(tag + "invariant factors " + to_string(s.d1) + "," + to_string(s.d2));
    const bool unit = aq == 1;
    for (const Integer c : {Integer(2), Integer(-2)}) {
      const Representation r = represents(g, c);
      if (r.status == RepresentationStatus::Unknown) o.fail(tag + "undecided");
      if ((r.status == RepresentationStatus::Represented) != unit) o.fail(tag + "represents " + to_string(c));
      if (r.witness && eval_form(g, *r.witness, *r.witness) != c) o.fail(tag + "bad witness");
    }
    if (represents(g, 0).status != RepresentationStatus::NotRepresented) o.fail(tag + "represents 0");
    if (acts_as_minus_id(g, mult_matrix(eta_pow(6))) != (aq <= 2)) o.fail(tag + "-id action");
  }
  if (o.pass) o.detail = "40 forms";
  return o;
}

Outcome paper_witness() {
  Outcome o;
  const Certificate c = certify(2);
  for (const auto& ch : c.checks) {
    if (!ch.pass) o.fail(ch.id + " " + ch.name + ": " + ch.evidence);
  }
  if (!(c.derived.charpoly == CharPoly{18, 1})) o.fail("charpoly " + to_string(c.derived.charpoly));
  const double big = 9.0 + 4.0 * std::sqrt(5.0);
  const double small = 1.0 / big;  // 9 - 4 sqrt 5 without cancellation
  const Eigenvalues& ev = c.derived.eigenvalues;
  if (!ev.real) o.fail("complex eigenvalues");
  const double hi = std::max(ev.first, ev.second), lo = std::min(ev.first, ev.second);
  if (rel_err(hi, big) > 1e-12 || rel_err(lo, small) > 1e-12) o.fail("eigenvalues " + str(hi) + ", " + str(lo));
  if (c.derived.lefschetz_k1 != Integer(0)) o.fail("Lefschetz number is not 0");
  const double log_eta = std::log(std::numbers::phi);
  if (rel_err(c.derived.entropy, std::log(big)) > 1e-12 || rel_err(c.derived.entropy, 6.0 * log_eta) > 1e-12) {
    o.fail("entropy " + str(c.derived.entropy));
  }
  if (o.pass) {
    std::ostringstream os;
    os.precision(15);
    os << "C1-C8 pass, entropy " << c.derived.entropy;
    o.detail = os.str();
  }
  return o;
}

Outcome power_lefschetz() {
  Outcome o;
  const Certificate c = certify(2);
  std::vector<std::string> odd_nonzero;
  for (long k = 1; k <= 20; ++k) {
    const Integer t = fixed_point_count_power(c, k).lefschetz;
    if (k % 2 == 1 && t != 0) odd_nonzero.push_back("k=" + std::to_string(k) + ":" + to_string(t));
    if (k % 2 == 0 && t <= 0) o.fail("k = " + std::to_string(k) + " gives " + to_string(t));
  }
  if (fixed_point_count_power(c, 2).lefschetz != 344) o.fail("k = 2 is not 344");
  if (trace_of_power_recurrence(charpoly(mult_matrix(eta_pow(6))), 2) != 322) o.fail("tr(eta^12) != 322");
  if (!odd_nonzero.empty()) {
    std::string list;
    for (std::size_t i = 0; i < odd_nonzero.size() && i < 3; ++i) list += (i ? " " : "") + odd_nonzero[i];
    o.fail("odd k with nonzero Lefschetz number: " + std::to_string(odd_nonzero.size()) + " of 10 (" + list + " ...)");
  }
  if (o.pass) o.detail = "odd k -> 0, even k > 0, k = 2 -> 344";
  return o;
}

Outcome representation_oracle() {
  Outcome o;
  constexpr long kBox = 100, kTarget = 200;
  long decisions = 0;
  for (long q = -5; q <= 5; ++q) {
    if (q == 0) continue;
    // values hit by nonzero vectors in the box
    std::set<long> hit;
    for (long a = -kBox; a <= kBox; ++a) {
      for (long b = -kBox; b <= kBox; ++b) {
        if (a == 0 && b == 0) continue;
        const long v = 2 * q * a * a + 2 * q * a * b - 2 * q * b * b;
        if (std::labs(v) <= kTarget) hit.insert(v);
      }
    }
    const GramForm g = golden_family(q);
    for (long c = -kTarget; c <= kTarget; ++c) {
      const Representation r = represents(g, c);
      ++decisions;
      const bool brute = hit.count(c) > 0;
      if (r.status == RepresentationStatus::Unknown) {
        o.fail("undecided at q = " + std::to_string(q) + ", c = " + std::to_string(c));
      } else if ((r.status == RepresentationStatus::Represented) != brute) {
        o.fail("disagreement at q = " + std::to_string(q) + ", c = " + std::to_string(c));
      }
      if (r.witness && eval_form(g, *r.witness, *r.witness) != c) o.fail("bad witness");
    }
  }
  if (o.pass) o.detail = std::to_string(decisions) + " decisions agree";
  return o;
}

Outcome holomorphic_cases() {
  Outcome o;
  auto close = [](std::complex<double> a, std::complex<double> b) { return std::abs(a - b) <= 1e-10; };
  if (!close(holomorphic_lefschetz(SurfaceHodgeCase::rational_or_enriques()), 1.0)) o.fail("rational/Enriques");
  if (!close(holomorphic_lefschetz(SurfaceHodgeCase::k3(-1.0)), 0.0)) o.fail("K3 alpha = -1");
  if (!close(holomorphic_lefschetz(SurfaceHodgeCase::k3(1.0)), 2.0)) o.fail("K3 alpha = 1");
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 1000; ++i) {
    std::complex<double> alpha = std::polar(1.0, angle(gen));
    std::complex<double> beta = std::polar(1.0, angle(gen));
    if (i % 4 == 0) alpha = 1.0;
    if (i % 7 == 0) beta = 1.0;
    const auto h = holomorphic_lefschetz(SurfaceHodgeCase::torus(alpha, beta));
    if (!close(h, (1.0 - std::conj(alpha)) * (1.0 - std::conj(beta)))) o.fail("torus formula");
    const bool has_one = alpha == 1.0 || beta == 1.0;
    if ((std::abs(h) <= 1e-10) != has_one) o.fail("torus vanishing");
  }
  if (o.pass) o.detail = "1000 torus pairs";
  return o;
}

Outcome blowup_invariance() {
  Outcome o;
  const K3Model m = K3Model::create(golden_family(2), mult_matrix(eta_pow(6)), -1);
  const double base = dynamical_degree(m);
  std::mt19937_64 gen(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> perm(std::uniform_int_distribution<int>(1, 8)(gen));
    for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = static_cast<int>(j);
    std::shuffle(perm.begin(), perm.end(), gen);
    if (blowup_extension(m, perm).dynamical_degree != base) o.fail("dynamical degree changed");
  }
  if (blowup_extension(m, {1, 0}).lefschetz != 0) o.fail("2-point swap Lefschetz number is not 0");
  if (o.pass) o.detail = "100 permutations, swap Lefschetz 0";
  return o;
}

struct Process {
  int status;
  std::string out;
};

Process run_tool(const std::string& command) {
  Process p{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return p;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return p;
}

Outcome cli_determinism(const std::string& tool) {
  Outcome o;
  if (tool.empty()) {
    o.fail("no tool path given");
    return o;
  }
  const std::string scan = "'" + tool + "' scan --q-min -5 --q-max 5 --format json";
  const Process a = run_tool(scan), b = run_tool(scan);
  if (a.status != 0 || b.status != 0) o.fail("scan exit status " + std::to_string(a.status));
  if (a.out.empty() || a.out != b.out) o.fail("scan output differs between runs");
  const Process c = run_tool("'" + tool + "' certify --q 3 2>/dev/null");
  if (c.status != 2) o.fail("certify --q 3 exit status " + std::to_string(c.status));
  if (o.pass) o.detail = std::to_string(a.out.size()) + " identical bytes; certify --q 3 exits 2";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tool = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "fibonacci power identity", 1.0, fibonacci_powers},
      {2, "characteristic polynomials", 0.0, characteristic_polynomials},
      {3, "family classification sweep", 5.0, family_sweep},
      {4, "q = 2 certificate", 0.0, paper_witness},
      {5, "power Lefschetz numbers", 0.0, power_lefschetz},
      {6, "representation vs brute force", 30.0, representation_oracle},
      {7, "holomorphic Lefschetz cases", 0.0, holomorphic_cases},
      {8, "blow-up invariance", 0.0, blowup_invariance},
      {9, "CLI determinism", 0.0, [&] { return cli_determinism(tool); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
      o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    failures += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  ["
              << timing << "]  " << o.detail << '\n';
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
