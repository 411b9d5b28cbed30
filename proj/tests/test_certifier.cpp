#include <cmath>

#include "doctest.h"
#include "goldenk3/certifier.hpp"
#include "goldenk3/golden_ring.hpp"

using namespace goldenk3;

TEST_CASE("certify(2) passes every check") {
  const Certificate c = certify(2);
  REQUIRE(c.checks.size() == 8);
  for (std::size_t i = 0; i < c.checks.size(); ++i) {
    CHECK(c.checks[i].id == "C" + std::to_string(i + 1));
    CHECK_MESSAGE(c.checks[i].pass, c.checks[i].id << ": " << c.checks[i].evidence);
  }
  CHECK(c.verdict());
  CHECK(c.first_failure() == nullptr);
  CHECK(c.derived.charpoly == CharPoly{18, 1});
  CHECK(c.derived.lefschetz_k1 == Integer(0));
  CHECK(c.derived.disc_invariants == std::vector<Integer>{2, 10});
  CHECK(c.derived.entropy == doctest::Approx(2.8872709503576207).epsilon(1e-14));
  CHECK(c.derived.entropy == doctest::Approx(6.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
  CHECK(c.input.family_q == Integer(2));
  CHECK_FALSE(c.derived.projectivity_note.empty());
}

TEST_CASE("certify(1) fails only the representation check") {
  const Certificate c = certify(1);
  CHECK_FALSE(c.verdict());
  for (const auto& check : c.checks) {
    CHECK_MESSAGE(check.pass == (check.id != "C4"), check.id << ": " << check.evidence);
  }
  const std::string& ev = c.check("C4").evidence;
  CHECK(ev.find("b(x,x) = 2 at x = (1, 0)") != std::string::npos);
  CHECK(ev.find("b(x,x) = -2 at x = (0, 1)") != std::string::npos);
}

TEST_CASE("certify(3) fails only the discriminant check") {
  const Certificate c = certify(3);
  CHECK_FALSE(c.verdict());
  for (const auto& check : c.checks) {
    CHECK_MESSAGE(check.pass == (check.id != "C5"), check.id << ": " << check.evidence);
  }
  CHECK(c.first_failure()->id == "C5");
  CHECK(c.check("C5").evidence.find("not in N") != std::string::npos);
}

TEST_CASE("certify rejects degenerate input") {
  CHECK_THROWS_AS(certify(0), std::invalid_argument);
  CHECK_THROWS_AS(certify_explicit({2, 2, 2}, LatticeMap::identity(), -1), std::invalid_argument);
  CHECK_THROWS_AS(certify_explicit(golden_family(2), LatticeMap::identity(), 3),
                  std::invalid_argument);
}

TEST_CASE("certify_explicit reproduces certify field for field") {
  for (long q : {-3L, -2L, 1L, 2L, 5L}) {
    CHECK(certify_explicit(golden_family(q), mult_matrix(eta_pow(6)), -1) == certify(q));
  }
}

TEST_CASE("certify_explicit reports non-isometries through C3") {
  const Certificate c = certify_explicit(golden_family(2), mult_matrix(eta_pow(1)), -1);
  CHECK_FALSE(c.check("C3").pass);
  CHECK(c.check("C3").evidence.find("lambda = -1") != std::string::npos);
  CHECK_FALSE(c.check("C5").pass);
  CHECK_FALSE(c.check("C7").pass);
  CHECK_FALSE(c.derived.lefschetz_k1.has_value());
  // checks that do not need an isometry still ran
  CHECK(c.check("C1").pass);
  CHECK(c.check("C4").pass);

  const Certificate shear = certify_explicit(golden_family(2), LatticeMap{1, 1, 0, 1}, -1);
  CHECK(shear.check("C3").evidence.find("not an integer multiple") != std::string::npos);
}

TEST_CASE("C3 distinguishes orientation and negative eigenvalues") {
  // eta^-6 preserves the positive cone as well
  CHECK(certify_explicit(golden_family(2), mult_matrix(eta_pow(-6)), -1).verdict());
  // -eta^6 is an isometry with both eigenvalues negative
  const Certificate neg = certify_explicit(golden_family(2), mult_matrix(-eta_pow(6)), -1);
  CHECK_FALSE(neg.check("C3").pass);
  CHECK(neg.check("C3").evidence.find("trace = -18") != std::string::npos);
  // identity: fixed curves and zero entropy
  const Certificate id = certify_explicit(golden_family(2), LatticeMap::identity(), -1);
  CHECK_FALSE(id.check("C3").pass);
  CHECK_FALSE(id.check("C6").pass);
  CHECK_FALSE(id.check("C7").pass);
  CHECK_FALSE(id.check("C8").pass);
  CHECK(id.derived.lefschetz_k1 == Integer(-16));
}

TEST_CASE("eps = +1 asks for the identity on the discriminant group") {
  const Certificate c = certify_explicit(golden_family(2), mult_matrix(eta_pow(6)), 1);
  CHECK_FALSE(c.check("C5").pass);
  CHECK(c.derived.lefschetz_k1 == Integer(2 + 18 + 20));
  CHECK_FALSE(c.check("C7").pass);
}

TEST_CASE("family classification over q in [-20, 20]") {
  for (long q = -20; q <= 20; ++q) {
    if (q == 0) continue;
    const Certificate c = certify(q);
    const long aq = std::labs(q);
    REQUIRE(c.verdict() == (aq == 2));
    REQUIRE(c.check("C5").pass == (aq <= 2));
    REQUIRE(c.check("C4").pass == (aq != 1));
    REQUIRE(c.check("C1").pass);
    REQUIRE(c.check("C2").pass);
    REQUIRE(c.check("C3").pass);
    REQUIRE(c.check("C6").pass);
    REQUIRE(c.check("C7").pass);
    REQUIRE(c.check("C8").pass);
  }
}

TEST_CASE("family_scan") {
  const auto rows = family_scan(-3, 3);
  REQUIRE(rows.size() == 6);
  std::vector<long> passing;
  for (const auto& r : rows) {
    if (r.verdict) passing.push_back(r.q.get_si());
  }
  CHECK(passing == std::vector<long>{-2, 2});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].q < rows[i].q);

  const ScanRow& q2 = rows[4];
  CHECK(q2.q == 2);
  CHECK(q2.disc_factors == std::vector<Integer>{2, 10});
  CHECK(q2.even);
  CHECK(q2.signature == Signature::Hyperbolic);

  const ScanRow& qm1 = rows[2];
  CHECK(qm1.q == -1);
  CHECK(qm1.minus_id);
  CHECK(qm1.represents_minus2);
  CHECK(qm1.represents_plus2);
  CHECK_FALSE(qm1.represents_zero);

  CHECK(family_scan(0, 0).empty());
  CHECK_THROWS_AS(family_scan(3, -3), std::invalid_argument);
  // parallel evaluation does not change the result
  CHECK(family_scan(-12, 12, 1) == family_scan(-12, 12, 8));
}

TEST_CASE("fixed_point_count_power") {
  const Certificate c = certify(2);
  const PowerFixedPoints k1 = fixed_point_count_power(c, 1);
  CHECK(k1.lefschetz == 0);
  CHECK(k1.no_fixed_curves);
  CHECK_FALSE(k1.has_fixed_points);
  CHECK(k1.note == "g^1 is free");

  const PowerFixedPoints k2 = fixed_point_count_power(c, 2);
  CHECK(k2.lefschetz == 344);
  CHECK(k2.has_fixed_points);
  CHECK(k2.note.find("g^2 has fixed points") == 0);

  const PowerFixedPoints k3 = fixed_point_count_power(c, 3);
  CHECK(k3.lefschetz == 5760);
  CHECK(k3.has_fixed_points);

  for (long k = 2; k <= 20; k += 2) REQUIRE(fixed_point_count_power(c, k).lefschetz > 0);

  CHECK_THROWS_AS(fixed_point_count_power(certify(3), 1), std::invalid_argument);
  CHECK_THROWS_AS(fixed_point_count_power(c, 0), std::invalid_argument);
}
