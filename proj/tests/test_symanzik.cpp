#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "resumkit/fixtures.hpp"
#include "resumkit/symanzik.hpp"

using namespace resumkit;

namespace {

std::map<std::string, Rational> random_alpha(const Multigraph& g, std::mt19937_64& rng) {
  std::map<std::string, Rational> alpha;
  std::uniform_int_distribution<int> num(1, 40);
  std::uniform_int_distribution<int> den(1, 12);
  for (const Edge& e : g.edges()) alpha[e.label] = Rational(num(rng), den(rng));
  return alpha;
}

std::map<std::string, Rational> ones(const Multigraph& g) {
  std::map<std::string, Rational> alpha;
  for (const Edge& e : g.edges()) alpha[e.label] = 1;
  return alpha;
}

}  // namespace

TEST_CASE("bubble and tree polynomials") {
  const SymanzikPolynomial u_bubble = symanzik_polynomial(fixtures::bubble());
  CHECK(u_bubble.degree == 1);
  CHECK(u_bubble.monomials == std::vector<std::vector<std::string>>{{"l1"}, {"l2"}});
  CHECK(u_bubble.evaluate({{"l1", Rational(1, 3)}, {"l2", Rational(1, 4)}}) == Rational(7, 12));

  const Multigraph star({"A", "B", "C"}, {{"e1", "A", "B"}, {"e2", "A", "C"}});
  const SymanzikPolynomial u_tree = symanzik_polynomial(star);
  CHECK(u_tree.degree == 0);
  CHECK(u_tree.monomials == std::vector<std::vector<std::string>>{{}});
  CHECK(u_tree.evaluate(ones(star)) == 1);
}

TEST_CASE("self-loop edges appear in every monomial") {
  const SymanzikPolynomial u = symanzik_polynomial(fixtures::tadpole());
  CHECK(u.degree == 1);
  CHECK(u.monomials == std::vector<std::vector<std::string>>{{"l1"}});

  Multigraph looped({"A", "B"}, {{"l1", "A", "B"}, {"l2", "A", "B"}, {"l3", "B", "B"}});
  const SymanzikPolynomial u2 = symanzik_polynomial(looped);
  CHECK(u2.degree == 2);
  CHECK(u2.monomials ==
        std::vector<std::vector<std::string>>{{"l1", "l3"}, {"l2", "l3"}});
}

TEST_CASE("example graph has twelve cubic monomials") {
  const Multigraph eye = fixtures::g_eye();
  const SymanzikPolynomial u = symanzik_polynomial(eye);
  CHECK(u.degree == 3);
  CHECK(u.monomials.size() == 12);
  const std::set<std::vector<std::string>> distinct(u.monomials.begin(), u.monomials.end());
  CHECK(distinct.size() == 12);
  for (const auto& mono : u.monomials) CHECK(mono.size() == 3);
  CHECK(u.evaluate(ones(eye)) == 12);
  CHECK(symanzik_eval_matrix_tree(eye, ones(eye)) == 12);
}

TEST_CASE("matrix-tree counts spanning trees at alpha = 1") {
  CHECK(spanning_tree_count_matrix_tree(fixtures::triangle(), ones(fixtures::triangle())) == 3);
  CHECK(spanning_tree_count_matrix_tree(fixtures::g_eye(), ones(fixtures::g_eye())) == 12);
  CHECK(spanning_tree_count_matrix_tree(fixtures::cycle(6), ones(fixtures::cycle(6))) == 6);
  // self-loop contributes nothing
  CHECK(spanning_tree_count_matrix_tree(fixtures::tadpole(), ones(fixtures::tadpole())) == 1);
  const Multigraph split({"A", "B", "C"}, {{"e1", "A", "B"}});
  CHECK(spanning_tree_count_matrix_tree(split, ones(split)) == 0);
}

TEST_CASE("complement transform matches direct evaluation") {
  std::mt19937_64 rng(99);
  const Multigraph graphs[] = {fixtures::g_eye(), fixtures::bubble(), fixtures::triangle(),
                               fixtures::cycle(5), fixtures::tadpole()};
  for (const Multigraph& g : graphs) {
    const SymanzikPolynomial u = symanzik_polynomial(g);
    for (int trial = 0; trial < 4; ++trial) {
      const auto alpha = random_alpha(g, rng);
      CHECK(u.evaluate(alpha) == symanzik_eval_matrix_tree(g, alpha));
    }
  }
}

TEST_CASE("exhaustive agreement on small connected multigraphs") {
  std::mt19937_64 rng(123);
  for (const Multigraph& g : fixtures::connected_multigraphs_up_to_iso(5)) {
    const SymanzikPolynomial u = symanzik_polynomial(g);
    std::size_t loops = 0;
    for (const Edge& e : g.edges())
      if (e.end_a == e.end_b) ++loops;
    CHECK(u.degree == g.edges().size() - g.vertices().size() + 1);
    for (const auto& mono : u.monomials) CHECK(mono.size() == u.degree);
    // tree count = number of monomials after stripping the forced loop factors
    CHECK(Rational(static_cast<int>(u.monomials.size())) ==
          spanning_tree_count_matrix_tree(g, ones(g)));
    CHECK(u.evaluate(ones(g)) == Rational(static_cast<int>(u.monomials.size())));
    const auto alpha = random_alpha(g, rng);
    CHECK(u.evaluate(alpha) == symanzik_eval_matrix_tree(g, alpha));
  }
}

TEST_CASE("homogeneity and multilinearity") {
  const Multigraph eye = fixtures::g_eye();
  const SymanzikPolynomial u = symanzik_polynomial(eye);
  std::mt19937_64 rng(7);
  auto alpha = random_alpha(eye, rng);
  const Rational scale(5, 3);
  auto scaled = alpha;
  for (auto& [label, value] : scaled) value *= scale;
  CHECK(u.evaluate(scaled) == scale * scale * scale * u.evaluate(alpha));

  // linear in each variable: f(t) - f(0) is proportional to t
  auto at = [&](const std::string& label, const Rational& t) {
    auto a = alpha;
    a[label] = t;
    return u.evaluate(a);
  };
  for (const Edge& e : eye.edges()) {
    const Rational f0 = at(e.label, 0), f1 = at(e.label, 1), f2 = at(e.label, 2);
    CHECK(f2 - f1 == f1 - f0);
  }
}

TEST_CASE("amplitude at D = 0 is exact") {
  const ModelParams params{0.0, 2.0, 0.0};
  const Multigraph bubble = fixtures::bubble();
  const McEstimate plain = amplitude_parametric(bubble, params, 1 << 12, 11);
  const McEstimate sectors = amplitude_sector_decomposed(bubble, params, 1 << 12, 11);
  const double exact = std::pow(2.0, -4.0);  // m^{-2E}
  CHECK(plain.estimate == doctest::Approx(exact).epsilon(1e-15));
  CHECK(plain.std_error == 0.0);
  CHECK(sectors.estimate == doctest::Approx(exact).epsilon(1e-15));
  CHECK(sectors.std_error == 0.0);
}

TEST_CASE("bubble amplitude matches the gamma closed form") {
  // int_0^inf t^{1 - D/2} e^{-m^2 t} dt = Gamma(2 - D/2) m^{D - 4}
  const ModelParams params{1.0, 1.0, 0.0};
  const double target = std::tgamma(1.5);  // = sqrt(pi)/2 at D = 1, m = 1
  const McEstimate est = amplitude_parametric(fixtures::bubble(), params, 1 << 18, 42);
  CHECK(est.std_error > 0);
  CHECK(std::abs(est.estimate - target) < 4 * est.std_error);
  const McEstimate sec = amplitude_sector_decomposed(fixtures::bubble(), params, 1 << 14, 43);
  CHECK(std::abs(sec.estimate - target) < 4 * sec.std_error);
}

TEST_CASE("sector decomposition agrees with the plain estimator") {
  const ModelParams params{1.0, 1.0, 0.0};
  const Multigraph eye = fixtures::g_eye();
  const McEstimate plain = amplitude_parametric(eye, params, 1 << 13, 5);
  const McEstimate sectors = amplitude_sector_decomposed(eye, params, 1 << 13, 6);
  const double sigma = std::hypot(plain.std_error, sectors.std_error);
  CHECK(std::abs(plain.estimate - sectors.estimate) < 4 * sigma);
  // at equal sample counts, averaging over sectors must not inflate the
  // variance (U_eye is nearly edge-symmetric, so the reduction itself is tiny)
  CHECK(sectors.std_error < plain.std_error * 1.05);

  // when U depends on a single edge variable, sector averaging symmetrizes
  // over all three draws and cuts the variance by exactly 3
  const Multigraph lollipop({"A", "B", "C"},
                            {{"e1", "A", "B"}, {"e2", "B", "C"}, {"e3", "C", "C"}});
  const ModelParams heavy{0.8, 1.0, 0.0};
  const McEstimate p2 = amplitude_parametric(lollipop, heavy, 1 << 14, 15);
  const McEstimate s2 = amplitude_sector_decomposed(lollipop, heavy, 1 << 14, 16);
  CHECK(std::abs(p2.estimate - s2.estimate) < 4 * std::hypot(p2.std_error, s2.std_error));
  CHECK(s2.std_error < 0.75 * p2.std_error);
}

TEST_CASE("amplitude falls as the dimension rises at small mass") {
  const Multigraph bubble = fixtures::bubble();
  std::vector<McEstimate> values;
  for (const double dim : {0.5, 1.0, 1.5}) {
    values.push_back(amplitude_parametric(bubble, ModelParams{dim, 0.5, 0.0}, 1 << 17, 21));
  }
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double gap = values[i].estimate - values[i + 1].estimate;
    CHECK(gap > 4 * std::hypot(values[i].std_error, values[i + 1].std_error));
  }
}

TEST_CASE("amplitude reruns are bitwise identical") {
  const ModelParams params{1.5, 2.0, 0.0};
  const Multigraph eye = fixtures::g_eye();
  const McEstimate a = amplitude_parametric(eye, params, 1 << 14, 77, 1);
  const McEstimate b = amplitude_parametric(eye, params, 1 << 14, 77, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
  const McEstimate c = amplitude_parametric(eye, params, 1 << 14, 78, 1);
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("amplitude input validation") {
  const Multigraph bubble = fixtures::bubble();
  CHECK_THROWS_AS(amplitude_parametric(bubble, ModelParams{2.0, 1.0, 0.0}, 16, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_parametric(bubble, ModelParams{-0.5, 1.0, 0.0}, 16, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(amplitude_parametric(bubble, ModelParams{1.0, 0.0, 0.0}, 16, 1),
                  std::invalid_argument);
  const Multigraph split({"A", "B", "C", "D"},
                         {{"e1", "A", "B"}, {"e2", "C", "D"}});
  CHECK_THROWS_AS(amplitude_parametric(split, ModelParams{1.0, 1.0, 0.0}, 16, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(symanzik_polynomial(split), std::invalid_argument);
  const Multigraph big = fixtures::cycle(10);
  CHECK_THROWS_AS(amplitude_sector_decomposed(big, ModelParams{1.0, 1.0, 0.0}, 16, 1),
                  CapExceeded);
}
