#include <doctest.h>

#include <cmath>
#include <set>

#include "resumkit/phi4.hpp"
#include "resumkit/tree_weights.hpp"

using namespace resumkit;
using namespace resumkit::phi4;

TEST_CASE("partition function coefficients") {
  const std::vector<Rational> z = z_coefficients(4);
  REQUIRE(z.size() == 5);
  CHECK(z[0] == 1);
  CHECK(z[1] == Rational(-3, 2));
  CHECK(z[2] == Rational(105, 8));
  CHECK(z[3] == Rational(-3465, 16));
  CHECK(z[4] == Rational(2027025, 384));
}

TEST_CASE("log Z oracle through order ten") {
  const AmplitudeSeries l = logz_oracle(10);
  CHECK(l.at(1) == Rational(-3, 2));
  CHECK(l.at(2) == 12);
  CHECK(l.at(3) == -198);
  CHECK(l.at(4) == 4896);
  CHECK(l.at(5) == Rational(-802224, 5));
  CHECK(l.at(6) == 6534144);
  CHECK(l.at(7) == Rational(BigInt(-2225068704LL), BigInt(7)));
  CHECK(l.at(8) == 17979936768LL);
  CHECK(l.at(9) == -1159510277376LL);
  CHECK(l.at(10) == Rational(BigInt("419888974528512"), 5));

  // alternating signs and super-geometric (factorial-type) growth
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK((n % 2 == 0 ? l.at(n) > 0 : l.at(n) < 0));
    if (n < 10) CHECK(abs(l.at(n + 1)) >= Rational(8 * n) * abs(l.at(n)));
  }
}

TEST_CASE("series truncation tracks the integral representation") {
  // Z(lambda) = (2 pi)^{-1/2} int exp(-phi^2/2 - lambda phi^4/2) dphi; the
  // alternating Taylor remainder is bounded by the first omitted term.
  const double lambda = 0.02;
  const std::vector<Rational> z = z_coefficients(5);
  double series = 0.0, power = 1.0;
  for (unsigned n = 0; n <= 4; ++n) {
    series += to_double(z[n]) * power;
    power *= lambda;
  }
  const double bound = std::abs(to_double(z[5])) * std::pow(lambda, 5);

  const double a = -10.0, b = 10.0;
  const int intervals = 20000;  // even
  const double h = (b - a) / intervals;
  auto f = [&](double phi) {
    return std::exp(-phi * phi / 2 - lambda * phi * phi * phi * phi / 2);
  };
  double quad = f(a) + f(b);
  for (int k = 1; k < intervals; ++k) quad += (k % 2 ? 4.0 : 2.0) * f(a + k * h);
  quad *= h / 3 / std::sqrt(2 * std::acos(-1.0));

  CHECK(std::abs(quad - series) < bound * 1.01 + 1e-12);
  CHECK(std::abs(quad - series) > bound * 0.5);  // bound is tight, not vacuous
}

TEST_CASE("vacuum graph generation by matching") {
  const std::vector<VacuumGraph> one = generate_vacuum_graphs(1);
  REQUIRE(one.size() == 3);
  for (const VacuumGraph& g : one) {
    CHECK(g.graph.vertices().size() == 1);
    CHECK(g.graph.edges().size() == 2);
    for (const Edge& e : g.graph.edges()) CHECK(e.end_a == e.end_b);
    CHECK(g.amplitude() == Rational(-1, 2));
  }
  const std::set<std::vector<std::pair<int, int>>> distinct{
      one[0].matching, one[1].matching, one[2].matching};
  CHECK(distinct.size() == 3);

  CHECK(generate_vacuum_graphs(2).size() == 105);
  CHECK(generate_vacuum_graphs(3).size() == 10395);
  CHECK_THROWS_AS(generate_vacuum_graphs(4), CapExceeded);
  CHECK_THROWS_AS(generate_vacuum_graphs(0), CapExceeded);
}

TEST_CASE("matching sums reproduce Z and log Z coefficients") {
  const std::vector<Rational> z = z_coefficients(3);
  const AmplitudeSeries l = logz_oracle(3);
  for (unsigned n = 1; n <= 3; ++n) {
    Rational all = 0, connected = 0;
    std::size_t connected_count = 0;
    for (const VacuumGraph& g : generate_vacuum_graphs(n)) {
      all += g.amplitude();
      if (g.graph.is_connected()) {
        connected += g.amplitude();
        ++connected_count;
      }
    }
    CHECK(all == z[n]);
    CHECK(connected == l.at(n));
    if (n == 2) CHECK(connected_count == 96);
    if (n == 3) CHECK(connected_count == 9504);
  }
}

TEST_CASE("intermediate-field extensions partition the amplitude") {
  for (const VacuumGraph& g : generate_vacuum_graphs(1)) {
    const std::vector<ExtendedGraph> exts = extensions(g);
    REQUIRE(exts.size() == 3);
    Rational sum = 0;
    for (const ExtendedGraph& e : exts) {
      CHECK(e.amplitude == Rational(-1, 6));
      CHECK(e.solid_edges.size() == 2);
      CHECK(e.dotted_edges == std::vector<std::pair<int, int>>{{0, 1}});
      sum += e.amplitude;
    }
    CHECK(sum == g.amplitude());
  }
  std::size_t total_exts = 0;
  for (const VacuumGraph& g : generate_vacuum_graphs(2)) {
    Rational sum = 0;
    for (const ExtendedGraph& e : extensions(g)) {
      sum += e.amplitude;
      ++total_exts;
    }
    CHECK(sum == g.amplitude());
  }
  CHECK(total_exts == 105 * 9);
}

TEST_CASE("solid cycles collapse to bold vertices") {
  std::size_t v1_loops = 0, v2_edges = 0;
  for (const VacuumGraph& g : generate_vacuum_graphs(1)) {
    for (const ExtendedGraph& e : extensions(g)) {
      const CollapsedGraph c = collapse(e);
      CHECK(c.amplitude == e.amplitude);
      CHECK(c.graph.edges().size() == 1);
      CHECK(c.graph.vertices().size() == c.cycle_count);
      if (c.cycle_count == 1) {
        CHECK(c.graph.edges()[0].end_a == c.graph.edges()[0].end_b);
        ++v1_loops;
      } else {
        REQUIRE(c.cycle_count == 2);
        ++v2_edges;
      }
    }
  }
  // per matching: one planar split gives two cycles, the other two give one
  CHECK(v1_loops == 6);
  CHECK(v2_edges == 3);

  for (const VacuumGraph& g : generate_vacuum_graphs(2)) {
    for (const ExtendedGraph& e : extensions(g)) {
      const CollapsedGraph c = collapse(e);
      CHECK(c.graph.edges().size() == 2);
      CHECK(c.graph.vertices().size() == c.cycle_count);
      CHECK(c.cycle_count >= 1);
      CHECK(c.cycle_count <= 4);
      CHECK(c.graph.is_connected() == g.graph.is_connected());
    }
  }
}

TEST_CASE("collapse rejects non-cycle solid structure") {
  ExtendedGraph bad;
  bad.order = 1;
  bad.pairing_choice = {0};
  bad.solid_edges = {{0, 1}, {0, 1}, {0, 0}};  // corner 0 has degree 4
  bad.dotted_edges = {{0, 1}};
  bad.amplitude = Rational(-1, 6);
  CHECK_THROWS_AS(collapse(bad), std::logic_error);
}

TEST_CASE("tree repacking reproduces log Z order by order") {
  const LveResult r = lve_repack(2);
  REQUIRE(r.totals.size() == 2);
  CHECK(r.totals.at(1) == r.oracle.at(1));
  CHECK(r.totals.at(2) == r.oracle.at(2));
  CHECK(r.totals.at(1) == Rational(-3, 2));
  CHECK(r.totals.at(2) == 12);

  // every transparency table refines the totals
  for (const auto& table : {r.by_tree_shape, r.by_pair}) {
    AmplitudeSeries sums;
    for (const auto& [key, series] : table)
      for (const auto& [order, coeff] : series) sums[order] += coeff;
    CHECK(sums == r.totals);
  }

  // the single-bold-vertex tree shape contributes at both orders
  const std::string point = canonical_key(Multigraph({"x"}, {}), {});
  REQUIRE(r.by_tree_shape.count(point) == 1);
  CHECK(r.by_tree_shape.at(point).count(1) == 1);
  CHECK(r.by_tree_shape.at(point).count(2) == 1);
  CHECK(r.by_tree_shape.size() >= 3);  // point, edge, path shapes at least
}

TEST_CASE("repacking is thread-count independent and reaches order three") {
  const LveResult serial = lve_repack(2, 3, 1);
  const LveResult parallel = lve_repack(2, 3, 4);
  CHECK(serial.totals == parallel.totals);
  CHECK(serial.by_pair == parallel.by_pair);

  const LveResult r3 = lve_repack(3, 3, 4);
  CHECK(r3.totals.at(3) == Rational(-198));
  CHECK(r3.totals.at(3) == r3.oracle.at(3));
  CHECK_THROWS_AS(lve_repack(4), CapExceeded);
}

TEST_CASE("series evaluation") {
  const AmplitudeSeries s{{1, Rational(-3, 2)}, {2, Rational(12)}};
  CHECK(series_eval(s, Rational(1, 10)) == Rational(-3, 100));
  CHECK(series_eval(s, Rational(0)) == 0);
  CHECK(series_eval({}, Rational(5)) == 0);
}
