#include "resumkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "resumkit/fixtures.hpp"
#include "resumkit/phi4.hpp"
#include "resumkit/positivity.hpp"
#include "resumkit/sampling.hpp"
#include "resumkit/symanzik.hpp"

namespace resumkit {

Multigraph graph_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw std::runtime_error("parse error: expected object with 'vertices' and 'edges'");
  if (!doc["vertices"].is_array() || !doc["edges"].is_array())
    throw std::runtime_error("parse error: 'vertices' and 'edges' must be arrays");

  std::vector<std::string> vertices;
  for (const Json& v : doc["vertices"]) {
    if (!v.is_string()) throw std::runtime_error("parse error: vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<Edge> edges;
  for (const Json& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("ends") || !e["ends"].is_array() ||
        e["ends"].size() != 2 || !e["id"].is_string() || !e["ends"][0].is_string() ||
        !e["ends"][1].is_string())
      throw std::runtime_error("parse error: edges need an 'id' and two 'ends'");
    edges.push_back({e["id"].get<std::string>(), e["ends"][0].get<std::string>(),
                     e["ends"][1].get<std::string>()});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::runtime_error("parse error in " + path + ": " + err.what());
  }
  try {
    return graph_from_json(doc);
  } catch (const std::exception& err) {
    throw std::runtime_error(path + ": " + err.what());
  }
}

Json graph_to_json(const Multigraph& g) {
  Json doc;
  doc["vertices"] = g.vertices();
  doc["edges"] = Json::array();
  for (const Edge& e : g.edges())
    doc["edges"].push_back({{"id", e.label}, {"ends", {e.end_a, e.end_b}}});
  return doc;
}

namespace {

std::string bigint_str(const BigInt& n) { return n.str(); }

void require_seed(const RunConfig& cfg) {
  if (!cfg.has_seed) throw std::invalid_argument("a --seed is required for sampling commands");
  if (cfg.samples == 0) throw std::invalid_argument("--samples must be positive");
}

SpanningTree require_tree(const RunConfig& cfg) {
  if (cfg.tree.empty() && cfg.command != "psd-check")
    throw std::invalid_argument("--tree is required");
  return normalized_tree(cfg.tree);
}

Json series_json(const phi4::AmplitudeSeries& s) {
  Json out = Json::object();
  for (const auto& [order, coeff] : s) out[std::to_string(order)] = fraction_str(coeff);
  return out;
}

Json run_weights(const RunConfig& cfg) {
  const Multigraph g = load_graph(cfg.input_path);
  Json payload;
  payload["method"] = cfg.method;
  if (cfg.method == "mc") {
    require_seed(cfg);
    payload["samples"] = cfg.samples;
    payload["seed"] = cfg.seed;
    Json table = Json::object();
    for (const auto& [key, est] : weight_table_mc(g, cfg.samples, cfg.seed, cfg.threads))
      table[key] = {{"estimate", est.estimate}, {"std_error", est.std_error}};
    payload["table"] = std::move(table);
    return payload;
  }
  const WeightMethod method = parse_weight_method(cfg.method);
  Json table = Json::object();
  Rational sum = 0;
  for (const auto& [key, w] : weight_table(g, method, cfg.caps, cfg.threads)) {
    table[key] = {{"weight", fraction_str(w.value)},
                  {"sector_count", bigint_str(w.sector_count)},
                  {"total_sectors", bigint_str(w.total_sectors)}};
    sum += w.value;
  }
  payload["table"] = std::move(table);
  payload["sum"] = fraction_str(sum);
  return payload;
}

Json run_sectors(const RunConfig& cfg) {
  const Multigraph g = load_graph(cfg.input_path);
  const SpanningTree t = require_tree(cfg);
  const std::vector<Sector> sectors = sectors_for_tree(g, t, cfg.caps);
  const BigInt total = factorial(unsigned(g.edge_count()));
  Json payload;
  payload["tree"] = t;
  payload["count"] = bigint_str(BigInt(sectors.size()));
  payload["total_sectors"] = bigint_str(total);
  payload["weight"] = fraction_str(Rational(BigInt(sectors.size()), total));
  payload["sectors"] = sectors;
  return payload;
}

Json matrix_json(const WeakeningMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(fraction_str(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json run_psd_check(const RunConfig& cfg) {
  const Multigraph g = load_graph(cfg.input_path);
  if (cfg.tree.empty()) throw std::invalid_argument("--tree is required");
  const SpanningTree t = normalized_tree(cfg.tree);
  Json payload;
  payload["tree"] = t;

  if (!cfg.w.empty()) {
    const WeakeningMatrix m = build_weakening_matrix(g, t, cfg.w);
    const PsdReport report = check_psd(m);
    const BlockPartition bp = block_decomposition(g, t, cfg.w);
    const WeakeningMatrix rebuilt = reconstruct_from_blocks(bp, g.vertices());
    Rational residual = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) {
        const Rational diff = abs(m.entries[i][j] - rebuilt.entries[i][j]);
        residual = std::max(residual, diff);
      }

    Json w_echo = Json::object();
    for (const auto& [label, value] : cfg.w) w_echo[label] = fraction_str(value);
    payload["w"] = std::move(w_echo);
    payload["vertices"] = m.vertices;
    payload["matrix"] = matrix_json(m);
    payload["psd"] = report.psd;
    payload["min_eigenvalue"] = report.min_eigenvalue;
    payload["sigma_order"] = bp.sigma_order;
    Json coeffs = Json::array();
    for (const Rational& c : bp.coefficients) coeffs.push_back(fraction_str(c));
    payload["coefficients"] = std::move(coeffs);
    payload["partitions"] = bp.partitions;
    payload["reconstruction_residual"] = fraction_str(residual);
    return payload;
  }

  require_seed(cfg);
  payload["samples"] = cfg.samples;
  payload["seed"] = cfg.seed;
  double min_ev = 1.0;
  bool all_psd = true;
  for (std::uint64_t k = 0; k < cfg.samples; ++k) {
    std::mt19937_64 rng(stream_seed(cfg.seed, k));
    WeakeningVector w;
    for (const std::string& label : t) w[label] = Rational(u64_to_unit(rng()));
    const PsdReport report = check_psd(build_weakening_matrix(g, t, w));
    min_ev = std::min(min_ev, report.min_eigenvalue);
    all_psd = all_psd && report.psd;
  }
  payload["all_psd"] = all_psd;
  payload["min_eigenvalue"] = min_ev;
  return payload;
}

Json run_symanzik(const RunConfig& cfg) {
  const Multigraph g = load_graph(cfg.input_path);
  const SymanzikPolynomial u = symanzik_polynomial(g);
  std::map<std::string, Rational> ones;
  for (const Edge& e : g.edges()) ones[e.label] = 1;
  Json payload;
  payload["degree"] = u.degree;
  payload["monomial_count"] = u.monomials.size();
  payload["monomials"] = u.monomials;
  payload["value_at_ones"] = fraction_str(u.evaluate(ones));
  payload["matrix_tree_at_ones"] = fraction_str(spanning_tree_count_matrix_tree(g, ones));
  return payload;
}

Json run_amplitude(const RunConfig& cfg) {
  const Multigraph g = load_graph(cfg.input_path);
  require_seed(cfg);
  const ModelParams params{cfg.dimension, cfg.mass, 0.0};
  const McEstimate est =
      cfg.sector_decomposed
          ? amplitude_sector_decomposed(g, params, cfg.samples, cfg.seed, cfg.threads, cfg.caps)
          : amplitude_parametric(g, params, cfg.samples, cfg.seed, cfg.threads);
  Json payload;
  payload["dimension"] = cfg.dimension;
  payload["mass"] = cfg.mass;
  payload["sector_decomposed"] = cfg.sector_decomposed;
  payload["samples"] = cfg.samples;
  payload["seed"] = cfg.seed;
  payload["estimate"] = est.estimate;
  payload["std_error"] = est.std_error;
  return payload;
}

Json run_phi4(const RunConfig& cfg) {
  const phi4::LveResult res = phi4::lve_repack(cfg.order, cfg.vacuum_order_cap, cfg.threads);
  Json payload;
  payload["order"] = cfg.order;
  payload["totals"] = series_json(res.totals);
  payload["oracle"] = series_json(res.oracle);
  payload["match"] = res.totals == res.oracle;
  Json shapes = Json::object();
  for (const auto& [key, series] : res.by_tree_shape) shapes[key] = series_json(series);
  payload["by_tree_shape"] = std::move(shapes);
  Json pairs = Json::object();
  for (const auto& [key, series] : res.by_pair) pairs[key] = series_json(series);
  payload["by_pair"] = std::move(pairs);
  if (!cfg.lambda.empty()) {
    const Rational lambda = parse_fraction(cfg.lambda);
    payload["eval"] = {{"lambda", fraction_str(lambda)},
                       {"log_z_truncated", fraction_str(phi4::series_eval(res.totals, lambda))}};
  }
  return payload;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("expectation failed: " + what);
}

Json selftest_payload(const RunConfig& cfg) {
  const Multigraph eye = fixtures::g_eye();
  const SpanningTree t123{"l1", "l2", "l3"};
  const SpanningTree t125{"l1", "l2", "l5"};

  using Check = std::pair<std::string, std::function<void()>>;
  const std::vector<Check> checks{
      {"g_eye_weights_all_methods",
       [&] {
         for (const auto& [t, value, count] :
              {std::tuple{t123, Rational(1, 15), BigInt(48)},
               std::tuple{t125, Rational(11, 120), BigInt(66)}}) {
           const auto brute = weight_bruteforce(eye, t);
           const auto dc = weight_deletion_contraction(eye, t);
           const auto symbolic = weight_symbolic(eye, t);
           expect(brute.value == value && dc.value == value && symbolic.value == value,
                  "weight mismatch");
           expect(brute.sector_count == count && dc.sector_count == count &&
                      symbolic.sector_count == count,
                  "sector count mismatch");
         }
       }},
      {"g_eye_table_normalization",
       [&] {
         const auto table = weight_table(eye, WeightMethod::symbolic);
         expect(table.size() == 12, "expected 12 spanning trees");
         std::size_t small = 0, large = 0;
         Rational sum = 0;
         for (const auto& [key, w] : table) {
           sum += w.value;
           small += w.value == Rational(1, 15);
           large += w.value == Rational(11, 120);
         }
         expect(sum == 1 && small == 4 && large == 8, "4*(1/15) + 8*(11/120) = 1");
       }},
      {"simplex_integrals",
       [&] {
         expect(simplex_monomial_integral({3, 0, 0}) == Rational(1, 120), "1/120");
         expect(simplex_monomial_integral({1, 1, 1}) == Rational(1, 48), "1/48");
         expect(simplex_monomial_integral({1, 2, 0}) == Rational(1, 60), "1/60");
       }},
      {"kruskal_leading_tree",
       [&] {
         const OrderedTree ot =
             kruskal_leading_tree(eye, {"l1", "l3", "l5", "l6", "l2", "l4"});
         expect(ot.tree == t123, "leading tree");
         expect((ot.pick_order == std::vector<std::string>{"l1", "l3", "l2"}), "pick order");
       }},
      {"psd_block_decomposition",
       [&] {
         const Multigraph path({"A", "B", "C", "D"},
                               {{"p1", "A", "B"}, {"p2", "B", "C"}, {"p3", "C", "D"}});
         const WeakeningVector w{
             {"p1", Rational(1, 2)}, {"p2", Rational(3, 10)}, {"p3", Rational(4, 5)}};
         const SpanningTree t{"p1", "p2", "p3"};
         const WeakeningMatrix m = build_weakening_matrix(path, t, w);
         expect(m.at(0, 2) == Rational(3, 10) && m.at(0, 3) == Rational(3, 10) &&
                    m.at(0, 1) == Rational(1, 2) && m.at(2, 3) == Rational(4, 5),
                "path minima");
         const PsdReport report = check_psd(m);
         expect(report.psd && report.min_eigenvalue > 0, "positive definite");
         const BlockPartition bp = block_decomposition(path, t, w);
         expect((bp.sigma_order == std::vector<std::string>{"p3", "p1", "p2"}), "sigma order");
         const WeakeningMatrix rebuilt = reconstruct_from_blocks(bp, path.vertices());
         expect(rebuilt.entries == m.entries, "exact reconstruction");
       }},
      {"symanzik_g_eye",
       [&] {
         const SymanzikPolynomial u = symanzik_polynomial(eye);
         expect(u.monomials.size() == 12 && u.degree == 3, "12 degree-3 monomials");
         std::map<std::string, Rational> ones;
         for (const Edge& e : eye.edges()) ones[e.label] = 1;
         expect(u.evaluate(ones) == 12, "U(1) = 12");
         expect(spanning_tree_count_matrix_tree(eye, ones) == 12, "matrix-tree 12");
       }},
      {"amplitude_dimension_zero",
       [&] {
         const McEstimate est =
             amplitude_parametric(fixtures::bubble(), {0.0, 2.0, 0.0}, 16, 1);
         expect(est.estimate == 0.0625 && est.std_error == 0.0, "m^{-2E} exactly");
       }},
      {"logz_oracle",
       [&] {
         const phi4::AmplitudeSeries l = phi4::logz_oracle(3);
         expect(l.at(1) == Rational(-3, 2) && l.at(2) == 12 && l.at(3) == -198,
                "log Z coefficients");
       }},
      {"lve_repack_order_2",
       [&] {
         const phi4::LveResult res = phi4::lve_repack(2, 3, cfg.threads);
         expect(res.totals == res.oracle, "repacked totals equal log Z");
       }},
  };

  Json results = Json::array();
  bool all_pass = true;
  for (const auto& [name, fn] : checks) {
    Json entry;
    entry["name"] = name;
    try {
      fn();
      entry["pass"] = true;
    } catch (const std::exception& err) {
      entry["pass"] = false;
      entry["error"] = err.what();
      all_pass = false;
    }
    results.push_back(std::move(entry));
  }
  Json payload;
  payload["checks"] = std::move(results);
  payload["all_pass"] = all_pass;
  return payload;
}

Json config_echo(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  if (!cfg.input_path.empty()) c["input"] = cfg.input_path;
  if (cfg.command == "weights") c["method"] = cfg.method;
  if (!cfg.tree.empty()) c["tree"] = cfg.tree;
  if (cfg.command == "amplitude") {
    c["dimension"] = cfg.dimension;
    c["mass"] = cfg.mass;
    c["sector_decomposed"] = cfg.sector_decomposed;
  }
  if (cfg.has_seed) {
    c["samples"] = cfg.samples;
    c["seed"] = cfg.seed;
  }
  if (cfg.command == "phi4-lve") {
    c["order"] = cfg.order;
    if (!cfg.lambda.empty()) c["lambda"] = cfg.lambda;
  }
  c["threads"] = cfg.threads;
  c["format"] = cfg.format;
  return c;
}

}  // namespace

Json run(const RunConfig& cfg) {
  Json doc;
  doc["schema"] = "resumkit/1";
  doc["command"] = cfg.command;
  doc["config"] = config_echo(cfg);
  if (cfg.command == "weights")
    doc["payload"] = run_weights(cfg);
  else if (cfg.command == "sectors")
    doc["payload"] = run_sectors(cfg);
  else if (cfg.command == "psd-check")
    doc["payload"] = run_psd_check(cfg);
  else if (cfg.command == "symanzik")
    doc["payload"] = run_symanzik(cfg);
  else if (cfg.command == "amplitude")
    doc["payload"] = run_amplitude(cfg);
  else if (cfg.command == "phi4-lve")
    doc["payload"] = run_phi4(cfg);
  else if (cfg.command == "selftest")
    doc["payload"] = selftest_payload(cfg);
  else
    throw std::invalid_argument("unknown command: " + cfg.command);
  return doc;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_csv(const Json& doc) {
  const Json& payload = doc.at("payload");
  std::ostringstream out;
  if (payload.contains("table")) {
    const Json& table = payload["table"];
    bool header = false;
    for (const auto& [tree, row] : table.items()) {
      if (!header) {
        out << "tree";
        for (const auto& [col, value] : row.items()) out << ',' << csv_escape(col);
        out << '\n';
        header = true;
      }
      out << csv_escape(tree);
      for (const auto& [col, value] : row.items()) out << ',' << csv_escape(scalar_str(value));
      out << '\n';
    }
    return out.str();
  }
  if (payload.contains("sectors")) {
    for (const Json& sector : payload["sectors"]) {
      for (std::size_t i = 0; i < sector.size(); ++i)
        out << (i ? "," : "") << csv_escape(sector[i].get<std::string>());
      out << '\n';
    }
    return out.str();
  }
  if (payload.contains("monomials")) {
    for (const Json& monomial : payload["monomials"]) {
      for (std::size_t i = 0; i < monomial.size(); ++i)
        out << (i ? "," : "") << csv_escape(monomial[i].get<std::string>());
      out << '\n';
    }
    return out.str();
  }
  // Fallback: key,value rows over scalar payload fields.
  for (const auto& [key, value] : payload.items())
    if (!value.is_structured()) out << csv_escape(key) << ',' << csv_escape(scalar_str(value)) << '\n';
  return out.str();
}

}  // namespace

std::string render(const Json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "csv") return render_csv(doc);
  throw std::invalid_argument("unknown format: " + format);
}

}  // namespace resumkit
