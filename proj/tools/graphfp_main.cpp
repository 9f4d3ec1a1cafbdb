// graphfp: exact moments, cumulants and spectral densities of weighted-graph
// path algebras, from the command line. Every numeric table carries exact
// rationals next to decimal renderings so the output doubles as test fixtures.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphfp/cumulants.hpp"
#include "graphfp/fock.hpp"
#include "graphfp/graph.hpp"
#include "graphfp/noncrossing.hpp"
#include "graphfp/path_algebra.hpp"
#include "graphfp/spectral.hpp"

using namespace graphfp;
using nlohmann::json;

namespace {

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << text;
  }
};

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

Rational narayana_sum(const Rational& rho, int n) {
  Rational acc(0);
  for (int k = 1; k <= n; ++k) {
    Rational p(1);
    int exp = 2 * k - n;
    for (int i = 0; i < std::abs(exp); ++i) p *= rho;
    if (exp < 0) p = 1 / p;
    acc += Rational(nc::narayana(n, k)) * p;
  }
  return acc;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto dash = token.find('-');
    if (dash == std::string::npos) {
      throw std::invalid_argument("pair '" + token + "' is not of the form a-b");
    }
    pairs.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
  }
  if (pairs.empty()) throw std::invalid_argument("empty pair list");
  return pairs;
}

json p0_to_json(const P0Element& b) {
  json out = json::object();
  for (const auto& [v, c] : b.terms()) {
    out[b.graph()->vertex_id(v)] = to_string(c);
  }
  return out;
}

int cmd_validate(const std::string& graph_path, const Output& out, const std::string& format) {
  GraphPtr g;
  std::string load_error;
  try {
    g = load_graph_file(graph_path);
  } catch (const GraphError& e) {
    load_error = e.what();
  }
  if (format == "json") {
    json doc{{"schema", "graphfp.validate/1"}, {"file", graph_path}};
    if (g) {
      auto report = validate(*g);
      doc["valid"] = true;
      doc["normalized"] = report.normalized;
      doc["mu_square_sum"] = to_string(report.mu_square_sum);
      doc["vertices"] = g->vertex_count();
      doc["edges"] = g->edge_count();
    } else {
      doc["valid"] = false;
      doc["error"] = load_error;
    }
    out.write(doc.dump(2) + "\n");
    return g ? 0 : 1;
  }
  std::ostringstream text;
  if (!g) {
    text << "invalid: " << load_error << "\n";
    out.write(text.str());
    return 1;
  }
  auto report = validate(*g);
  text << "valid graph: " << g->vertex_count() << " vertices, " << g->edge_count() << " edges\n";
  text << (report.normalized ? "normalized: sum mu^2 = 1\n"
                             : "unnormalized: sum mu^2 = " + to_string(report.mu_square_sum) +
                                   " (traces are rescaled)\n");
  out.write(text.str());
  return 0;
}

int cmd_paths(const GraphPtr& g, int length, const std::string& from, const std::string& to,
              const Output& out) {
  std::optional<int> from_idx, to_idx;
  if (!from.empty()) from_idx = g->vertex_index(from);
  if (!to.empty()) to_idx = g->vertex_index(to);
  auto paths = enumerate_paths(*g, length, from_idx, to_idx);
  std::ostringstream csv;
  csv << "index,path,source,range\n";
  for (size_t i = 0; i < paths.size(); ++i) {
    csv << i << ",";
    if (paths[i].edges.empty()) {
      csv << g->vertex_id(paths[i].base);
    } else {
      for (size_t k = 0; k < paths[i].edges.size(); ++k) {
        if (k) csv << " ";
        csv << g->edge_id(paths[i].edges[k]);
      }
    }
    csv << "," << g->vertex_id(path_source(*g, paths[i])) << ","
        << g->vertex_id(path_range(*g, paths[i])) << "\n";
  }
  out.write(csv.str());
  return 0;
}

int cmd_moment(const GraphPtr& g, const std::string& word_spec, const Output& out,
               const std::string& format) {
  auto word = parse_word(*g, word_spec);
  Rational pairs = trace_pair_partition(g, word);
  Rational model = trace_operator_model(g, word);
  Rational cumul = trace_from_cumulants(g, word);
  const bool match = (pairs == model) && (model == cumul);

  if (format == "json") {
    json doc{{"schema", "graphfp.moment/1"},
             {"word", word_to_string(*g, word)},
             {"length", word.size()},
             {"pair_partition", to_string(pairs)},
             {"operator_model", to_string(model)},
             {"cumulant_reconstruction", to_string(cumul)},
             {"decimal", to_double(pairs)},
             {"match", match}};
    out.write(doc.dump(2) + "\n");
  } else {
    std::ostringstream csv;
    csv << "word,length,pair_partition,operator_model,cumulant_reconstruction,decimal,match\n";
    csv << '"' << word_to_string(*g, word) << '"' << "," << word.size() << "," << to_string(pairs) << ","
        << to_string(model) << "," << to_string(cumul) << "," << fmt_double(to_double(pairs))
        << "," << (match ? "true" : "false") << "\n";
    out.write(csv.str());
  }
  return match ? 0 : 1;
}

int cmd_cumulant(const GraphPtr& g, const std::string& word_spec, const std::string& partition_spec,
                 const Output& out) {
  auto word = parse_word(*g, word_spec);
  const int n = static_cast<int>(word.size());
  json doc{{"schema", "graphfp.cumulant/1"}, {"word", word_to_string(*g, word)}, {"length", n}};

  if (!partition_spec.empty()) {
    // kappa_pi for one partition, blocks as b1.b2|b3|...
    std::vector<std::vector<int>> blocks;
    std::stringstream in(partition_spec);
    std::string blk;
    while (std::getline(in, blk, '|')) {
      std::vector<int> block;
      std::stringstream bs(blk);
      std::string num;
      while (std::getline(bs, num, '.')) block.push_back(std::stoi(num));
      blocks.push_back(block);
    }
    nc::NCPartition pi(n, blocks);
    P0Element closed = kappa_pi_closed(g, word, pi);
    P0Element peeled = kappa_pi_recursive(g, word, pi);
    doc["partition"] = pi.blocks();
    doc["kappa"] = p0_to_json(closed);
    doc["consistent"] = (closed == peeled);
    out.write(doc.dump(2) + "\n");
    return closed == peeled ? 0 : 1;
  }

  const auto partitions = nc::enumerate_nc(n);
  int contributing = 0;
  for (const auto& pi : partitions) {
    if (!kappa_pi_closed(g, word, pi).is_zero()) ++contributing;
  }
  P0Element moment = moment_from_cumulants(g, word);
  doc["partition_count"] = partitions.size();
  doc["contributing_partitions"] = contributing;
  doc["value"] = p0_to_json(moment);
  doc["trace"] = to_string(tau_p0(moment));
  doc["trace_decimal"] = to_double(tau_p0(moment));
  out.write(doc.dump(2) + "\n");
  return 0;
}

int cmd_freeness(const GraphPtr& g, int max_length, const Output& out, const std::string& format) {
  auto report = mixed_cumulants_vanish(g, max_length);
  if (format == "json") {
    json doc{{"schema", "graphfp.freeness/1"},
             {"max_length", report.max_length},
             {"mixed_tuples_checked", report.tuples_checked},
             {"kappa_evaluations", report.evaluations},
             {"free", report.free()}};
    doc["violations"] = json::array();
    for (const auto& w : report.violations) {
      doc["violations"].push_back({{"word", word_to_string(*g, w.word)},
                                   {"partition", w.partition_blocks},
                                   {"value", w.value}});
    }
    out.write(doc.dump(2) + "\n");
  } else {
    std::ostringstream text;
    text << "mixed tuples checked: " << report.tuples_checked << " (length <= "
         << report.max_length << ", " << report.evaluations << " cumulant evaluations)\n";
    if (report.free()) {
      text << "all mixed cumulants vanish: dual-pair subalgebras are free over the vertex algebra\n";
    } else {
      for (const auto& w : report.violations) {
        text << "nonzero mixed cumulant at word " << word_to_string(*g, w.word) << ": " << w.value
             << "\n";
      }
    }
    out.write(text.str());
  }
  return report.free() ? 0 : 1;
}

int cmd_narayana(int n, const Output& out) {
  std::ostringstream csv;
  csv << "k,narayana\n";
  for (int k = 1; k <= n; ++k) {
    csv << k << "," << nc::narayana(n, k).get_str() << "\n";
  }
  csv << "catalan," << nc::catalan(n).get_str() << "\n";
  out.write(csv.str());
  return 0;
}

int cmd_bijection(const std::string& pairs_spec, const Output& out) {
  auto pairs = parse_pairs(pairs_spec);
  nc::NCPairPartition pi(static_cast<int>(2 * pairs.size()), pairs);
  nc::NCPartition image = nc::tl_bijection(pi);
  const bool roundtrip = (nc::tl_inverse(image) == pi);

  std::ostringstream text;
  text << "image blocks: ";
  for (size_t b = 0; b < image.blocks().size(); ++b) {
    if (b) text << ",";
    text << "{";
    for (size_t i = 0; i < image.blocks()[b].size(); ++i) {
      if (i) text << ",";
      text << image.blocks()[b][i];
    }
    text << "}";
  }
  text << "\n";
  text << "odd-min arcs: " << nc::odd_block_count(pi) << "\n";
  text << "block count: " << image.block_count() << "\n";
  text << "round trip: " << (roundtrip ? "ok" : "FAILED") << "\n";
  out.write(text.str());
  return roundtrip && nc::odd_block_count(pi) == image.block_count() ? 0 : 1;
}

int cmd_poisson_verify(const Rational& rho, int max_order, const Output& out) {
  // mu_v / mu_w = rho with integer weights keeps everything exact
  auto g = make_two_vertex(Rational(rho.get_num()), Rational(rho.get_den()));
  const Rational tau_pw = tau_p0(P0Element::vertex(g, g->vertex_index("w")));

  std::ostringstream csv;
  csv << "n,path_algebra,band_matrix,narayana_formula,decimal,match\n";
  bool all_match = true;
  for (int n = 1; n <= max_order; ++n) {
    Rational path_side = trace_pair_partition(g, alternating_word(*g, n)) / tau_pw;
    Rational band_side = fock::tstar_t_moment(rho, n);
    Rational formula = narayana_sum(rho, n);
    const bool match = (path_side == band_side) && (band_side == formula);
    all_match = all_match && match;
    csv << n << "," << to_string(path_side) << "," << to_string(band_side) << ","
        << to_string(formula) << "," << fmt_double(to_double(formula)) << ","
        << (match ? "true" : "false") << "\n";
  }
  out.write(csv.str());
  return all_match ? 0 : 1;
}

int cmd_fock_moments(const Rational& rho, int max_order, const Output& out) {
  std::ostringstream csv;
  csv << "n,exact,decimal,narayana_formula,match\n";
  bool all_match = true;
  for (int n = 1; n <= max_order; ++n) {
    Rational exact = fock::tstar_t_moment(rho, n);
    Rational formula = narayana_sum(rho, n);
    const bool match = exact == formula;
    all_match = all_match && match;
    csv << n << "," << to_string(exact) << "," << fmt_double(to_double(exact)) << ","
        << to_string(formula) << "," << (match ? "true" : "false") << "\n";
  }
  out.write(csv.str());
  return all_match ? 0 : 1;
}

int cmd_density(double rho, int grid, double epsilon, const Output& out) {
  auto support = spectral::tstar_t_support(rho);
  const double shift = rho + 1 / rho;
  auto ts = spectral::linspace(support.lo - 0.25, support.hi + 0.25, grid);
  std::ostringstream csv;
  csv << "t,density,inversion_estimate,abs_diff\n";
  for (double t : ts) {
    const double g = spectral::density_tstar_t(t, rho);
    const double inv =
        spectral::cauchy_frho(spectral::Complex(t - shift, epsilon), rho).imag() / M_PI;
    csv << fmt_double(t) << "," << fmt_double(g) << "," << fmt_double(inv) << ","
        << fmt_double(std::abs(g - inv)) << "\n";
  }
  out.write(csv.str());
  return 0;
}

int cmd_inversion_scan(double rho, double epsilon, double lo, double hi, int grid,
                       const Output& out) {
  auto rows = spectral::stieltjes_inversion_scan(rho, epsilon, spectral::linspace(lo, hi, grid));
  std::ostringstream csv;
  csv << "t,inversion,density,abs_diff\n";
  double max_diff = 0;
  for (const auto& row : rows) {
    max_diff = std::max(max_diff, row.abs_diff);
    csv << fmt_double(row.t) << "," << fmt_double(row.inversion) << "," << fmt_double(row.density)
        << "," << fmt_double(row.abs_diff) << "\n";
  }
  csv << "max_abs_diff," << fmt_double(max_diff) << ",,\n";
  out.write(csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moments, cumulants and spectral densities of weighted-graph path algebras"};
  app.require_subcommand(1);

  std::string graph_path, word_spec, partition_spec, from, to, pairs_spec, output_path;
  std::string format = "csv", rho_text = "2";
  int length = 0, n = 4, max_order = 6, max_length = 6, grid = 101;
  double rho_real = 2.0, epsilon = 1e-6, lo = -1.9, hi = 1.9;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", output_path, "write to a file instead of stdout");
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file against the invariants");
  validate_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  validate_cmd->add_option("--format", format, "csv|json");
  add_output(validate_cmd);

  auto* paths_cmd = app.add_subcommand("paths", "enumerate composable paths");
  paths_cmd->add_option("--graph", graph_path)->required();
  paths_cmd->add_option("--length", length, "path length")->required();
  paths_cmd->add_option("--from", from, "source vertex id");
  paths_cmd->add_option("--to", to, "range vertex id");
  add_output(paths_cmd);

  auto* moment_cmd =
      app.add_subcommand("moment", "trace of a word by three independent evaluators");
  moment_cmd->add_option("--graph", graph_path)->required();
  moment_cmd->add_option("--word", word_spec, "comma-separated edge ids, '*' suffix = dual")
      ->required();
  moment_cmd->add_option("--format", format, "csv|json");
  add_output(moment_cmd);

  auto* cumulant_cmd = app.add_subcommand("cumulant", "vertex-algebra-valued cumulants of a word");
  cumulant_cmd->add_option("--graph", graph_path)->required();
  cumulant_cmd->add_option("--word", word_spec)->required();
  cumulant_cmd->add_option("--partition", partition_spec,
                           "blocks as dot-separated elements joined by '|', e.g. 1.2|3.4");
  add_output(cumulant_cmd);

  auto* freeness_cmd =
      app.add_subcommand("freeness", "scan mixed cumulants across dual-pair classes");
  freeness_cmd->add_option("--graph", graph_path)->required();
  freeness_cmd->add_option("--max-length", max_length, "longest tuple to scan (<= 8)");
  freeness_cmd->add_option("--format", format, "csv|json");
  add_output(freeness_cmd);

  auto* narayana_cmd = app.add_subcommand("narayana", "Narayana row and Catalan number");
  narayana_cmd->add_option("--n", n, "row index")->required();
  add_output(narayana_cmd);

  auto* bijection_cmd =
      app.add_subcommand("bijection", "Temperley-Lieb image of a non-crossing pair partition");
  bijection_cmd->add_option("--pairs", pairs_spec, "arcs as a-b,c-d,...")->required();
  add_output(bijection_cmd);

  auto* poisson_cmd = app.add_subcommand(
      "poisson-verify", "free Poisson moments: path algebra vs band matrix vs Narayana sum");
  poisson_cmd->add_option("--rho", rho_text, "weight ratio as p/q (>= 1)");
  poisson_cmd->add_option("--max-order", max_order);
  add_output(poisson_cmd);

  auto* fock_cmd = app.add_subcommand("fock-moments", "vacuum moments of the band model of t*t");
  fock_cmd->add_option("--rho", rho_text, "weight ratio as p/q");
  fock_cmd->add_option("--max-order", max_order);
  add_output(fock_cmd);

  auto* density_cmd =
      app.add_subcommand("density", "free Poisson density of t*t with inversion estimates");
  density_cmd->add_option("--rho", rho_real, "weight ratio (> 1)");
  density_cmd->add_option("--grid", grid, "number of sample points");
  density_cmd->add_option("--epsilon", epsilon, "inversion offset");
  add_output(density_cmd);

  auto* scan_cmd = app.add_subcommand("inversion-scan",
                                      "Stieltjes inversion of F_rho against the closed density");
  scan_cmd->add_option("--rho", rho_real, "weight ratio (> 1)");
  scan_cmd->add_option("--epsilon", epsilon);
  scan_cmd->add_option("--min", lo);
  scan_cmd->add_option("--max", hi);
  scan_cmd->add_option("--grid", grid);
  add_output(scan_cmd);

  CLI11_PARSE(app, argc, argv);

  Output out{output_path};
  try {
    if (validate_cmd->parsed()) return cmd_validate(graph_path, out, format);
    GraphPtr g;
    if (paths_cmd->parsed() || moment_cmd->parsed() || cumulant_cmd->parsed() ||
        freeness_cmd->parsed()) {
      g = load_graph_file(graph_path);
    }
    if (paths_cmd->parsed()) return cmd_paths(g, length, from, to, out);
    if (moment_cmd->parsed()) return cmd_moment(g, word_spec, out, format);
    if (cumulant_cmd->parsed()) return cmd_cumulant(g, word_spec, partition_spec, out);
    if (freeness_cmd->parsed()) return cmd_freeness(g, max_length, out, format);
    if (narayana_cmd->parsed()) return cmd_narayana(n, out);
    if (bijection_cmd->parsed()) return cmd_bijection(pairs_spec, out);
    if (poisson_cmd->parsed()) return cmd_poisson_verify(parse_rational(rho_text), max_order, out);
    if (fock_cmd->parsed()) return cmd_fock_moments(parse_rational(rho_text), max_order, out);
    if (density_cmd->parsed()) return cmd_density(rho_real, grid, epsilon, out);
    if (scan_cmd->parsed()) return cmd_inversion_scan(rho_real, epsilon, lo, hi, grid, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
