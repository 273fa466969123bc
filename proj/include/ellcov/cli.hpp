#pragma once

// Command-line front end. `run` takes the argument vector (program name
// first) and the output streams, so tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ellcov/error.hpp"
#include "ellcov/graph.hpp"
#include "ellcov/hurwitz.hpp"
#include "ellcov/integrals.hpp"
#include "ellcov/order.hpp"
#include "ellcov/parallel.hpp"
#include "ellcov/quasimodular.hpp"
#include "ellcov/tropical.hpp"

namespace ellcov::cli {

inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

inline FeynmanGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open graph file " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  auto g = graph_from_json(j);
  validate(g);
  return g;
}

/// "0,2,1,0,0,1" -> {0,2,1,0,0,1}.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      while (used < item.size() && item[used] == ' ') ++used;
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty integer list");
  return out;
}

inline double work_budget_from_env() {
  const char* env = std::getenv("HURWITZ_WORK_BUDGET");
  HurwitzOptions defaults;
  if (env == nullptr || *env == '\0') return defaults.work_budget;
  try {
    std::size_t used = 0;
    const double v = std::stod(env, &used);
    if (used != std::string(env).size() || !(v > 0)) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("HURWITZ_WORK_BUDGET must be a positive number, got '") +
                    env + "'");
  }
}

/// F_g through the tropical tuples: sum over bridgeless classes and branch
/// types of N_{a,Gamma} / |Aut|.
inline QSeries f_g_tropical(int genus, int d_max, unsigned threads) {
  QSeries out(static_cast<std::size_t>(2 * d_max + 1));
  for (const auto& g : enumerate_genus(genus)) {
    if (has_bridge(g)) continue;
    const Rational inv_aut(Integer(1), Integer(automorphism_count(g)));
    for (int d = 1; d <= d_max; ++d) {
      const auto types = compositions(d, g.edge_count());
      auto parts = parallel_map(types.size(), threads, [&](std::size_t i) {
        return count_covers_all_orders(g, types[i]);
      });
      for (const auto& p : parts) out.at(2 * d) += inv_aut * Rational(p);
    }
  }
  return out;
}

inline QSeries f_g_symmetric(int genus, int d_max, const HurwitzOptions& opts) {
  QSeries out(static_cast<std::size_t>(2 * d_max + 1));
  for (int d = 1; d <= d_max; ++d) out.at(2 * d) = hurwitz_count(d, genus, opts);
  return out;
}

inline nlohmann::json series_json(const QSeries& s) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& x : s.coefficients()) c.push_back(to_string(x));
  return {{"precision", s.precision()}, {"coefficients", c}, {"text", s.to_string()}};
}

inline nlohmann::json rep_json(const QuasimodularRep& rep) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t b = 0; b < rep.basis.size(); ++b) {
    terms.push_back({{"monomial", monomial_string(rep.basis[b])},
                     {"exponents", rep.basis[b]},
                     {"coefficient", to_string(rep.coeffs[b])}});
  }
  return {{"weight", rep.weight}, {"terms", terms}, {"text", to_string(rep)}};
}

inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Hurwitz numbers of elliptic curves via Feynman integrals, "
               "tropical covers and monodromy counts"};
  app.require_subcommand(1);
  bool json = false;
  unsigned threads = default_thread_count();
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string graph_path, branch, order_text, oracle = "integral";
  int degree = -1, genus = -1;
  std::optional<int> w_max;
  bool bridgeless = false;

  auto* gw = app.add_subcommand("gw", "N_{a,Gamma} or |Aut| N_{d,Gamma}");
  gw->add_option("--graph", graph_path, "graph JSON file")->required();
  auto* gw_branch = gw->add_option("--branch", branch, "branch type a_1,...,a_{3g-3}");
  auto* gw_degree = gw->add_option("--degree", degree, "total degree d")->check(CLI::NonNegativeNumber);
  gw_branch->excludes(gw_degree);
  gw->add_option("--order", order_text, "single vertex order, e.g. 3,1,2,4 (with --branch)")
      ->needs(gw_branch);
  gw->add_option("--w-max", w_max, "weight bound for degree-0 edges")
      ->check(CLI::PositiveNumber);

  auto* genfun = app.add_subcommand("genfun", "multigraded generating function up to degree d");
  genfun->add_option("--graph", graph_path)->required();
  genfun->add_option("--degree", degree)->required()->check(CLI::NonNegativeNumber);

  auto* igamma = app.add_subcommand("igamma", "I_Gamma(q) truncated after q^{2d}");
  igamma->add_option("--graph", graph_path)->required();
  igamma->add_option("--max-degree", degree)->required()->check(CLI::NonNegativeNumber);

  auto* fg = app.add_subcommand("fg", "F_g(q) truncated after q^{2d}");
  fg->add_option("--genus", genus)->required();
  fg->add_option("--max-degree", degree)->required()->check(CLI::NonNegativeNumber);
  fg->add_option("--oracle", oracle, "computation path")
      ->check(CLI::IsMember({"sym", "tropical", "integral"}));

  auto* graphs = app.add_subcommand("graphs", "trivalent graphs of a genus");
  graphs->add_option("--genus", genus)->required();
  graphs->add_flag("--bridgeless", bridgeless, "only graphs without bridges");

  auto* covers = app.add_subcommand("covers", "tropical covers as JSON lines");
  covers->add_option("--graph", graph_path)->required();
  covers->add_option("--branch", branch)->required();
  covers->add_option("--order", order_text, "vertex order, e.g. 1,3,4,2")->required();
  covers->add_option("--w-max", w_max)->check(CLI::PositiveNumber);

  auto* qfit = app.add_subcommand("qfit", "Eisenstein representation of I_Gamma or F_g");
  auto* qfit_graph = qfit->add_option("--graph", graph_path);
  auto* qfit_genus = qfit->add_option("--genus", genus, "fit F_g instead of one graph");
  qfit_graph->excludes(qfit_genus);
  qfit->add_option("--max-degree", degree)->required()->check(CLI::NonNegativeNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : kExitUsage;
  }

  auto emit = [&](const nlohmann::json& j, const std::string& text) {
    if (json) {
      out << j.dump() << '\n';
    } else {
      out << text << '\n';
    }
  };

  try {
    if (gw->parsed()) {
      const auto g = load_graph(graph_path);
      if (!gw_branch->empty()) {
        const auto a = parse_int_list(branch);
        IntegralOptions opts;
        opts.w_max = w_max;
        if (!order_text.empty()) {
          const auto order = VertexOrder::from_one_based(parse_int_list(order_text));
          const auto v = integral_coeff(g, a, order, opts);
          emit({{"command", "gw"}, {"branch", a}, {"order", order.to_string()},
                {"value", to_string(v)}},
               to_string(v));
        } else {
          const auto v = gromov_witten_a(g, a, opts, threads);
          emit({{"command", "gw"}, {"branch", a}, {"value", to_string(v)}}, to_string(v));
        }
      } else if (!gw_degree->empty()) {
        const auto v = gromov_witten_d(g, degree, threads);
        emit({{"command", "gw"}, {"degree", degree}, {"value", to_string(v)}},
             to_string(v));
      } else {
        throw Error(ErrorCode::InvalidArgument, "gw needs --branch or --degree");
      }
    } else if (genfun->parsed()) {
      const auto g = load_graph(graph_path);
      const auto s = generating_function(g, degree, threads);
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [a, c] : s) terms.push_back({{"branch", a}, {"coefficient", to_string(c)}});
      emit({{"command", "genfun"}, {"terms", terms}, {"text", to_singular_string(s)}},
           to_singular_string(s));
    } else if (igamma->parsed()) {
      const auto g = load_graph(graph_path);
      const auto s = i_gamma_series(g, degree, threads);
      auto j = series_json(s);
      j["command"] = "igamma";
      emit(j, s.to_string());
    } else if (fg->parsed()) {
      QSeries s;
      if (oracle == "integral") {
        s = f_g(genus, degree, threads);
      } else if (oracle == "tropical") {
        s = f_g_tropical(genus, degree, threads);
      } else {
        HurwitzOptions opts;
        opts.work_budget = work_budget_from_env();
        opts.threads = threads;
        s = f_g_symmetric(genus, degree, opts);
      }
      auto j = series_json(s);
      j["command"] = "fg";
      j["oracle"] = oracle;
      emit(j, s.to_string());
    } else if (graphs->parsed()) {
      EnumerateOptions opts;
      opts.bridgeless_only = bridgeless;
      const auto list = enumerate_genus(genus, opts);
      nlohmann::json arr = nlohmann::json::array();
      std::ostringstream text;
      text << list.size() << " graphs";
      for (std::size_t i = 0; i < list.size(); ++i) {
        const auto& g = list[i];
        std::vector<std::size_t> br;
        for (auto b : bridges(g)) br.push_back(b + 1);
        const auto aut = automorphism_count(g);
        auto gj = graph_to_json(g);
        gj["automorphisms"] = aut;
        gj["bridges"] = br;
        arr.push_back(gj);
        text << '\n' << (i + 1) << ": " << edge_list_string(g) << " |Aut|=" << aut
             << " bridges=" << br.size();
      }
      emit({{"command", "graphs"}, {"genus", genus}, {"graphs", arr}}, text.str());
    } else if (covers->parsed()) {
      const auto g = load_graph(graph_path);
      const auto a = parse_int_list(branch);
      const auto order = VertexOrder::from_one_based(parse_int_list(order_text));
      for (const auto& t : enumerate_tuples(g, a, order, w_max)) {
        out << cover_to_json(reconstruct_cover(t)).dump() << '\n';
      }
    } else if (qfit->parsed()) {
      QSeries s;
      int g_fit = genus;
      if (!qfit_graph->empty()) {
        const auto g = load_graph(graph_path);
        g_fit = validate(g);
        s = i_gamma_series(g, degree, threads);
      } else if (!qfit_genus->empty()) {
        s = f_g(genus, degree, threads);
      } else {
        throw Error(ErrorCode::InvalidArgument, "qfit needs --graph or --genus");
      }
      const auto rep = fit(s, g_fit);
      auto j = rep_json(rep);
      j["command"] = "qfit";
      emit(j, to_string(rep));
    }
  } catch (const Error& e) {
    if (json) {
      err << nlohmann::json{{"error", {{"code", std::string(to_string(e.code()))},
                                      {"message", e.detail()}}}}
                 .dump()
          << '\n';
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.detail() << '\n';
    }
    return kExitFailure;
  }
  return 0;
}

}  // namespace ellcov::cli
