#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locald/algorithms.hpp"
#include "locald/certificates.hpp"
#include "locald/enumerate.hpp"
#include "locald/error.hpp"
#include "locald/gadgets.hpp"
#include "locald/io.hpp"
#include "locald/report.hpp"
#include "locald/search.hpp"

namespace {

using namespace locald;
using nlohmann::json;

constexpr int exit_pass = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t env_seed() {
  if (const char* s = std::getenv("LOCALD_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw UsageError("LOCALD_SEED must be an unsigned integer");
    }
  }
  return 0;
}

IdStrategy parse_ids(const std::string& text, std::uint64_t seed) {
  if (text == "all") return IdStrategy::all_permutations();
  if (text == "standard") return IdStrategy::standard(seed);
  if (text.starts_with("sampled:")) {
    try {
      return IdStrategy::sampled(std::stoi(text.substr(8)), seed);
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--ids must be all, standard or sampled:K");
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_file(out, text);
}

LocalVerifier require_verifier(const std::string& name) {
  auto v = find_verifier(name);
  if (!v) throw UsageError("unknown verifier '" + name + "'");
  return *v;
}

CertificateGenerator require_generator(const std::string& name) {
  auto g = find_generator(name);
  if (!g) throw UsageError("no certificate generator for '" + name + "'");
  return *g;
}

LanguageId require_language(const std::string& name) {
  try {
    return parse_language(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

struct Options {
  std::string alg, lang, out, space, ids = "standard", config, certs, kind = "graphs";
  std::string g1, g2, format = "text";
  int min_n = 1, max_n = 5, t = 1, v1 = 0, v2 = 0, i = 0, j = 1, max_bits = 4, length = 0, n = 4, pool_max_n = 4;
  int samples = 20;
  bool count_only = false;
  std::uint64_t seed = 0;
};

int run_compliance(const Options& o) {
  ExperimentSpec spec;
  spec.name = o.alg;
  spec.language = require_language(o.lang);
  spec.algorithm = o.alg;
  spec.min_n = o.min_n;
  spec.max_n = o.max_n;
  spec.ids = parse_ids(o.ids, o.seed);
  if (!o.space.empty()) spec.space = parse_cert_space(o.space);
  if (!find_decider(o.alg) && !find_verifier(o.alg)) throw UsageError("unknown algorithm '" + o.alg + "'");
  const auto report = run_experiment(spec);
  auto doc = to_json(report);
  doc["algorithm"] = o.alg;
  doc["language"] = language_name(spec.language);
  emit(o.out, doc.dump(2) + "\n");
  return report.passed() ? exit_pass : exit_failure;
}

int run_gadget(const std::string& which, const Options& o) {
  if (which == "pathcycle") {
    auto [path, cycle] = path_and_cycle(o.t);
    const std::filesystem::path dir = o.out.empty() ? "." : o.out;
    std::filesystem::create_directories(dir);
    const auto p = dir / ("path_P" + std::to_string(path.size()) + ".txt");
    const auto c = dir / ("cycle_C" + std::to_string(cycle.size()) + ".txt");
    write_text_file(p, format_configuration(path));
    write_text_file(c, format_configuration(cycle));
    std::cout << p.string() << "\n" << c.string() << "\n";
    return exit_pass;
  }
  if (which == "partition") {
    const auto a = read_configuration_file(o.g1), b = read_configuration_file(o.g2);
    emit(o.out, format_configuration(partition_gadget(a.topology(), o.v1, o.i, b.topology(), o.v2, o.j, o.t)));
    return exit_pass;
  }
  if (which == "treepair") {
    const auto a = read_configuration_file(o.g1), b = read_configuration_file(o.g2);
    emit(o.out, format_configuration(tree_pair_gadget(a.topology(), o.v1, b.topology(), o.v2)));
    return exit_pass;
  }
  if (which == "splice") {
    const auto path = read_configuration_file(o.config);
    std::ifstream in(o.certs);
    if (!in) throw UsageError("cannot read certificates '" + o.certs + "'");
    const auto certs = certificates_from_json(json::parse(in));
    auto result = splice_cycle_from_path(path, certs, o.t);
    if (!result) {
      std::cerr << "no repeated certificate window\n";
      return exit_failure;
    }
    json doc{{"graph", to_json(result->graph)},
             {"certs", to_json(result->certs)},
             {"spliceNodes", {result->splice_nodes.first, result->splice_nodes.second}},
             {"origin", result->origin}};
    emit(o.out, doc.dump(2) + "\n");
    return exit_pass;
  }
  throw UsageError("unknown gadget '" + which + "'");
}

bool accepted_everywhere(const LocalVerifier& ver, const Configuration& config, const CertificateVector& certs,
                         const IdStrategy& ids) {
  for (const auto& a : generate_id_assignments(ids, config.size()))
    if (!run_verifier(ver, config, a, certs).global()) return false;
  return true;
}

int run_fool(const std::string& which, const Options& o) {
  const auto ver = require_verifier(o.alg);
  const auto gen = require_generator(o.alg);
  const auto ids = parse_ids(o.ids, o.seed);
  if (which == "splice") {
    const int len = o.length > 0 ? o.length : 64;
    const Configuration path(path_graph(len));
    auto certs = gen(path);
    if (!certs || !accepted_everywhere(ver, path, *certs, ids)) {
      std::cerr << "verifier does not accept the path with its own certificate\n";
      return exit_failure;
    }
    auto result = splice_cycle_from_path(path, *certs, o.t);
    const bool fooled = result && accepted_everywhere(ver, result->graph, result->certs, ids);
    json doc{{"attack", "splice"}, {"verifier", o.alg}, {"pathLength", len}, {"fooled", fooled}};
    if (result) {
      doc["graph"] = to_json(result->graph);
      doc["certs"] = to_json(result->certs);
      doc["spliceNodes"] = {result->splice_nodes.first, result->splice_nodes.second};
    }
    emit(o.out, doc.dump(2) + "\n");
    return fooled ? exit_pass : exit_failure;
  }
  if (which == "transplant") {
    std::vector<GraphTopology> pool;
    for (int n = 1; n <= o.pool_max_n; ++n) {
      auto batch = enumerate_instances(InstanceKind::connected_graphs, n);
      pool.insert(pool.end(), batch.begin(), batch.end());
    }
    auto result = transplant_attack(ver, gen, o.t, pool, ids);
    json doc{{"attack", "transplant"}, {"verifier", o.alg}, {"poolSize", pool.size()}, {"fooled", result.has_value()}};
    if (result) {
      doc["config"] = to_json(result->config);
      doc["certs"] = to_json(result->certs);
      doc["left"] = result->left;
      doc["right"] = result->right;
    }
    emit(o.out, doc.dump(2) + "\n");
    return result ? exit_pass : exit_failure;
  }
  throw UsageError("unknown attack '" + which + "'");
}

int run_search(const std::string& which, const Options& o) {
  const auto ver = require_verifier(o.alg);
  const auto config = read_configuration_file(o.config);
  const auto ids = parse_ids(o.ids, o.seed);
  if (which == "min-cert") {
    auto k = min_cert_size(ver, config, ids, o.max_bits);
    json doc{{"verifier", o.alg}, {"maxBits", o.max_bits}, {"minCertSize", k ? json(*k) : json(nullptr)}};
    emit(o.out, doc.dump(2) + "\n");
    return k ? exit_pass : exit_failure;
  }
  if (which == "soundness") {
    const auto space = o.space.empty() ? default_space(o.alg) : parse_cert_space(o.space);
    auto found = soundness_search(ver, config, space, ids);
    json doc{{"verifier", o.alg}, {"space", cert_space_name(space)}, {"fooling", found ? to_json(*found) : json(nullptr)}};
    emit(o.out, doc.dump(2) + "\n");
    return found ? exit_failure : exit_pass;
  }
  throw UsageError("unknown search '" + which + "'");
}

int run_table(const Options& o) {
  TableOptions opts;
  opts.seed = o.seed;
  opts.samples = o.samples;
  if (o.max_n > 0) {
    opts.sizes.clear();
    for (int n = 1; n <= std::min(o.max_n, 8); ++n) opts.sizes.push_back(n);
    for (int n = 16; n <= o.max_n; n *= 2) opts.sizes.push_back(n);
  }
  const auto rows = measure_certificate_sizes(opts);
  if (o.format == "csv") emit(o.out, render_table_csv(rows));
  else if (o.format == "text") emit(o.out, render_table_text(rows));
  else throw UsageError("--format must be text or csv");
  return exit_pass;
}

int run_enumerate(const Options& o) {
  InstanceKind kind;
  if (o.kind == "graphs") kind = InstanceKind::connected_graphs;
  else if (o.kind == "trees") kind = InstanceKind::trees;
  else if (o.kind == "labeled-trees") kind = InstanceKind::labeled_trees;
  else throw UsageError("--kind must be graphs, trees or labeled-trees");
  const auto graphs = enumerate_instances(kind, o.n);
  if (o.count_only) {
    emit(o.out, std::to_string(graphs.size()) + "\n");
    return exit_pass;
  }
  json doc = json::array();
  for (const auto& g : graphs) doc.push_back(to_json(Configuration(g)));
  emit(o.out, doc.dump() + "\n");
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local decision and verification workbench"};
  app.require_subcommand(1);
  Options o;
  std::string which;

  try {
    o.seed = env_seed();
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return exit_usage;
  }

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "seed (default LOCALD_SEED or 0)");
    cmd->add_option("--ids", o.ids, "id strategy: all, standard, sampled:K");
    cmd->add_option("--out", o.out, "output file (stdout if absent)");
  };

  auto* decide = app.add_subcommand("decide", "check a decider against the membership oracle");
  decide->add_option("--alg", o.alg, "decider name")->required();
  decide->add_option("--lang", o.lang, "language name")->required();
  decide->add_option("--min-n", o.min_n);
  decide->add_option("--max-n", o.max_n);
  add_common(decide);

  auto* verify = app.add_subcommand("verify", "check completeness and soundness of a verifier");
  verify->add_option("--ver", o.alg, "verifier name")->required();
  verify->add_option("--lang", o.lang, "language name")->required();
  verify->add_option("--min-n", o.min_n);
  verify->add_option("--max-n", o.max_n);
  verify->add_option("--space", o.space, "bits:K, lift:K, lift-tree:K, dist:K or color");
  add_common(verify);

  auto* gadget = app.add_subcommand("gadget", "build a gadget instance");
  gadget->add_option("kind", which, "pathcycle, partition, treepair or splice")->required();
  gadget->add_option("--t", o.t);
  gadget->add_option("--g1", o.g1, "left graph file");
  gadget->add_option("--g2", o.g2, "right graph file");
  gadget->add_option("--v1", o.v1);
  gadget->add_option("--v2", o.v2);
  gadget->add_option("--i", o.i);
  gadget->add_option("--j", o.j);
  gadget->add_option("--config", o.config, "path file for splice");
  gadget->add_option("--certs", o.certs, "certificate JSON for splice");
  add_common(gadget);

  auto* fool = app.add_subcommand("fool", "run a certificate transplant attack");
  fool->add_option("attack", which, "splice or transplant")->required();
  fool->add_option("--ver", o.alg, "verifier name")->required();
  fool->add_option("--t", o.t);
  fool->add_option("--length", o.length, "path length for splice");
  fool->add_option("--pool-max-n", o.pool_max_n, "largest pool graph for transplant");
  add_common(fool);

  auto* search = app.add_subcommand("search", "exhaustive certificate searches");
  search->add_option("mode", which, "min-cert or soundness")->required();
  search->add_option("--ver", o.alg, "verifier name")->required();
  search->add_option("--config", o.config, "configuration file")->required();
  search->add_option("--max-bits", o.max_bits);
  search->add_option("--space", o.space);
  add_common(search);

  auto* table = app.add_subcommand("table", "measured certificate sizes per language");
  table->add_option("--max-n", o.max_n, "largest n (default 1..8,16,32,64)");
  table->add_option("--samples", o.samples);
  table->add_option("--format", o.format, "text or csv");
  add_common(table);
  o.max_n = 5;

  auto* enumerate = app.add_subcommand("enumerate", "list isomorphism classes");
  enumerate->add_option("--kind", o.kind, "graphs, trees or labeled-trees");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_flag("--count", o.count_only);
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (*decide || *verify) return run_compliance(o);
    if (*gadget) return run_gadget(which, o);
    if (*fool) return run_fool(which, o);
    if (*search) return run_search(which, o);
    if (*table) {
      if (table->count("--max-n") == 0) o.max_n = 0;
      return run_table(o);
    }
    if (*enumerate) return run_enumerate(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::parse_error || e.code() == ErrorCode::invalid_input ||
                       e.code() == ErrorCode::cap_exceeded || e.code() == ErrorCode::index_out_of_range;
    return usage ? exit_usage : exit_failure;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
