#include "locald/io.hpp"

#include <fstream>
#include <sstream>

#include "locald/error.hpp"

namespace locald {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse_error, what); }

}  // namespace

Configuration parse_configuration(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      parse_fail(e.what());
    }
    return configuration_from_json(doc);
  }

  std::istringstream in{std::string(text)};
  int n = 0;
  long m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) parse_fail("expected header 'n m'");
  std::vector<Edge> edges;
  for (long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) parse_fail("expected " + std::to_string(m) + " edge lines");
    edges.emplace_back(u, v);
  }
  std::vector<Bits> inputs(static_cast<std::size_t>(n));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    int u;
    if (tag != "w" || !(ls >> u)) parse_fail("unexpected line '" + line + "'");
    if (u < 0 || u >= n) parse_fail("input line for node " + std::to_string(u) + " out of range");
    std::string bits;
    ls >> bits;
    if (!is_bit_string(bits)) parse_fail("input '" + bits + "' is not a bit string");
    inputs[static_cast<std::size_t>(u)] = bits;
  }
  return Configuration(build_graph(n, edges), std::move(inputs));
}

std::string format_configuration(const Configuration& config) {
  std::ostringstream out;
  const auto edges = config.topology().edges();
  out << config.size() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  for (int v = 0; v < config.size(); ++v)
    if (!config.input(v).empty()) out << "w " << v << ' ' << config.input(v) << '\n';
  return out.str();
}

nlohmann::json to_json(const Configuration& config) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : config.topology().edges()) edges.push_back({u, v});
  nlohmann::json inputs = nlohmann::json::object();
  for (int v = 0; v < config.size(); ++v)
    if (!config.input(v).empty()) inputs[std::to_string(v)] = config.input(v);
  return {{"n", config.size()}, {"edges", std::move(edges)}, {"inputs", std::move(inputs)}};
}

Configuration configuration_from_json(const nlohmann::json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    if (n < 1) parse_fail("n must be positive");
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<Bits> inputs(static_cast<std::size_t>(n));
    if (doc.contains("inputs")) {
      for (const auto& [key, value] : doc.at("inputs").items()) {
        const int u = std::stoi(key);
        if (u < 0 || u >= n) parse_fail("input for node " + key + " out of range");
        inputs[static_cast<std::size_t>(u)] = value.get<std::string>();
      }
    }
    return Configuration(build_graph(n, edges), std::move(inputs));
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  } catch (const std::invalid_argument& e) {
    parse_fail(e.what());
  }
}

nlohmann::json to_json(const CertificateVector& certs) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : certs) out.push_back(to_hex(c));
  return out;
}

CertificateVector certificates_from_json(const nlohmann::json& doc) {
  CertificateVector out;
  try {
    for (const auto& item : doc) {
      auto bits = from_hex(item.get<std::string>());
      if (!bits) parse_fail("bad certificate '" + item.get<std::string>() + "'");
      out.push_back(std::move(*bits));
    }
  } catch (const nlohmann::json::exception& e) {
    parse_fail(e.what());
  }
  return out;
}

Configuration read_configuration_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_configuration(buffer.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_input, "cannot write " + path.string());
  out << contents;
}

}  // namespace locald
