#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "locald/graph.hpp"

namespace locald {

/// Text format: "n m", then m lines "u v" (0-based), then optional lines
/// "w u <bits>"; nodes without a w line have empty input. Text starting with
/// '{' is read as JSON {n, edges:[[u,v],...], inputs:{"u":"bits",...}}.
/// Throws ParseError (or the graph validation errors).
Configuration parse_configuration(std::string_view text);

std::string format_configuration(const Configuration& config);

nlohmann::json to_json(const Configuration& config);
Configuration configuration_from_json(const nlohmann::json& doc);

nlohmann::json to_json(const CertificateVector& certs);  // hex strings
CertificateVector certificates_from_json(const nlohmann::json& doc);

Configuration read_configuration_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace locald
