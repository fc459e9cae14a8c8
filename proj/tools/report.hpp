#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nt/genprime.hpp"

namespace nt::report {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Text };
Format parse_format(std::string_view text);

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json big(const BigInt& v);
Json certified(const Certified<bool>& c);
Json bounds(const CertBounds& b);
Json witness(const Witness& w);
Json classification(const Classification& c);
Json sieve(const SieveTable& t);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table sieve_table(const SieveTable& t);

struct RunManifest {
  std::string command;
  Json params = Json::object();
  std::optional<std::string> op;  // canonical text after the parse/print round trip
  std::optional<CertBounds> bounds;
  double seconds = 0.0;  // reported under "timing"
  unsigned jobs = 1;

  Json to_json() const;
};

struct CommandOutput {
  Json result = Json::object();
  Table table;
  std::string text;
  int exit_code = 0;
};

/// JSON: {"manifest": ..., "result": ...}. CSV: the table. Text: `text`, or
/// the table aligned when `text` is empty.
std::string render(const RunManifest& manifest, const CommandOutput& out, Format format);

std::string csv(const Table& t);

}  // namespace nt::report
