#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "nt/version.hpp"

namespace nt::report {

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw DomainError("format must be json, csv or text");
}

Json big(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Json certified(const Certified<bool>& c) { return {{"value", c.value}, {"status", c.proven ? "proven" : "bounded"}}; }

Json bounds(const CertBounds& b) {
  return {{"span", {b.span_lo, b.span_hi}}, {"radius", b.radius}, {"depth", b.depth}};
}

Json witness(const Witness& w) {
  if (w.is_leaf()) return w.value;
  Json args = Json::array();
  for (const auto& a : w.args) args.push_back(witness(a));
  return {{"value", w.value}, {"args", args}};
}

Json classification(const Classification& c) {
  Json j = {{"n", c.n}, {"verdict", to_string(c.verdict)}, {"status", c.proven ? "proven" : "bounded"}};
  if (c.verdict == Verdict::Unit) {
    Json pos = Json::array();
    for (int k = 0; k < 32; ++k) {
      if (c.unit_at(k)) pos.push_back(k + 1);
    }
    j["unit_positions"] = pos;
  }
  if (c.witness) {
    j["witness"] = witness(*c.witness);
    j["witness_text"] = c.witness->to_string();
  }
  return j;
}

Json sieve(const SieveTable& t) {
  Json entries = Json::array();
  for (const auto& e : t.entries) entries.push_back(classification(e));
  Json primes = t.with(Verdict::Prime);
  Json units = t.with(Verdict::Unit);
  return {{"window", {t.lo, t.hi}},    {"semantics", t.semantics.to_string()},
          {"primes", primes},          {"units", units},
          {"unknown", t.with(Verdict::Unknown)}, {"notes", t.notes},
          {"entries", entries}};
}

Table sieve_table(const SieveTable& t) {
  Table out{{"n", "verdict", "witness", "certification"}, {}};
  for (const auto& e : t.entries) {
    out.rows.push_back({std::to_string(e.n), std::string(to_string(e.verdict)),
                        e.witness ? e.witness->to_string() : "", e.proven ? "proven" : "bounded"});
  }
  return out;
}

Json RunManifest::to_json() const {
  Json j = {{"command", command}, {"version", kVersion}, {"params", params}};
  if (op) j["op"] = *op;
  if (bounds) j["bounds"] = report::bounds(*bounds);
  j["timing"] = {{"seconds", seconds}, {"jobs", jobs}};
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string aligned(const Table& t) {
  std::vector<std::size_t> w(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
  };
  widen(t.header);
  for (const auto& r : t.rows) widen(r);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(w[i] - row[i].size() + 2, ' ');
    }
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

}  // namespace

std::string csv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

std::string render(const RunManifest& manifest, const CommandOutput& out, Format format) {
  switch (format) {
    case Format::Json: {
      Json j = {{"manifest", manifest.to_json()}, {"result", out.result}};
      return j.dump(2) + "\n";
    }
    case Format::Csv: return csv(out.table);
    case Format::Text: return out.text.empty() ? aligned(out.table) : out.text;
  }
  return {};
}

}  // namespace nt::report
