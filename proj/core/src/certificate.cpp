#include "spackd/certificate.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "json.hpp"
#include "spackd/error.hpp"

namespace spackd {
namespace {

using Json = nlohmann::ordered_json;

const Json& field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw Error(ErrorKind::kParse, std::string("certificate is missing \"") + key + "\"");
  }
  return *it;
}

std::int64_t as_int(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::kParse, what + " must be an integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

std::string certificate_to_json(const ColoringSchema& schema, const PackingSequence& seq,
                                int indent) {
  Json out;
  out["k"] = schema.spec().k();
  out["t"] = schema.spec().t();
  out["sequence"] = seq.to_string();
  Json patterns = Json::object();
  for (const auto& p : schema.patterns()) patterns[p.name] = p.pattern.colors;
  out["patterns"] = std::move(patterns);
  out["columns"] = schema.column_names();
  out["shifts"] = schema.shifts();
  return out.dump(indent);
}

Certificate parse_certificate(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "certificate must be a JSON object");

  const std::int64_t k = as_int(field(doc, "k"), "\"k\"");
  const std::int64_t t = as_int(field(doc, "t"), "\"t\"");
  const Json& seq_text = field(doc, "sequence");
  if (!seq_text.is_string()) throw Error(ErrorKind::kParse, "\"sequence\" must be a string");
  PackingSequence seq = PackingSequence::parse(seq_text.get<std::string>());

  const Json& pats = field(doc, "patterns");
  if (!pats.is_object()) throw Error(ErrorKind::kParse, "\"patterns\" must be an object");
  std::vector<NamedPattern> patterns;
  for (const auto& [name, colors] : pats.items()) {
    if (!colors.is_array()) {
      throw Error(ErrorKind::kParse, "pattern \"" + name + "\" must be an array");
    }
    Pattern p;
    for (const auto& c : colors) {
      p.colors.push_back(static_cast<int>(as_int(c, "pattern \"" + name + "\" entry")));
    }
    patterns.push_back({name, std::move(p)});
  }

  const Json& cols = field(doc, "columns");
  if (!cols.is_array()) throw Error(ErrorKind::kParse, "\"columns\" must be an array");
  std::vector<std::string> columns;
  for (const auto& c : cols) {
    if (!c.is_string()) throw Error(ErrorKind::kParse, "\"columns\" entries must be strings");
    columns.push_back(c.get<std::string>());
  }

  const Json& sh = field(doc, "shifts");
  if (!sh.is_array()) throw Error(ErrorKind::kParse, "\"shifts\" must be an array");
  std::vector<std::int64_t> shifts;
  for (const auto& s : sh) shifts.push_back(as_int(s, "\"shifts\" entry"));

  return {ColoringSchema(DistanceGraphSpec(k, t), std::move(patterns), columns,
                         std::move(shifts)),
          std::move(seq)};
}

std::string report_to_json(const VerificationReport& report) {
  Json out;
  if (report.valid()) {
    out["verdict"] = "valid";
    return out.dump();
  }
  const Violation& v = *report.violation;
  out["verdict"] = "invalid";
  out["kind"] = std::string(to_string(v.kind));
  out["a"] = v.a;
  out["b"] = v.b;
  out["color"] = v.color;
  out["required"] = v.required;
  out["actual"] = v.actual;
  return out.dump();
}

std::string outcome_to_json(const SearchOutcome& outcome) {
  Json out;
  out["status"] = std::string(to_string(outcome.status));
  out["window"] = outcome.window;
  out["nodes"] = outcome.nodes;
  if (outcome.status == SearchStatus::kSat) {
    Json witness = Json::array();
    for (std::size_t n = 0; n < outcome.witness.size(); ++n) {
      witness.push_back({{"n", n}, {"color", outcome.witness[n]}});
    }
    out["witness"] = std::move(witness);
  }
  return out.dump();
}

std::string chi_to_json(const ChiResult& result, const PackingSequence& seq, std::int64_t k,
                        std::int64_t t) {
  Json out;
  out["k"] = k;
  out["t"] = t;
  out["sequence"] = seq.to_string();
  out["chi"] = result.value;
  out["source"] = result.source;
  out["constructive"] = result.constructive;
  return out.dump();
}

ExplicitColoring parse_explicit_csv(std::string_view text) {
  ExplicitColoring out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto bad = [&] {
      return Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected n,color");
    };
    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) throw bad();
    std::int64_t n = 0;
    int color = 0;
    const std::string_view lhs = line.substr(0, comma);
    std::string_view rhs = line.substr(comma + 1);
    while (!rhs.empty() && rhs.front() == ' ') rhs.remove_prefix(1);
    const auto r1 = std::from_chars(lhs.data(), lhs.data() + lhs.size(), n);
    const auto r2 = std::from_chars(rhs.data(), rhs.data() + rhs.size(), color);
    if (r1.ec != std::errc{} || r1.ptr != lhs.data() + lhs.size() || r2.ec != std::errc{} ||
        r2.ptr != rhs.data() + rhs.size()) {
      throw bad();
    }
    if (!out.emplace(n, color).second) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": vertex " +
                                         std::to_string(n) + " listed twice");
    }
  }
  return out;
}

}  // namespace spackd
