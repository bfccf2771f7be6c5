#include <charconv>
#include <sstream>

#include "vcdim/cli.hpp"

namespace vcdim::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint32_t kMissing = ~std::uint32_t{0};

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ", ";
      s += scalar_text(v[i]);
    }
    return s + "]";
  }
  return v.dump();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InputError("document: " + what + " is not an integer: '" + s + "'");
  }
  return v;
}

Vertex parse_id(const std::string& s, const std::string& what) {
  const long long v = parse_int(s, what);
  if (v < 1 || v > 0xFFFFFFFFLL) throw InputError("document: " + what + " must be a positive id");
  return static_cast<Vertex>(v - 1);
}

std::uint64_t parse_pattern(const std::string& key, std::size_t bits) {
  if (key.size() != bits) {
    throw InputError("document: pattern \"" + key + "\" should have " + std::to_string(bits) +
                     " bits");
  }
  std::uint64_t p = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (key[i] == '1') {
      p |= std::uint64_t{1} << i;
    } else if (key[i] != '0') {
      throw InputError("document: pattern \"" + key + "\" is not a bit string");
    }
  }
  return p;
}

void set_witness(ShatterCertificate& cert, const std::string& key, Vertex id) {
  const std::uint64_t p = parse_pattern(key, cert.shattered_set.size());
  if (cert.witnesses[p] != kMissing) throw InputError("document: pattern \"" + key + "\" listed twice");
  cert.witnesses[p] = id;
}

ShatterCertificate empty_certificate(std::vector<Vertex> set) {
  if (set.size() >= 32) throw InputError("document: shattered set too large");
  ShatterCertificate cert;
  cert.witnesses.assign(std::size_t{1} << set.size(), kMissing);
  cert.shattered_set = std::move(set);
  return cert;
}

Document parse_json_document(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("document: ") + e.what());
  }
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  Document doc;
  doc.vc_dimension.reset();
  if (j.contains("vc_dimension")) {
    if (!j["vc_dimension"].is_number_integer()) throw InputError("document: vc_dimension is not an integer");
    doc.vc_dimension = j["vc_dimension"].get<int>();
  }
  if (j.contains("shattered_set")) {
    std::vector<Vertex> set;
    for (const auto& v : j["shattered_set"]) {
      if (!v.is_number_integer()) throw InputError("document: shattered_set holds a non-integer");
      set.push_back(parse_id(std::to_string(v.get<long long>()), "shattered_set entry"));
    }
    ShatterCertificate cert = empty_certificate(std::move(set));
    if (j.contains("witnesses")) {
      for (const auto& [key, v] : j["witnesses"].items()) {
        if (!v.is_number_integer()) throw InputError("document: witness id is not an integer");
        set_witness(cert, key, parse_id(std::to_string(v.get<long long>()), "witness id"));
      }
    }
    doc.certificate = std::move(cert);
  }
  bool after_vc = false;
  for (const auto& [key, v] : j.items()) {
    if (key == "vc_dimension") {
      after_vc = true;
    } else if (key != "shattered_set" && key != "witnesses") {
      (after_vc ? doc.extra : doc.header).emplace_back(key, v);
    }
  }
  return doc;
}

}  // namespace

std::string render_text(const Document& doc) {
  std::ostringstream out;
  for (const auto& [key, value] : doc.header) out << key << ": " << scalar_text(value) << '\n';
  if (doc.vc_dimension) out << "vc_dimension: " << *doc.vc_dimension << '\n';
  for (const auto& [key, value] : doc.extra) out << key << ": " << scalar_text(value) << '\n';
  if (doc.certificate) {
    const ShatterCertificate& cert = *doc.certificate;
    out << "shattered_set: [";
    for (std::size_t i = 0; i < cert.shattered_set.size(); ++i) {
      out << (i > 0 ? ", " : "") << cert.shattered_set[i] + 1;
    }
    out << "]\nwitnesses:\n";
    for (std::size_t p = 0; p < cert.witnesses.size(); ++p) {
      out << "  \"" << pattern_string(p, cert.size()) << "\": " << cert.witnesses[p] + 1 << '\n';
    }
  }
  return out.str();
}

ordered_json render_json(const Document& doc) {
  ordered_json j = ordered_json::object();
  for (const auto& [key, value] : doc.header) j[key] = value;
  if (doc.vc_dimension) j["vc_dimension"] = *doc.vc_dimension;
  for (const auto& [key, value] : doc.extra) j[key] = value;
  if (doc.certificate) {
    const ShatterCertificate& cert = *doc.certificate;
    ordered_json set = ordered_json::array();
    for (Vertex v : cert.shattered_set) set.push_back(v + 1);
    ordered_json witnesses = ordered_json::object();
    for (std::size_t p = 0; p < cert.witnesses.size(); ++p) {
      witnesses[pattern_string(p, cert.size())] = cert.witnesses[p] + 1;
    }
    j["shattered_set"] = std::move(set);
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

Document parse_document(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json_document(text);

  Document doc;
  doc.vc_dimension.reset();
  bool have_vc = false;
  bool in_witnesses = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const bool indented = raw[0] == ' ' || raw[0] == '\t';
    if (in_witnesses && indented) {
      // "  \"0101\": 7"
      const auto close = line.find('"', 1);
      if (line[0] != '"' || close == std::string::npos || line.compare(close + 1, 1, ":") != 0) {
        throw InputError("document line " + std::to_string(line_no) + ": malformed witness entry");
      }
      if (!doc.certificate) throw InputError("document: witnesses listed before shattered_set");
      set_witness(*doc.certificate, line.substr(1, close - 1),
                  parse_id(trim(line.substr(close + 2)), "witness id"));
      continue;
    }
    in_witnesses = false;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw InputError("document line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    const std::string key = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (key == "vc_dimension") {
      doc.vc_dimension = static_cast<int>(parse_int(value, "vc_dimension"));
      have_vc = true;
    } else if (key == "shattered_set") {
      if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
        throw InputError("document line " + std::to_string(line_no) + ": shattered_set must be a [list]");
      }
      std::vector<Vertex> set;
      std::istringstream items(value.substr(1, value.size() - 2));
      std::string item;
      while (std::getline(items, item, ',')) {
        item = trim(item);
        if (!item.empty()) set.push_back(parse_id(item, "shattered_set entry"));
      }
      doc.certificate = empty_certificate(std::move(set));
    } else if (key == "witnesses") {
      in_witnesses = true;
    } else {
      (have_vc ? doc.extra : doc.header).emplace_back(key, value);
    }
  }
  return doc;
}

}  // namespace vcdim::cli
