#include "fourfold/catalog.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

std::string join_params(const std::vector<std::int64_t>& params, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(params[i]);
  }
  return out;
}

void require_arity(std::string_view name, const std::vector<std::int64_t>& params, std::size_t arity) {
  if (params.size() != arity)
    throw ParameterOutOfRange(std::string(name) + " takes " + std::to_string(arity) + " parameter(s), got " +
                              std::to_string(params.size()));
  for (auto p : params)
    if (p > kMaxParameter || p < -kMaxParameter)
      throw ParameterOutOfRange(std::string(name) + ": parameter " + std::to_string(p) + " exceeds " +
                                std::to_string(kMaxParameter));
}

// Double cover of CP2 branched along a smooth curve of degree 2p:
// chi = 4p^2 - 6p + 6, tau = 2 - 2p^2, c1^2 = 2(p-3)^2.
struct BranchedCoverNumbers {
  std::int64_t euler, signature, c1_squared;
};

BranchedCoverNumbers branched_cover_numbers(std::int64_t p) {
  return {4 * p * p - 6 * p + 6, 2 - 2 * p * p, 2 * (p - 3) * (p - 3)};
}

}  // namespace

std::string CatalogRecord::label() const {
  if (params.empty()) return name;
  return name + "_" + join_params(params, ",");
}

std::string CatalogRecord::to_line() const {
  std::ostringstream out;
  out << "name=" << name << " params=" << (params.empty() ? "-" : join_params(params, ",")) << " b_plus=" << b_plus
      << " b_minus=" << b_minus << " spin=" << (spin ? "true" : "false")
      << " c1_squared=" << (c1_squared ? std::to_string(*c1_squared) : "-") << " c1_divisibility=" << c1_divisibility
      << " provenance=\"" << provenance << "\" einstein_known=" << (einstein_known ? *einstein_known : "-");
  return out.str();
}

const std::vector<std::string>& Catalog::builtin_names() {
  static const std::vector<std::string> names{"K3", "S2xS2", "CP2", "CP2bar", "X", "Y", "Z", "R22", "BC"};
  return names;
}

CatalogRecord builtin_record(std::string_view name, const std::vector<std::int64_t>& params) {
  CatalogRecord r;
  r.name = std::string(name);
  r.params = params;
  if (name == "K3") {
    require_arity(name, params, 0);
    r.b_plus = 3;
    r.b_minus = 19;
    r.spin = true;
    r.c1_squared = 0;
    r.c1_divisibility = 0;
    r.provenance = "Kummer surface; Kaehler, c1 = 0";
    r.einstein_known = "Yau";
  } else if (name == "S2xS2") {
    require_arity(name, params, 0);
    r.b_plus = 1;
    r.b_minus = 1;
    r.spin = true;
    r.provenance = "product of spheres; form H";
  } else if (name == "CP2") {
    require_arity(name, params, 0);
    r.b_plus = 1;
    r.b_minus = 0;
    r.provenance = "complex projective plane; form <1>";
  } else if (name == "CP2bar") {
    require_arity(name, params, 0);
    r.b_plus = 0;
    r.b_minus = 1;
    r.provenance = "reversed CP2; one exceptional class E with E.E = -1";
  } else if (name == "X") {
    require_arity(name, params, 1);
    const std::int64_t k = params[0];
    if (k < 2) throw ParameterOutOfRange("X_k needs k >= 2, got " + std::to_string(k));
    r.b_plus = 4 * k + 3;
    r.b_minus = 20 * k + 3;
    r.spin = true;
    r.c1_squared = 16;
    r.c1_divisibility = 2;
    r.provenance = "Gompf symplectic spin manifold, (chi, tau) = (24k+8, -16k)";
  } else if (name == "Y") {
    require_arity(name, params, 1);
    const std::int64_t l = params[0];
    if (l < 0) throw ParameterOutOfRange("Y_l needs l >= 0, got " + std::to_string(l));
    r.b_plus = 3;
    r.b_minus = 19;
    r.spin = true;
    r.c1_squared = 0;
    r.c1_divisibility = 2 * l;
    r.provenance = "Kummer surface with a log transform of order 2l+1; c1 = 2l f, f the multiple fibre";
  } else if (name == "Z") {
    require_arity(name, params, 1);
    const std::int64_t i = params[0];
    if (i < 2) throw ParameterOutOfRange("Z_i needs i >= 2, got " + std::to_string(i));
    r.b_plus = 2 * i - 1;
    r.b_minus = 2 * i + 10;
    r.c1_squared = 8 * i - 11;
    r.c1_divisibility = 1;
    r.provenance = "Gompf symplectic manifold, Todd genus i, c1^2 = 8i-11";
  } else if (name == "R22") {
    require_arity(name, params, 0);
    r.b_plus = 3;
    r.b_minus = 14;
    r.c1_squared = 5;
    r.c1_divisibility = 1;
    r.provenance = "Gompf symplectic manifold R_{2,2}, b+ = 3, b- = 14";
  } else if (name == "BC") {
    require_arity(name, params, 1);
    const std::int64_t p = params[0];
    if (p < 6 || p % 4 != 2) throw ParameterOutOfRange("BC_p needs p >= 6 and p = 2 mod 4, got " + std::to_string(p));
    r.b_plus = p * p - 3 * p + 3;
    r.b_minus = 3 * p * p - 3 * p + 1;
    r.c1_squared = 2 * (p - 3) * (p - 3);
    r.c1_divisibility = 1;
    r.provenance = "double cover of CP2 branched over a smooth curve of degree 2p; ample canonical bundle";
    r.einstein_known = "AubinYau";
  } else {
    throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'");
  }
  return r;
}

std::vector<std::string> validate_record(const CatalogRecord& r) {
  std::vector<std::string> issues;
  const std::string label = r.label();
  auto say = [&](const std::string& s) { issues.push_back(label + ": " + s); };
  if (r.b_plus < 0 || r.b_minus < 0) {
    say("negative Betti number");
    return issues;
  }
  const std::int64_t tau = r.b_plus - r.b_minus;
  if (r.spin) {
    if (tau % 8 != 0) say("spin entry needs signature divisible by 8, got " + std::to_string(tau));
    else if (r.b_plus + r.b_minus > 0 && r.b_plus + r.b_minus == 8 * checked::abs(tau / 8))
      say("even definite intersection form is not supported");
  } else if (r.b_plus + r.b_minus == 0) {
    say("rank-zero form must be spin");
  }
  if (r.c1_squared) {
    SymplecticPiece piece{label, r.b_plus, r.b_minus, *r.c1_squared, r.c1_divisibility};
    for (auto& s : piece.validate()) issues.push_back(s);
    // c1 reduces mod 2 to w2, so it is even exactly when the entry is spin.
    const std::int64_t d = r.c1_divisibility;
    if (r.spin && d % 2 != 0) say("spin entry needs an even c1, got divisibility " + std::to_string(d));
    if (r.spin && d > 0 && *r.c1_squared % (d * d) == 0 && (*r.c1_squared / (d * d)) % 2 != 0)
      say("spin entry has a primitive c1 generator of odd square");
    if (!r.spin && d % 2 == 0) say("non-spin entry needs an odd c1, got divisibility " + std::to_string(d));
  }
  if (r.name == "CP2bar" && (r.b_plus != 0 || r.b_minus != 1 || r.spin))
    say("CP2bar must have b+ = 0, b- = 1 and be non-spin");
  if (r.name == "BC" && r.params.size() == 1) {
    const auto bc = branched_cover_numbers(r.params[0]);
    const std::int64_t chi = 2 + r.b_plus + r.b_minus;
    if (chi != bc.euler || tau != bc.signature)
      say("branched-cover cross-check failed: (chi, tau) = (" + std::to_string(chi) + ", " + std::to_string(tau) +
          "), double-cover formulas give (" + std::to_string(bc.euler) + ", " + std::to_string(bc.signature) + ")");
    if (r.c1_squared && *r.c1_squared != bc.c1_squared)
      say("branched-cover cross-check failed: c1^2 = " + std::to_string(*r.c1_squared) + ", expected 2(p-3)^2 = " +
          std::to_string(bc.c1_squared));
  }
  return issues;
}

ManifoldSpec to_manifold(const CatalogRecord& r) {
  ManifoldSpec m;
  m.label = r.label();
  m.b_plus = r.b_plus;
  m.b_minus = r.b_minus;
  m.spin = r.spin;
  m.form = form_from_invariants(r.b_plus, r.b_minus, r.spin);
  if (r.c1_squared) m.pieces.push_back({m.label, r.b_plus, r.b_minus, *r.c1_squared, r.c1_divisibility});
  m.blowups = r.name == "CP2bar" ? 1 : 0;
  m.einstein_known = r.einstein_known;
  return m;
}

std::vector<CatalogRecord> parse_catalog_text(std::string_view text) {
  std::vector<CatalogRecord> records;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto fail = [&](const std::string& why) {
      throw CatalogError("catalog line " + std::to_string(line_no) + ": " + why);
    };

    std::map<std::string, std::string> fields;
    std::size_t pos = 0;
    while (true) {
      while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos >= line.size() || line[pos] == '#') break;
      std::size_t eq = line.find('=', pos);
      if (eq == std::string_view::npos) fail("expected key=value");
      std::string key(line.substr(pos, eq - pos));
      pos = eq + 1;
      std::string value;
      if (pos < line.size() && line[pos] == '"') {
        std::size_t close = line.find('"', pos + 1);
        if (close == std::string_view::npos) fail("unterminated quote");
        value = std::string(line.substr(pos + 1, close - pos - 1));
        pos = close + 1;
      } else {
        std::size_t e = pos;
        while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
        value = std::string(line.substr(pos, e - pos));
        pos = e;
      }
      if (!fields.emplace(key, value).second) fail("duplicate field '" + key + "'");
    }
    if (fields.empty()) continue;

    auto integer = [&](const std::string& key, const std::string& value) {
      std::int64_t v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(value, &used);
      } catch (const std::exception&) {
        fail("field '" + key + "' is not an integer: '" + value + "'");
      }
      if (used != value.size()) fail("field '" + key + "' is not an integer: '" + value + "'");
      return v;
    };
    auto required = [&](const std::string& key) -> const std::string& {
      auto it = fields.find(key);
      if (it == fields.end()) fail("missing field '" + key + "'");
      return it->second;
    };

    CatalogRecord r;
    r.name = required("name");
    if (r.name.empty() || !std::isalpha(static_cast<unsigned char>(r.name[0]))) fail("bad entry name");
    for (char c : r.name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') fail("bad entry name '" + r.name + "'");
    if (auto it = fields.find("params"); it != fields.end() && it->second != "-" && !it->second.empty()) {
      std::stringstream ss(it->second);
      std::string item;
      while (std::getline(ss, item, ',')) r.params.push_back(integer("params", item));
    }
    r.b_plus = integer("b_plus", required("b_plus"));
    r.b_minus = integer("b_minus", required("b_minus"));
    const std::string& spin = required("spin");
    if (spin != "true" && spin != "false") fail("spin must be true or false");
    r.spin = spin == "true";
    if (auto it = fields.find("c1_squared"); it != fields.end() && it->second != "-")
      r.c1_squared = integer("c1_squared", it->second);
    if (auto it = fields.find("c1_divisibility"); it != fields.end() && it->second != "-")
      r.c1_divisibility = integer("c1_divisibility", it->second);
    if (auto it = fields.find("provenance"); it != fields.end()) r.provenance = it->second;
    if (auto it = fields.find("einstein_known"); it != fields.end() && it->second != "-")
      r.einstein_known = it->second;
    for (const auto& [key, value] : fields) {
      static const char* known[] = {"name",           "params",         "b_plus",     "b_minus", "spin",
                                    "c1_squared",     "c1_divisibility", "provenance", "einstein_known"};
      bool ok = false;
      for (const char* k : known) ok = ok || key == k;
      if (!ok) fail("unknown field '" + key + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

Catalog Catalog::builtin() { return Catalog{}; }

Catalog Catalog::with_overrides(std::string_view text, std::vector<std::string>& issues) {
  Catalog c;
  for (auto& r : parse_catalog_text(text)) {
    for (auto& s : validate_record(r)) issues.push_back(s);
    auto key = std::make_pair(r.name, r.params);
    c.overrides_[key] = std::move(r);
  }
  return c;
}

Catalog Catalog::from_file(const std::string& path, std::vector<std::string>& issues) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read catalog file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return with_overrides(buffer.str(), issues);
}

Catalog Catalog::from_environment(std::vector<std::string>& issues) {
  const char* path = std::getenv("FOURFOLD_CATALOG");
  if (path == nullptr || *path == '\0') return builtin();
  return from_file(path, issues);
}

bool Catalog::knows(std::string_view name) const {
  for (const auto& n : builtin_names())
    if (n == name) return true;
  for (const auto& [key, _] : overrides_)
    if (key.first == name) return true;
  return false;
}

CatalogRecord Catalog::record(std::string_view name, const std::vector<std::int64_t>& params) const {
  auto it = overrides_.find(std::make_pair(std::string(name), params));
  if (it != overrides_.end()) return it->second;
  for (const auto& n : builtin_names())
    if (n == name) return builtin_record(name, params);
  if (knows(name))
    throw ParameterOutOfRange("catalog has no entry " + std::string(name) + " with parameters (" +
                              join_params(params, ",") + ")");
  throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'");
}

ManifoldSpec Catalog::get(std::string_view name, const std::vector<std::int64_t>& params) const {
  return to_manifold(record(name, params));
}

}  // namespace fourfold
