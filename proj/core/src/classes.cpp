#include "fourfold/classes.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// NAME := ident ['(' [^()]* ')'] ['[' digits ']']
std::size_t scan_name(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || !is_name_start(text[pos])) return pos;
  std::size_t p = pos + 1;
  while (p < text.size() && is_name_char(text[p])) ++p;
  if (p < text.size() && text[p] == '(') {
    std::size_t close = text.find(')', p);
    if (close == std::string_view::npos || text.substr(p + 1, close - p - 1).find('(') != std::string_view::npos)
      return pos;
    p = close + 1;
  }
  if (p < text.size() && text[p] == '[') {
    std::size_t q = p + 1;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
    if (q == p + 1 || q >= text.size() || text[q] != ']') return pos;
    p = q + 1;
  }
  return p;
}

}  // namespace

std::size_t GeneratorBasis::add(Generator g) {
  if (scan_name(g.name, 0) != g.name.size() || g.name.empty())
    throw std::invalid_argument("malformed generator name '" + g.name + "'");
  if (find(g.name)) throw std::invalid_argument("duplicate generator name '" + g.name + "'");
  if (g.divisibility <= 0) throw std::invalid_argument("generator divisibility must be positive");
  generators_.push_back(std::move(g));
  return generators_.size() - 1;
}

void GeneratorBasis::declare_pairing(std::size_t i, std::size_t j, std::int64_t value) {
  if (i == j) throw std::invalid_argument("use self_intersection for the square of a generator");
  const Generator& a = at(i);
  const Generator& b = at(j);
  if (a.block != b.block) throw std::invalid_argument("generators in distinct blocks pair to zero");
  if (a.opaque && b.opaque)
    throw std::invalid_argument("pairing between opaque generators '" + a.name + "' and '" + b.name +
                                "' cannot be declared");
  pairings_[std::minmax(i, j)] = value;
}

std::optional<std::size_t> GeneratorBasis::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::int64_t> GeneratorBasis::pairing(std::size_t i, std::size_t j) const {
  if (i == j) return at(i).self_intersection;
  if (at(i).block != at(j).block) return 0;
  auto it = pairings_.find(std::minmax(i, j));
  if (it == pairings_.end()) return std::nullopt;
  return it->second;
}

int GeneratorBasis::next_block() const {
  int b = 0;
  for (const auto& g : generators_) b = std::max(b, g.block + 1);
  return b;
}

bool operator==(const GeneratorBasis& a, const GeneratorBasis& b) {
  if (a.pairings_ != b.pairings_ || a.generators_.size() != b.generators_.size()) return false;
  for (std::size_t i = 0; i < a.generators_.size(); ++i) {
    const Generator& x = a.generators_[i];
    const Generator& y = b.generators_[i];
    if (x.name != y.name || x.self_intersection != y.self_intersection || x.divisibility != y.divisibility ||
        x.block != y.block || x.opaque != y.opaque)
      return false;
  }
  return true;
}

CohClass::CohClass(BasisPtr basis) : basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("null generator basis");
}

CohClass CohClass::generator(BasisPtr basis, std::string_view name, std::int64_t coefficient) {
  CohClass c(std::move(basis));
  auto idx = c.basis_->find(name);
  if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  c.set(*idx, coefficient);
  return c;
}

CohClass CohClass::parse(BasisPtr basis, std::string_view text) {
  CohClass c(std::move(basis));
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0') {
    std::size_t save = pos++;
    skip_ws();
    if (pos == text.size()) return c;
    pos = save;
  }
  bool first = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (first) throw SyntaxError("empty class expression", pos);
      break;
    }
    std::int64_t sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw SyntaxError("expected '+' or '-'", pos);
    }
    std::int64_t coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = checked::add(checked::mul(coeff, 10), text[pos] - '0');
        ++pos;
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    const std::size_t name_end = scan_name(text, pos);
    if (name_end == pos) throw SyntaxError("expected generator name", pos);
    const std::string_view name = text.substr(pos, name_end - pos);
    auto idx = c.basis_->find(name);
    if (!idx) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    c.set(*idx, checked::add(c.coefficient(*idx), checked::mul(sign, coeff)));
    pos = name_end;
    first = false;
  }
  return c;
}

std::int64_t CohClass::coefficient(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0 : it->second;
}

void CohClass::set(std::size_t index, std::int64_t value) {
  if (value == 0)
    coeffs_.erase(index);
  else
    coeffs_[index] = value;
}

void CohClass::check_same_basis(const CohClass& other) const {
  if (basis_ != other.basis_ && !(*basis_ == *other.basis_))
    throw BasisMismatch("classes live over different generator bases");
}

std::int64_t intersect(const CohClass& a, const CohClass& b) {
  if (a.basis() != b.basis() && !(*a.basis() == *b.basis()))
    throw BasisMismatch("classes live over different generator bases");
  const GeneratorBasis& basis = *a.basis();
  std::int64_t total = 0;
  for (const auto& [i, ci] : a.coefficients()) {
    for (const auto& [j, cj] : b.coefficients()) {
      if (basis.at(i).block != basis.at(j).block) continue;
      auto p = basis.pairing(i, j);
      if (!p)
        throw UnknownPairing("pairing of '" + basis.at(i).name + "' with '" + basis.at(j).name +
                             "' is not declared");
      total = checked::add(total, checked::mul(checked::mul(ci, cj), *p));
    }
  }
  return total;
}

std::int64_t CohClass::square() const { return intersect(*this, *this); }

std::int64_t CohClass::divisibility() const {
  std::int64_t d = 0;
  for (const auto& [i, c] : coeffs_) d = std::gcd(d, checked::mul(c, basis_->at(i).divisibility));
  return d;
}

std::string CohClass::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    if (mag != 1) out << mag << '*';
    out << basis_->at(i).name;
    first = false;
  }
  return out.str();
}

CohClass CohClass::operator-() const { return -1 * *this; }

CohClass CohClass::operator+(const CohClass& other) const {
  check_same_basis(other);
  CohClass r = *this;
  for (const auto& [i, c] : other.coeffs_) r.set(i, checked::add(r.coefficient(i), c));
  return r;
}

CohClass CohClass::operator-(const CohClass& other) const { return *this + (-other); }

CohClass operator*(std::int64_t n, const CohClass& c) {
  CohClass r(c.basis_);
  for (const auto& [i, v] : c.coeffs_) r.set(i, checked::mul(n, v));
  return r;
}

bool operator==(const CohClass& a, const CohClass& b) {
  return (a.basis_ == b.basis_ || *a.basis_ == *b.basis_) && a.coeffs_ == b.coeffs_;
}

bool operator<(const CohClass& a, const CohClass& b) { return a.coeffs_ < b.coeffs_; }

}  // namespace fourfold
