#include "fourfold/manifold.hpp"

#include <map>
#include <numeric>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {

std::string SymplecticPiece::generator_name() const {
  if (c1_divisibility == 0) return {};
  return (c1_divisibility == 1 ? "c1(" : "f(") + name + ")";
}

std::int64_t SymplecticPiece::generator_square() const {
  if (c1_divisibility == 0) return 0;
  return c1_squared / (c1_divisibility * c1_divisibility);
}

CohClass SymplecticPiece::c1() const {
  std::vector<SymplecticPiece> self{*this};
  BasisPtr basis = class_basis(self, 0);
  if (c1_divisibility == 0) return CohClass(basis);
  return CohClass::generator(basis, generator_name(), c1_divisibility);
}

std::vector<std::string> SymplecticPiece::validate() const {
  std::vector<std::string> issues;
  const std::int64_t gauss = 2 * euler() + 3 * signature();
  if (b_plus < 0 || b_minus < 0) issues.push_back(name + ": negative Betti number");
  if (c1_squared != gauss)
    issues.push_back(name + ": c1^2 = " + std::to_string(c1_squared) + " but 2chi+3tau = " + std::to_string(gauss));
  if (b_plus % 2 == 0) issues.push_back(name + ": b+ = " + std::to_string(b_plus) + " is even (Todd genus not integral)");
  if (c1_divisibility < 0) issues.push_back(name + ": negative c1 divisibility");
  if (c1_divisibility == 0 && c1_squared != 0) issues.push_back(name + ": c1 = 0 but c1^2 != 0");
  if (c1_divisibility > 0 && c1_squared % (c1_divisibility * c1_divisibility) != 0)
    issues.push_back(name + ": c1^2 not divisible by the square of the c1 divisibility");
  return issues;
}

std::vector<std::string> ManifoldSpec::validate() const {
  std::vector<std::string> issues;
  auto say = [&](const std::string& s) { issues.push_back(label + ": " + s); };
  if (b_plus < 0 || b_minus < 0) say("negative Betti number");
  if (form.rank() != b_plus + b_minus)
    say("form rank " + std::to_string(form.rank()) + " != b+ + b- = " + std::to_string(b_plus + b_minus));
  if (form.signature() != signature())
    say("form signature " + std::to_string(form.signature()) + " != tau = " + std::to_string(signature()));
  if (form.is_even() != spin) say(std::string("form parity ") + (form.is_even() ? "even" : "odd") + " but spin = " + (spin ? "true" : "false"));
  if (blowups < 0) say("negative blow-up count");
  if (blowups > 0 && spin) say("blown-up manifold cannot be spin");
  for (const auto& p : pieces)
    for (auto& s : p.validate()) issues.push_back(label + ": " + s);
  return issues;
}

bool ManifoldSpec::same_invariants(const ManifoldSpec& o) const {
  return b_plus == o.b_plus && b_minus == o.b_minus && spin == o.spin && form == o.form && pieces == o.pieces &&
         blowups == o.blowups && einstein_known == o.einstein_known;
}

ManifoldSpec sphere() {
  ManifoldSpec s;
  s.label = "S4";
  return s;
}

ManifoldSpec connected_sum(const ManifoldSpec& a, const ManifoldSpec& b) {
  ManifoldSpec r;
  r.label = a.label + " # " + b.label;
  r.b_plus = checked::add(a.b_plus, b.b_plus);
  r.b_minus = checked::add(a.b_minus, b.b_minus);
  r.spin = a.spin && b.spin;
  r.form = direct_sum(a.form, b.form);
  r.pieces = a.pieces;
  r.pieces.insert(r.pieces.end(), b.pieces.begin(), b.pieces.end());
  r.blowups = checked::add(a.blowups, b.blowups);
  return r;
}

ManifoldSpec blow_up(const ManifoldSpec& a, std::int64_t k) {
  if (k < 0) throw ParameterOutOfRange("blow-up count must be non-negative");
  if (k == 0) return a;
  ManifoldSpec r = a;
  r.label = a.label + " # " + (k == 1 ? std::string() : std::to_string(k) + "*") + "CP2bar";
  r.b_minus = checked::add(a.b_minus, k);
  r.spin = false;
  r.form.neg_diag = checked::add(r.form.neg_diag, k);
  r.blowups = checked::add(a.blowups, k);
  r.einstein_known.reset();
  return r;
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

CharNumbers char_numbers(const ManifoldSpec& a) {
  CharNumbers c;
  c.euler = a.euler();
  c.signature = a.signature();
  c.two_chi_plus_three_tau = checked::add(checked::mul(2, c.euler), checked::mul(3, c.signature));
  const std::int64_t num = c.euler + c.signature;
  const std::int64_t g = std::gcd(num, std::int64_t{4});
  c.todd_genus = {num / g, 4 / g};
  return c;
}

bool homeomorphic(const ManifoldSpec& a, const ManifoldSpec& b) { return is_isomorphic(a.form, b.form); }

std::vector<std::string> piece_generator_names(const std::vector<SymplecticPiece>& pieces) {
  std::map<std::string, int> seen;
  std::vector<std::string> labels;
  labels.reserve(pieces.size());
  for (const auto& p : pieces) {
    const int n = ++seen[p.name];
    labels.push_back(n == 1 ? p.name : p.name + "[" + std::to_string(n) + "]");
  }
  return labels;
}

BasisPtr class_basis(const std::vector<SymplecticPiece>& pieces, std::int64_t blowups) {
  auto basis = std::make_shared<GeneratorBasis>();
  const auto labels = piece_generator_names(pieces);
  int block = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i, ++block) {
    const SymplecticPiece& p = pieces[i];
    if (p.c1_divisibility == 0) continue;
    SymplecticPiece renamed = p;
    renamed.name = labels[i];
    Generator g;
    g.name = renamed.generator_name();
    g.self_intersection = p.generator_square();
    g.divisibility = 1;
    g.block = block;
    g.opaque = p.c1_divisibility == 1;
    basis->add(std::move(g));
  }
  for (std::int64_t j = 1; j <= blowups; ++j, ++block) {
    Generator e;
    e.name = "E" + std::to_string(j);
    e.self_intersection = -1;
    e.block = block;
    basis->add(std::move(e));
  }
  return basis;
}

}  // namespace fourfold
