#include "fourfold/obstruction.hpp"

#include <sstream>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/monopole.hpp"

namespace fourfold {

std::string_view to_string(HitchinThorpe h) {
  switch (h) {
    case HitchinThorpe::Violated:
      return "Violated";
    case HitchinThorpe::Boundary:
      return "Boundary";
    case HitchinThorpe::StrictlySatisfied:
      return "StrictlySatisfied";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) { return s == VerdictStatus::Obstructed ? "Obstructed" : "Unknown"; }

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::SumOfTwo:
      return "two-piece sum with blow-ups";
    case Theorem::SumOfThree:
      return "three-piece sum with blow-ups";
    case Theorem::CorollaryTwo:
      return "two-piece sum, c1^2 total <= 12";
    case Theorem::CorollaryThree:
      return "three-piece sum, c1^2 total <= 24";
    case Theorem::SinglePieceBlowup:
      return "single symplectic piece with blow-ups";
  }
  return "?";
}

HitchinThorpe hitchin_thorpe(std::int64_t euler, std::int64_t signature) {
  const std::int64_t lhs = checked::mul(2, euler);
  const std::int64_t rhs = checked::mul(3, checked::abs(signature));
  if (lhs < rhs) return HitchinThorpe::Violated;
  if (lhs == rhs) return HitchinThorpe::Boundary;
  return HitchinThorpe::StrictlySatisfied;
}

HitchinThorpe hitchin_thorpe(const ManifoldSpec& a) { return hitchin_thorpe(a.euler(), a.signature()); }

bool theorem_threshold(std::int64_t piece_count, std::int64_t sum_c1_squared, std::int64_t k) {
  const std::int64_t lhs = checked::mul(3, checked::add(k, checked::mul(4, piece_count - 1)));
  return lhs >= sum_c1_squared;
}

ManifoldSpec assemble(const std::vector<SymplecticPiece>& pieces, std::int64_t k) {
  ManifoldSpec m = sphere();
  bool first = true;
  for (const auto& p : pieces) {
    ManifoldSpec s;
    s.label = p.name;
    s.b_plus = p.b_plus;
    s.b_minus = p.b_minus;
    // Spin-ness is not recorded on a piece; the form only needs rank and
    // signature to be right for the characteristic numbers used here.
    s.spin = false;
    s.form = UnimodularForm::diagonal(p.b_plus, p.b_minus);
    s.pieces = {p};
    m = first ? s : connected_sum(m, s);
    first = false;
  }
  return blow_up(m, k);
}

namespace {

Verdict make_verdict(const std::vector<SymplecticPiece>& pieces, std::int64_t k, Theorem theorem) {
  Verdict v;
  v.theorem = theorem;
  v.k = k;
  std::int64_t sum = 0;
  for (const auto& p : pieces) {
    v.pieces.push_back(p.name);
    v.c1_squares.push_back(p.c1_squared);
    sum = checked::add(sum, p.c1_squared);
  }
  const auto count = static_cast<std::int64_t>(pieces.size());
  v.lhs = checked::mul(3, checked::add(k, checked::mul(4, count - 1)));
  v.rhs = sum;
  const bool needs_blowup = theorem == Theorem::SinglePieceBlowup && k < 1;
  v.status = !needs_blowup && theorem_threshold(count, sum, k) ? VerdictStatus::Obstructed : VerdictStatus::Unknown;
  v.hitchin_thorpe = hitchin_thorpe(assemble(pieces, k));
  if (needs_blowup)
    v.notes.push_back("the single-piece bound needs at least one blow-up");
  else if (v.status == VerdictStatus::Unknown)
    v.notes.push_back("threshold not met; the method gives no conclusion");
  return v;
}

}  // namespace

Verdict einstein_obstruction(const std::vector<SymplecticPiece>& pieces, std::int64_t k) {
  // Admissibility and arity are exactly those of the monopole-class generator.
  (void)bauer_monopole_set(pieces, k);
  return make_verdict(pieces, k, pieces.size() == 2 ? Theorem::SumOfTwo : Theorem::SumOfThree);
}

Verdict corollary_non(const std::vector<SymplecticPiece>& pieces) {
  Verdict v = einstein_obstruction(pieces, 0);
  v.theorem = pieces.size() == 2 ? Theorem::CorollaryTwo : Theorem::CorollaryThree;
  return v;
}

Verdict blowup_obstruction(const SymplecticPiece& piece, std::int64_t k) {
  if (k < 0) throw ParameterOutOfRange("blow-up count must be non-negative");
  const auto issues = piece.validate();
  if (!issues.empty()) throw InadmissiblePiece("inconsistent piece data: " + issues.front());
  if (piece.b_plus < 2) throw InadmissiblePiece(piece.name + " has b+ < 2");
  return make_verdict({piece}, k, Theorem::SinglePieceBlowup);
}

bool Verdict::verify() const {
  if (pieces.size() != c1_squares.size() || pieces.empty() || pieces.size() > 3 || k < 0) return false;
  std::int64_t sum = 0;
  for (auto c : c1_squares) sum = checked::add(sum, c);
  const auto count = static_cast<std::int64_t>(pieces.size());
  const std::int64_t expect_lhs = checked::mul(3, checked::add(k, checked::mul(4, count - 1)));
  if (lhs != expect_lhs || rhs != sum) return false;
  const bool holds = lhs >= rhs && (theorem != Theorem::SinglePieceBlowup || k >= 1);
  return status == VerdictStatus::Obstructed ? holds : !holds;
}

std::string Verdict::certificate() const {
  if (pieces.empty()) return "no symplectic piece";
  std::ostringstream out;
  const auto count = static_cast<std::int64_t>(pieces.size());
  out << "3*(" << k << "+" << 4 * (count - 1) << ") = " << lhs << (lhs >= rhs ? " >= " : " < ") << rhs << " = ";
  for (std::size_t i = 0; i < c1_squares.size(); ++i) {
    if (i) out << "+";
    out << c1_squares[i];
  }
  return out.str();
}

std::int64_t gauss_bonnet_defect(const ManifoldSpec& a) { return char_numbers(a).two_chi_plus_three_tau; }

}  // namespace fourfold
