#include "fourfold/monopole.hpp"

#include <algorithm>
#include <stdexcept>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/parallel.hpp"

namespace fourfold {

std::string_view to_string(MonopoleSource s) {
  return s == MonopoleSource::BauerDouble ? "BauerDouble" : "BauerTriple";
}

MonopoleSet::MonopoleSet(BasisPtr basis, std::vector<Axis> axes, MonopoleSource source,
                         AdmissibilityEvidence evidence)
    : basis_(std::move(basis)), axes_(std::move(axes)), source_(source), evidence_(std::move(evidence)) {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i].coefficient <= 0) throw std::invalid_argument("monopole axis coefficient must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (axes_[j].generator == axes_[i].generator)
        throw std::invalid_argument("monopole axes must use distinct generators");
  }
}

std::size_t MonopoleSet::size() const {
  if (axes_.size() >= 63) throw std::length_error("monopole set too large to count");
  return std::size_t{1} << axes_.size();
}

bool MonopoleSet::contains(const CohClass& c) const {
  if (c.basis() != basis_ && !(*c.basis() == *basis_)) return false;
  if (c.coefficients().size() != axes_.size()) return false;
  for (const auto& axis : axes_) {
    const std::int64_t v = c.coefficient(axis.generator);
    if (v != axis.coefficient && v != -axis.coefficient) return false;
  }
  return true;
}

std::vector<CohClass> MonopoleSet::classes(std::size_t limit) const {
  if (axes_.size() >= 63 || size() > limit)
    throw std::length_error("monopole set has 2^" + std::to_string(axes_.size()) + " classes, over the limit");
  std::vector<CohClass> out;
  out.reserve(size());
  for (std::size_t mask = 0; mask < size(); ++mask) {
    CohClass c(basis_);
    for (std::size_t t = 0; t < axes_.size(); ++t) {
      const std::int64_t sign = (mask >> t) & 1 ? -1 : 1;
      c = c + CohClass::generator(basis_, basis_->at(axes_[t].generator).name, sign * axes_[t].coefficient);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CohClass& a, const CohClass& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<std::string> MonopoleSet::to_strings(std::size_t limit) const {
  std::vector<std::string> out;
  for (const auto& c : classes(limit)) out.push_back(c.to_string());
  return out;
}

void require_admissible(const SymplecticPiece& piece) {
  const auto issues = piece.validate();
  if (!issues.empty()) throw InadmissiblePiece("inconsistent piece data: " + issues.front());
  if (piece.b_plus % 4 != 3)
    throw InadmissiblePiece(piece.name + " has b+ = " + std::to_string(piece.b_plus) + ", not 3 mod 4");
}

MonopoleSet bauer_monopole_set(const std::vector<SymplecticPiece>& pieces, std::int64_t blowups) {
  if (pieces.size() > 3) throw TooManyPieces("at most three symplectic pieces are supported, got " +
                                             std::to_string(pieces.size()));
  if (pieces.size() < 2) throw ParameterOutOfRange("need two or three symplectic pieces");
  if (blowups < 0) throw ParameterOutOfRange("blow-up count must be non-negative");
  for (const auto& p : pieces) require_admissible(p);

  BasisPtr basis = class_basis(pieces, blowups);
  const auto labels = piece_generator_names(pieces);
  std::vector<MonopoleSet::Axis> axes;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].c1_divisibility == 0) continue;
    SymplecticPiece renamed = pieces[i];
    renamed.name = labels[i];
    axes.push_back({*basis->find(renamed.generator_name()), pieces[i].c1_divisibility});
  }
  for (std::int64_t j = 1; j <= blowups; ++j) axes.push_back({*basis->find("E" + std::to_string(j)), 1});

  AdmissibilityEvidence evidence;
  evidence.piece_names = labels;
  for (const auto& p : pieces) evidence.piece_b_plus.push_back(p.b_plus);
  evidence.blowups = blowups;
  return MonopoleSet(std::move(basis), std::move(axes),
                     pieces.size() == 2 ? MonopoleSource::BauerDouble : MonopoleSource::BauerTriple,
                     std::move(evidence));
}

Bandwidth bandwidth(const std::vector<CohClass>& classes) {
  Bandwidth best;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i] == classes[j]) continue;
      const std::int64_t n = (classes[i] - classes[j]).divisibility() / 2;
      if (n > best.lower_bound) {
        best.lower_bound = n;
        best.witness = std::make_pair(classes[i], classes[j]);
      }
    }
  }
  return best;
}

Bandwidth bandwidth(const MonopoleSet& s) {
  Bandwidth best;
  const auto& axes = s.axes();
  std::optional<std::size_t> arg;
  for (std::size_t t = 0; t < axes.size(); ++t) {
    const std::int64_t w = checked::mul(axes[t].coefficient, s.basis()->at(axes[t].generator).divisibility);
    if (w > best.lower_bound) {
      best.lower_bound = w;
      arg = t;
    }
  }
  if (arg) {
    CohClass a(s.basis());
    for (const auto& axis : axes)
      a = a + CohClass::generator(s.basis(), s.basis()->at(axis.generator).name, axis.coefficient);
    const auto& flip = axes[*arg];
    CohClass b = a - CohClass::generator(s.basis(), s.basis()->at(flip.generator).name, 2 * flip.coefficient);
    best.witness = std::make_pair(std::move(a), std::move(b));
  }
  return best;
}

std::int64_t bf_index(std::int64_t c1_squared, std::int64_t tau) {
  const std::int64_t diff = checked::sub(c1_squared, tau);
  if (diff % 8 != 0)
    throw CongruenceViolation("c1^2 = " + std::to_string(c1_squared) + " and tau = " + std::to_string(tau) +
                              " are not congruent mod 8");
  return diff / 8;
}

FamilyCertificate family_certificate_from(const std::vector<FamilyInstance>& instances,
                                          const std::vector<std::int64_t>& ells) {
  if (instances.size() != ells.size()) throw std::invalid_argument("one family instance per l value expected");
  FamilyCertificate cert;
  cert.rows.resize(ells.size());
  detail::parallel_for(
      ells.size(),
      [&](std::size_t i) {
        FamilyRow& row = cert.rows[i];
        row.ell = ells[i];
        row.label = instances[i].label;
        row.bandwidth = bandwidth(bauer_monopole_set(instances[i].pieces, instances[i].blowups));
      },
      8);

  std::vector<const FamilyRow*> sorted;
  for (const auto& r : cert.rows) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(), [](const FamilyRow* a, const FamilyRow* b) { return a->ell < b->ell; });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const FamilyRow* a, const FamilyRow* b) { return a->ell == b->ell; }),
               sorted.end());
  if (sorted.size() >= 2) {
    bool ok = true;
    const FamilyRow& first = *sorted[0];
    const FamilyRow& second = *sorted[1];
    // bound(l) = first + (l - l0) * slope with slope = dB/dl; compare cross-multiplied.
    const std::int64_t db = second.bandwidth.lower_bound - first.bandwidth.lower_bound;
    const std::int64_t dl = second.ell - first.ell;
    for (std::size_t i = 1; i < sorted.size() && ok; ++i) {
      const FamilyRow& prev = *sorted[i - 1];
      const FamilyRow& cur = *sorted[i];
      if (cur.bandwidth.lower_bound <= prev.bandwidth.lower_bound) ok = false;
      if (checked::mul(cur.bandwidth.lower_bound - first.bandwidth.lower_bound, dl) !=
          checked::mul(db, cur.ell - first.ell))
        ok = false;
    }
    cert.unbounded_certified = ok;
  }
  return cert;
}

}  // namespace fourfold
