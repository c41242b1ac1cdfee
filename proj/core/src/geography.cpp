#include "fourfold/geography.hpp"

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/parallel.hpp"

namespace fourfold {

std::string_view to_string(RegionTheorem t) {
  switch (t) {
    case RegionTheorem::Prop6:
      return "prop6";
    case RegionTheorem::Molti:
      return "molti";
    case RegionTheorem::Lots:
      return "lots";
    case RegionTheorem::Spin:
      return "spin";
  }
  return "?";
}

RegionTheorem parse_region_theorem(std::string_view tag) {
  for (auto t : {RegionTheorem::Prop6, RegionTheorem::Molti, RegionTheorem::Lots, RegionTheorem::Spin})
    if (to_string(t) == tag) return t;
  throw UnknownTheorem("unknown theorem tag '" + std::string(tag) + "' (expected prop6, molti, lots or spin)");
}

std::string_view to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::Certified:
      return "Certified";
    case WitnessStatus::NegativeBlowups:
      return "NegativeBlowups";
    case WitnessStatus::ObstructionThresholdMissed:
      return "ObstructionThresholdMissed";
    case WitnessStatus::HomeotypeMismatch:
      return "HomeotypeMismatch";
    case WitnessStatus::BandwidthTooSmall:
      return "BandwidthTooSmall";
    case WitnessStatus::HitchinThorpeNotStrict:
      return "HitchinThorpeNotStrict";
    case WitnessStatus::ParameterOutOfRange:
      return "ParameterOutOfRange";
  }
  return "?";
}

bool claimed_prop6(std::int64_t m, std::int64_t n) {
  return m >= 0 && n >= 0 && m % 2 == 1 && 3 * n > 7 * m + 24;
}

bool claimed_molti(std::int64_t m, std::int64_t n) {
  return n >= 0 && m >= 6 && m % 4 == 2 && 3 * n > 7 * m + 48;
}

bool claimed_lots(std::int64_t m, std::int64_t n) {
  return n >= 0 && m >= 9 && m % 4 == 1 && 3 * n > 7 * m + 36;
}

bool strict_hitchin_thorpe(std::int64_t m, std::int64_t n) {
  return hitchin_thorpe(2 + m + n, m - n) == HitchinThorpe::StrictlySatisfied;
}

namespace {

std::string sum_expression(const std::vector<std::string>& terms, std::int64_t blowups) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " # ";
    out += t;
  }
  if (blowups > 0) out += " # " + std::to_string(blowups) + "*CP2bar";
  return out;
}

std::string param_term(std::string_view name, std::int64_t p) {
  return std::string(name) + "(" + std::to_string(p) + ")";
}

WitnessResult check_region_witness(WitnessResult w, const std::vector<std::pair<std::string, std::int64_t>>& terms,
                                   const Catalog& catalog) {
  std::vector<std::string> names;
  for (const auto& [name, p] : terms) names.push_back(p < 0 ? name : param_term(name, p));
  w.expression = sum_expression(names, w.blowups);
  if (w.blowups < 0) {
    w.status = WitnessStatus::NegativeBlowups;
    w.expression = sum_expression(names, 0) + " # (" + std::to_string(w.blowups) + ")*CP2bar";
    w.detail = "construction needs " + std::to_string(w.blowups) + " blow-ups";
    return w;
  }

  ManifoldSpec M = sphere();
  bool first = true;
  for (const auto& [name, p] : terms) {
    ManifoldSpec s = p < 0 ? catalog.get(name, {}) : catalog.get(name, {p});
    M = first ? s : connected_sum(M, s);
    first = false;
  }
  M = blow_up(M, w.blowups);
  w.manifold = M;

  const UnimodularForm target = UnimodularForm::diagonal(w.m, w.n);
  w.homeomorphic_to_target = M.b_plus == w.m && M.b_minus == w.n && is_isomorphic(M.form, target);
  w.hitchin_thorpe = hitchin_thorpe(M);

  w.verdict = M.pieces.size() == 1 ? blowup_obstruction(M.pieces.front(), M.blowups)
                                   : einstein_obstruction(M.pieces, M.blowups);
  if (w.theorem != RegionTheorem::Prop6) w.bandwidth = bandwidth(bauer_monopole_set(M.pieces, M.blowups));

  if (!w.homeomorphic_to_target) {
    w.status = WitnessStatus::HomeotypeMismatch;
    w.detail = "witness form " + M.form.to_string() + " is not isomorphic to " + target.to_string();
  } else if (w.verdict->status != VerdictStatus::Obstructed || !w.verdict->verify()) {
    w.status = WitnessStatus::ObstructionThresholdMissed;
    w.detail = "certificate " + w.verdict->certificate();
  } else if (w.bandwidth && w.bandwidth->lower_bound < 2 * w.ell) {
    w.status = WitnessStatus::BandwidthTooSmall;
    w.detail = "bandwidth lower bound " + std::to_string(w.bandwidth->lower_bound) + " < " +
               std::to_string(2 * w.ell);
  } else {
    w.status = WitnessStatus::Certified;
  }
  return w;
}

}  // namespace

WitnessResult witness(std::int64_t m, std::int64_t n, RegionTheorem theorem, std::int64_t ell,
                      const Catalog& catalog) {
  if (ell < 0) throw ParameterOutOfRange("l must be non-negative");
  if (theorem != RegionTheorem::Spin && (m < 0 || n < 0)) throw ParameterOutOfRange("m and n must be non-negative");
  if (m > kMaxParameter || n > kMaxParameter || ell > kMaxParameter)
    throw ParameterOutOfRange("parameter exceeds " + std::to_string(kMaxParameter));
  WitnessResult w;
  w.theorem = theorem;
  w.m = m;
  w.n = n;
  w.ell = ell;
  switch (theorem) {
    case RegionTheorem::Molti: {
      if (m < 6 || m % 4 != 2) throw ParameterOutOfRange("molti needs m = 2 mod 4 and m >= 6");
      const std::int64_t j = (m - 2) / 4;
      w.family_index = j;
      w.blowups = n - m - 27;
      return check_region_witness(w, {{"Z", 2 * j}, {"Y", ell}}, catalog);
    }
    case RegionTheorem::Lots: {
      if (m < 9 || m % 4 != 1) throw ParameterOutOfRange("lots needs m = 1 mod 4 and m >= 9");
      const std::int64_t j = (m - 5) / 4;
      w.family_index = j;
      w.blowups = n - m - 38;
      return check_region_witness(w, {{"Z", 2 * j}, {"R22", -1}, {"Y", ell}}, catalog);
    }
    case RegionTheorem::Prop6: {
      if (m % 2 != 1 || m < 3) throw ParameterOutOfRange("prop6 witness needs odd m >= 3");
      const std::int64_t i = (m + 1) / 2;
      w.family_index = i;
      w.blowups = n - m - 11;
      return check_region_witness(w, {{"Z", i}}, catalog);
    }
    case RegionTheorem::Spin: {
      SpinFamilyResult s = spin_family(n, ell, catalog);
      w.family_index = n;
      w.expression = s.expression;
      w.manifold = s.manifold;
      w.homeomorphic_to_target = s.homeomorphic_to_target;
      w.verdict = s.verdict;
      w.bandwidth = s.bandwidth;
      w.hitchin_thorpe = s.hitchin_thorpe;
      if (!s.homeomorphic_to_target || s.euler != 24 * n + 4 || s.signature != -16 * n)
        w.status = WitnessStatus::HomeotypeMismatch;
      else if (s.hitchin_thorpe != HitchinThorpe::StrictlySatisfied)
        w.status = WitnessStatus::HitchinThorpeNotStrict;
      else if (s.verdict.status != VerdictStatus::Obstructed || !s.verdict.verify())
        w.status = WitnessStatus::ObstructionThresholdMissed;
      else if (s.bandwidth.lower_bound < 2 * ell)
        w.status = WitnessStatus::BandwidthTooSmall;
      else
        w.status = WitnessStatus::Certified;
      return w;
    }
  }
  throw UnknownTheorem("unknown theorem");
}

bool SpinFamilyResult::certified() const {
  return homeomorphic_to_target && euler == 24 * n + 4 && signature == -16 * n &&
         hitchin_thorpe == HitchinThorpe::StrictlySatisfied && verdict.status == VerdictStatus::Obstructed &&
         verdict.verify() && bandwidth.lower_bound >= 2 * ell;
}

SpinFamilyResult spin_family(std::int64_t n, std::int64_t ell, const Catalog& catalog) {
  if (n < 4) throw ParameterOutOfRange("spin family needs n >= 4 (X_{n-2} needs n-2 >= 2), got " + std::to_string(n));
  if (ell < 0) throw ParameterOutOfRange("l must be non-negative");
  if (n > kMaxParameter || ell > kMaxParameter)
    throw ParameterOutOfRange("parameter exceeds " + std::to_string(kMaxParameter));
  SpinFamilyResult r;
  r.n = n;
  r.ell = ell;
  const std::int64_t k = n - 2;
  r.expression = sum_expression({param_term("X", k), param_term("Y", 0), param_term("Y", ell)}, 0);
  r.manifold = connected_sum(connected_sum(catalog.get("X", {k}), catalog.get("Y", {0})), catalog.get("Y", {ell}));

  // n(K3) # (n+1)(S2xS2) by scaling the summands' invariants; the target's
  // symplectic pieces are irrelevant to the homeotype check.
  const ManifoldSpec k3 = catalog.get("K3", {});
  const ManifoldSpec s2s2 = catalog.get("S2xS2", {});
  using checked::add;
  using checked::mul;
  ManifoldSpec target;
  target.label = std::to_string(n) + "*K3 # " + std::to_string(n + 1) + "*S2xS2";
  target.b_plus = add(mul(n, k3.b_plus), mul(n + 1, s2s2.b_plus));
  target.b_minus = add(mul(n, k3.b_minus), mul(n + 1, s2s2.b_minus));
  target.spin = k3.spin && s2s2.spin;
  target.form = {add(mul(n, k3.form.pos_diag), mul(n + 1, s2s2.form.pos_diag)),
                 add(mul(n, k3.form.neg_diag), mul(n + 1, s2s2.form.neg_diag)),
                 add(mul(n, k3.form.hyperbolic), mul(n + 1, s2s2.form.hyperbolic)),
                 add(mul(n, k3.form.e8), mul(n + 1, s2s2.form.e8))};
  r.target = target;

  r.homeomorphic_to_target = homeomorphic(r.manifold, r.target);
  r.euler = r.manifold.euler();
  r.signature = r.manifold.signature();
  r.hitchin_thorpe = hitchin_thorpe(r.manifold);
  r.verdict = corollary_non(r.manifold.pieces);
  r.bandwidth = bandwidth(bauer_monopole_set(r.manifold.pieces, r.manifold.blowups));
  return r;
}

std::vector<RegionTheorem> RegionReport::claimed() const {
  std::vector<RegionTheorem> out;
  if (claimed_prop6) out.push_back(RegionTheorem::Prop6);
  if (claimed_molti) out.push_back(RegionTheorem::Molti);
  if (claimed_lots) out.push_back(RegionTheorem::Lots);
  return out;
}

std::vector<RegionTheorem> RegionReport::certified() const {
  std::vector<RegionTheorem> out;
  for (const auto& w : attempts)
    if (w.certified()) out.push_back(w.theorem);
  return out;
}

RegionReport region_membership(std::int64_t m, std::int64_t n) {
  RegionReport r;
  r.m = m;
  r.n = n;
  r.claimed_prop6 = claimed_prop6(m, n);
  r.claimed_molti = claimed_molti(m, n);
  r.claimed_lots = claimed_lots(m, n);
  r.strict_ht = strict_hitchin_thorpe(m, n);
  return r;
}

std::vector<RegionReport> scan(IntRange m_range, IntRange n_range, const ScanOptions& options,
                               const Catalog& catalog) {
  std::vector<RegionReport> out;
  if (m_range.hi < m_range.lo || n_range.hi < n_range.lo) return out;
  if (m_range.lo < 0 || n_range.lo < 0) throw ParameterOutOfRange("scan ranges must be non-negative");
  if (m_range.hi > kMaxParameter || n_range.hi > kMaxParameter)
    throw ParameterOutOfRange("scan range exceeds " + std::to_string(kMaxParameter));
  const auto m_count = static_cast<std::size_t>(m_range.hi - m_range.lo + 1);
  const auto n_count = static_cast<std::size_t>(n_range.hi - n_range.lo + 1);
  if (m_count * n_count > 50'000'000) throw ParameterOutOfRange("scan grid too large");
  out.resize(m_count * n_count);
  detail::parallel_for(out.size(), [&](std::size_t idx) {
    const std::int64_t m = m_range.lo + static_cast<std::int64_t>(idx / n_count);
    const std::int64_t n = n_range.lo + static_cast<std::int64_t>(idx % n_count);
    RegionReport r = region_membership(m, n);
    if (options.certify) {
      for (auto t : r.claimed()) {
        try {
          r.attempts.push_back(witness(m, n, t, options.ell, catalog));
        } catch (const ParameterOutOfRange& e) {
          WitnessResult w;
          w.theorem = t;
          w.m = m;
          w.n = n;
          w.ell = options.ell;
          w.status = WitnessStatus::ParameterOutOfRange;
          w.detail = e.what();
          r.attempts.push_back(std::move(w));
        }
      }
    }
    out[idx] = std::move(r);
  });
  return out;
}

}  // namespace fourfold
