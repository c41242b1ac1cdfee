#include "fourfold/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fourfold/checked.hpp"
#include "fourfold/expression.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/obstruction.hpp"

namespace fourfold {

bool ReproduceReport::all_passed() const { return failures() == 0; }

std::size_t ReproduceReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ClaimRow& r) { return !r.pass; }));
}

const std::vector<std::string>& reproduce_tags() {
  static const std::vector<std::string> tags{"xk",   "spin", "zi",      "prop6",   "molti",
                                             "lots", "example", "boundary", "catalog"};
  return tags;
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Table {
 public:
  explicit Table(std::vector<ClaimRow>& rows) : rows_(rows) {}

  // computed() may throw; the exception text becomes the computed value.
  void check(std::string tag, std::string claim, std::string anchor, std::string expected,
             const std::function<std::string()>& computed) {
    ClaimRow row{std::move(tag), std::move(claim), std::move(anchor), std::move(expected), {}, false};
    try {
      row.computed = computed();
      row.pass = row.computed == row.expected;
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    rows_.push_back(std::move(row));
  }

 private:
  std::vector<ClaimRow>& rows_;
};

std::string form_text(const UnimodularForm& f) { return normal_form(f).to_string(); }

void xk_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t k = 2; k <= 10; ++k) {
    std::ostringstream expected;
    expected << "chi=" << 24 * k + 8 << " tau=" << -16 * k << " b+=" << 4 * k + 3 << " c1^2=16"
             << " form=" << UnimodularForm::even(-2 * k, 4 * k + 3).to_string() << " homeo=yes";
    t.check("xk", "X_" + std::to_string(k) + " invariants", "Gompf spin family: (chi,tau) = (24k+8,-16k)",
            expected.str(), [&] {
              const ManifoldSpec x = catalog.get("X", {k});
              const ManifoldSpec target = evaluate(std::to_string(k) + "*K3 # " + std::to_string(k + 3) + "*S2xS2",
                                                   catalog);
              std::ostringstream out;
              out << "chi=" << x.euler() << " tau=" << x.signature() << " b+=" << x.b_plus
                  << " c1^2=" << (x.pieces.empty() ? std::string("-") : std::to_string(x.pieces[0].c1_squared))
                  << " form=" << form_text(x.form) << " homeo=" << yes_no(homeomorphic(x, target));
              return out.str();
            });
  }
}

void spin_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t n = 4; n <= 12; ++n) {
    for (std::int64_t ell = 1; ell <= 5; ++ell) {
      std::ostringstream expected;
      expected << "chi=" << 24 * n + 4 << " tau=" << -16 * n << " margin=8 status=Obstructed cert=16<=24"
               << " bandwidth=" << 2 * ell << " homeo=yes";
      t.check("spin", "n=" + std::to_string(n) + " l=" + std::to_string(ell) + " spin family",
              "n(K3)#(n+1)(S2xS2): chi = 24n+4, tau = -16n, strict HT, no Einstein metric", expected.str(), [&] {
                const SpinFamilyResult s = spin_family(n, ell, catalog);
                std::ostringstream out;
                out << "chi=" << s.euler << " tau=" << s.signature
                    << " margin=" << 2 * s.euler - 3 * checked::abs(s.signature)
                    << " status=" << to_string(s.verdict.status) << " cert=" << s.verdict.rhs << "<=" << s.verdict.lhs
                    << " bandwidth=" << s.bandwidth.lower_bound
                    << " homeo=" << yes_no(s.homeomorphic_to_target && s.verdict.verify());
                return out.str();
              });
    }
  }
}

void zi_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t i = 2; i <= 10; ++i) {
    std::ostringstream expected;
    expected << "todd=" << i << " c1^2=" << 8 * i - 11 << " b+=" << 2 * i - 1 << " b-=" << 2 * i + 10;
    t.check("zi", "Z_" + std::to_string(i) + " invariants", "Gompf family: Todd genus i, c1^2 = 8i-11",
            expected.str(), [&] {
              const ManifoldSpec z = catalog.get("Z", {i});
              std::ostringstream out;
              out << "todd=" << char_numbers(z).todd_genus.to_string()
                  << " c1^2=" << (z.pieces.empty() ? std::string("-") : std::to_string(z.pieces[0].c1_squared))
                  << " b+=" << z.b_plus << " b-=" << z.b_minus;
              return out.str();
            });
  }
}

void prop6_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t m : {3, 5, 7, 9, 11}) {
    const std::int64_t n = m + 11 + checked::ceil_div(4 * m - 7, 3);
    std::ostringstream expected;
    expected << "status=Certified b=(" << m << "," << n << ") strict_ht=" << yes_no(n < 5 * m + 4);
    t.check("prop6", "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") odd-m witness",
            "odd m, n > 7m/3 + 8: Z_i # k CP2bar", expected.str(), [&] {
              const WitnessResult w = witness(m, n, RegionTheorem::Prop6, 1, catalog);
              std::ostringstream out;
              out << "status=" << to_string(w.status) << " b=(" << (w.manifold ? w.manifold->b_plus : -1) << ","
                  << (w.manifold ? w.manifold->b_minus : -1)
                  << ") strict_ht=" << yes_no(w.hitchin_thorpe == HitchinThorpe::StrictlySatisfied);
              return out.str();
            });
  }
}

void molti_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t m : {6, 10, 14}) {
    const std::int64_t n = std::max(m + 27, checked::ceil_div(7 * m + 49, 3));
    std::vector<std::int64_t> bounds;
    for (std::int64_t ell = 1; ell <= 4; ++ell) {
      std::ostringstream expected;
      expected << "status=Certified bandwidth>=" << 2 * ell << " yes";
      t.check("molti",
              "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") l=" + std::to_string(ell) +
                  " m=2 mod 4 witness",
              "m = 2 mod 4, m >= 6, n > 7m/3 + 16: Z_2j # Y_l # k CP2bar", expected.str(), [&] {
                const WitnessResult w = witness(m, n, RegionTheorem::Molti, ell, catalog);
                const std::int64_t bw = w.bandwidth ? w.bandwidth->lower_bound : 0;
                bounds.push_back(bw);
                std::ostringstream out;
                out << "status=" << to_string(w.status) << " bandwidth>=" << 2 * ell << " " << yes_no(bw >= 2 * ell);
                if (!w.certified()) out << " (" << w.detail << ")";
                return out.str();
              });
    }
    t.check("molti", "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") bandwidth grows with l",
            "bandwidth of Z_2j # Y_l # k CP2bar is unbounded in l", "strictly increasing over l=1..4", [&] {
              bool increasing = bounds.size() == 4;
              for (std::size_t i = 1; i < bounds.size(); ++i) increasing = increasing && bounds[i] > bounds[i - 1];
              std::string list;
              for (auto b : bounds) list += (list.empty() ? "" : ",") + std::to_string(b);
              return increasing ? std::string("strictly increasing over l=1..4") : "not increasing: " + list;
            });
  }
}

void lots_rows(Table& t, const Catalog& catalog) {
  t.check("lots", "R22 c1^2 from (b+,b-) = (3,14)", "R_{2,2}: b+ = 3, b- = 14", "c1^2=5 2chi+3tau=5", [&] {
    const ManifoldSpec r = catalog.get("R22", {});
    std::ostringstream out;
    out << "c1^2=" << (r.pieces.empty() ? std::string("-") : std::to_string(r.pieces[0].c1_squared))
        << " 2chi+3tau=" << gauss_bonnet_defect(r);
    return out.str();
  });
  for (std::int64_t m : {9, 13}) {
    const std::int64_t j = (m - 5) / 4;
    const std::int64_t n = m + 38 + std::max<std::int64_t>(0, checked::ceil_div(16 * j - 30, 3));
    t.check("lots", "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ") m=1 mod 4 witness",
            "m = 1 mod 4, m >= 9, n > 7m/3 + 12: Z_2j # R22 # Y_l # k CP2bar", "status=Certified claimed=yes", [&] {
              const WitnessResult w = witness(m, n, RegionTheorem::Lots, 1, catalog);
              std::ostringstream out;
              out << "status=" << to_string(w.status) << " claimed=" << yes_no(claimed_lots(m, n));
              if (!w.certified()) out << " (" << w.detail << ")";
              return out.str();
            });
  }
}

void example_rows(Table& t, const Catalog& catalog) {
  for (std::int64_t p : {6, 10}) {
    const std::int64_t m = p * p - 3 * p + 3;
    const std::int64_t n = 3 * p * p - 3 * p + 1;
    std::ostringstream expected;
    expected << "claimed_lots=yes strict_ht=yes b=(" << m << "," << n << ") c1^2=" << 2 * (p - 3) * (p - 3)
             << " 2chi+3tau=" << 2 * (p - 3) * (p - 3) << " einstein_known=AubinYau";
    t.check("example", "p=" + std::to_string(p) + " branched cover (m,n)=(" + std::to_string(m) + "," +
                           std::to_string(n) + ")",
            "double cover of CP2 branched over a degree-2p curve", expected.str(), [&] {
              const ManifoldSpec bc = catalog.get("BC", {p});
              std::ostringstream out;
              out << "claimed_lots=" << yes_no(claimed_lots(m, n)) << " strict_ht=" << yes_no(strict_hitchin_thorpe(m, n))
                  << " b=(" << bc.b_plus << "," << bc.b_minus << ") c1^2="
                  << (bc.pieces.empty() ? std::string("-") : std::to_string(bc.pieces[0].c1_squared))
                  << " 2chi+3tau=" << gauss_bonnet_defect(bc)
                  << " einstein_known=" << bc.einstein_known.value_or("-");
              return out.str();
            });
  }
}

void boundary_rows(Table& t, const Catalog& catalog) {
  t.check("boundary", "CP2 # 9 CP2bar", "boundary case of the Hitchin-Thorpe inequality", "Boundary", [&] {
    return std::string(to_string(hitchin_thorpe(evaluate("CP2 # 9*CP2bar", catalog))));
  });
  t.check("boundary", "K3", "K3 is Einstein (Yau) and on the boundary", "Boundary einstein_known=Yau", [&] {
    const ManifoldSpec k3 = catalog.get("K3", {});
    return std::string(to_string(hitchin_thorpe(k3))) + " einstein_known=" + k3.einstein_known.value_or("-");
  });
  t.check("boundary", "K3 # K3", "violates 2chi >= 3|tau|", "Violated", [&] {
    return std::string(to_string(hitchin_thorpe(evaluate("K3 # K3", catalog))));
  });
}

}  // namespace

ReproduceReport run_reproduce(const Catalog& catalog, std::string_view filter,
                              const std::vector<std::string>& catalog_issues) {
  const bool all = filter.empty() || filter == "all";
  if (!all && std::find(reproduce_tags().begin(), reproduce_tags().end(), filter) == reproduce_tags().end())
    throw std::invalid_argument("unknown reproduce filter '" + std::string(filter) + "'");
  auto want = [&](std::string_view tag) { return all || filter == tag; };

  ReproduceReport report;
  Table t(report.rows);
  for (const auto& issue : catalog_issues)
    report.rows.push_back({"catalog", "catalog entry validation", "catalog consistency (c1^2 = 2chi+3tau, parity)",
                           "valid", issue, false});
  if (want("xk")) xk_rows(t, catalog);
  if (want("spin")) spin_rows(t, catalog);
  if (want("zi")) zi_rows(t, catalog);
  if (want("prop6")) prop6_rows(t, catalog);
  if (want("molti")) molti_rows(t, catalog);
  if (want("lots")) lots_rows(t, catalog);
  if (want("example")) example_rows(t, catalog);
  if (want("boundary")) boundary_rows(t, catalog);
  return report;
}

}  // namespace fourfold
