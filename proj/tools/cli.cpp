#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "fourfold/catalog.hpp"
#include "fourfold/errors.hpp"
#include "fourfold/expression.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/lattice.hpp"
#include "fourfold/manifold.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/obstruction.hpp"
#include "fourfold/reproduce.hpp"

namespace fourfold::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

// A flat record keeps field order, so every format prints the same fields
// in the same order.
using Record = std::vector<std::pair<std::string, Json>>;

std::string cell(const Json& v, Format f) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return f == Format::Csv ? (v.get<bool>() ? "true" : "false") : (v.get<bool>() ? "yes" : "no");
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += f == Format::Csv ? ";" : ", ";
      out += cell(e, f);
    }
    return out.empty() ? "-" : out;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Json to_json(const Record& r) {
  Json j = Json::object();
  for (const auto& [k, v] : r) j[k] = v;
  return j;
}

void emit_record(const Record& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json:
      out << to_json(r).dump(2) << "\n";
      return;
    case Format::Csv: {
      std::string head, row;
      for (std::size_t i = 0; i < r.size(); ++i) {
        head += (i ? "," : "") + csv_escape(r[i].first);
        row += (i ? "," : "") + csv_escape(cell(r[i].second, f));
      }
      out << head << "\n" << row << "\n";
      return;
    }
    case Format::Table: {
      std::size_t width = 0;
      for (const auto& [k, v] : r) width = std::max(width, k.size());
      for (const auto& [k, v] : r) out << k << std::string(width - k.size() + 2, ' ') << cell(v, f) << "\n";
      return;
    }
  }
}

void emit_rows(const std::vector<std::string>& columns, const std::vector<Record>& rows, Format f,
               std::ostream& out) {
  switch (f) {
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(to_json(r));
      out << arr.dump(2) << "\n";
      return;
    }
    case Format::Csv: {
      for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
      out << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_escape(cell(r[i].second, f));
        out << "\n";
      }
      return;
    }
    case Format::Table: {
      std::vector<std::size_t> width(columns.size());
      for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
      std::vector<std::vector<std::string>> text;
      for (const auto& r : rows) {
        std::vector<std::string> line;
        for (std::size_t i = 0; i < r.size(); ++i) {
          line.push_back(cell(r[i].second, f));
          width[i] = std::max(width[i], line.back().size());
        }
        text.push_back(std::move(line));
      }
      auto print = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t i = 0; i < line.size(); ++i) {
          s += line[i];
          if (i + 1 < line.size()) s += std::string(width[i] - line[i].size() + 2, ' ');
        }
        out << s << "\n";
      };
      print(columns);
      for (const auto& line : text) print(line);
      return;
    }
  }
}

Json optional_json(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

Record manifold_record(const std::string& text, const ManifoldSpec& m) {
  const CharNumbers cn = char_numbers(m);
  const FormClass fc = classify(m.form);
  Json pieces = Json::array();
  for (const auto& p : m.pieces) pieces.push_back(p.name);
  Json warnings = Json::array();
  for (const auto& w : realizability_warnings(m.form)) warnings.push_back(w);
  return {{"expression", text},
          {"b_plus", m.b_plus},
          {"b_minus", m.b_minus},
          {"euler", cn.euler},
          {"signature", cn.signature},
          {"c1_squared", cn.two_chi_plus_three_tau},
          {"todd_genus", cn.todd_genus.to_string()},
          {"spin", m.spin},
          {"form", normal_form(m.form).to_string()},
          {"parity", std::string(to_string(fc.parity))},
          {"definiteness", std::string(to_string(fc.definiteness))},
          {"pieces", pieces},
          {"blowups", m.blowups},
          {"einstein_known", optional_json(m.einstein_known)},
          {"warnings", warnings}};
}

Json verdict_json(const Verdict& v, bool with_extras) {
  Json pieces = Json::array();
  for (std::size_t i = 0; i < v.pieces.size(); ++i)
    pieces.push_back({{"name", v.pieces[i]}, {"c1_squared", v.c1_squares[i]}});
  Json j = {{"status", std::string(to_string(v.status))},
            {"theorem", std::string(to_string(v.theorem))},
            {"lhs", v.lhs},
            {"rhs", v.rhs},
            {"pieces", pieces},
            {"k", v.k},
            {"hitchin_thorpe", std::string(to_string(v.hitchin_thorpe))},
            {"notes", v.notes}};
  if (with_extras) {
    j["certificate"] = v.certificate();
    j["einstein_known"] = optional_json(v.einstein_known);
  }
  return j;
}

std::string ht_line(const ManifoldSpec& m) {
  const std::int64_t lhs = 2 * m.euler();
  const std::int64_t rhs = 3 * (m.signature() < 0 ? -m.signature() : m.signature());
  const HitchinThorpe h = hitchin_thorpe(m);
  const char* rel = h == HitchinThorpe::Violated ? " < " : h == HitchinThorpe::Boundary ? " = " : " > ";
  return std::string(to_string(h)) + " (2chi = " + std::to_string(lhs) + rel + std::to_string(rhs) + " = 3|tau|)";
}

IntRange parse_range(const std::string& text, const std::string& what) {
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw CLI::ValidationError(what, "expected an integer or a range A..B, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::int64_t v = number(text);
    return {v, v};
  }
  return {number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
}

std::vector<std::int64_t> parse_ell_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const IntRange r = parse_range(item, "--ell-list");
    if (r.hi < r.lo) throw CLI::ValidationError("--ell-list", "empty range '" + item + "'");
    if (r.hi - r.lo > 10'000) throw CLI::ValidationError("--ell-list", "range '" + item + "' is too long");
    for (std::int64_t v = r.lo; v <= r.hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError("--ell-list", "no values given");
  return out;
}

struct Context {
  Format format = Format::Table;
  std::ostream& out;
  std::ostream& err;
  Catalog catalog;
  std::vector<std::string> catalog_issues;
};

void require_clean_catalog(const Context& ctx) {
  if (!ctx.catalog_issues.empty()) throw CatalogError("catalog override rejected: " + ctx.catalog_issues.front());
}

int cmd_invariants(Context& ctx, const std::string& expr) {
  require_clean_catalog(ctx);
  const SumExpression e = parse_expression(expr);
  emit_record(manifold_record(e.to_string(), evaluate(e, ctx.catalog)), ctx.format, ctx.out);
  return kSuccess;
}

int cmd_homeo(Context& ctx, const std::string& a_text, const std::string& b_text) {
  require_clean_catalog(ctx);
  const SumExpression ea = parse_expression(a_text);
  const SumExpression eb = parse_expression(b_text);
  const ManifoldSpec a = evaluate(ea, ctx.catalog);
  const ManifoldSpec b = evaluate(eb, ctx.catalog);
  const bool same = homeomorphic(a, b);
  emit_record({{"first", ea.to_string()},
               {"first_form", normal_form(a.form).to_string()},
               {"second", eb.to_string()},
               {"second_form", normal_form(b.form).to_string()},
               {"homeomorphic", same}},
              ctx.format, ctx.out);
  return same ? kSuccess : kCheckFailed;
}

int cmd_hitchin_thorpe(Context& ctx, const std::string& expr) {
  require_clean_catalog(ctx);
  const SumExpression e = parse_expression(expr);
  const ManifoldSpec m = evaluate(e, ctx.catalog);
  const std::int64_t sig = m.signature();
  emit_record({{"expression", e.to_string()},
               {"euler", m.euler()},
               {"signature", sig},
               {"two_chi", 2 * m.euler()},
               {"three_abs_tau", 3 * (sig < 0 ? -sig : sig)},
               {"status", std::string(to_string(hitchin_thorpe(m)))},
               {"einstein_known", optional_json(m.einstein_known)}},
              ctx.format, ctx.out);
  return kSuccess;
}

Verdict einstein_verdict(const ManifoldSpec& m, const Decomposition& d) {
  auto unknown = [&](std::string note) {
    Verdict v;
    v.status = VerdictStatus::Unknown;
    v.theorem = d.pieces.size() <= 1 ? Theorem::SinglePieceBlowup
                                     : d.pieces.size() == 2 ? Theorem::SumOfTwo : Theorem::SumOfThree;
    v.k = d.blowups;
    for (const auto& p : d.pieces) {
      v.pieces.push_back(p.name);
      v.c1_squares.push_back(p.c1_squared);
    }
    if (!d.pieces.empty()) {
      const auto count = static_cast<std::int64_t>(d.pieces.size());
      v.lhs = 3 * (d.blowups + 4 * (count - 1));
      for (auto c : v.c1_squares) v.rhs += c;
    }
    v.hitchin_thorpe = hitchin_thorpe(m);
    v.notes.push_back(std::move(note));
    return v;
  };
  if (d.pieces.size() > 3)
    throw TooManyPieces("expression has " + std::to_string(d.pieces.size()) +
                        " symplectic pieces; the decomposition into at most three is ambiguous");
  if (!d.other_summands.empty())
    return unknown("summand " + d.other_summands.front() + " is neither a symplectic piece nor CP2bar");
  if (d.pieces.empty()) return unknown("no symplectic piece in the expression");
  try {
    Verdict v = d.pieces.size() == 1 ? blowup_obstruction(d.pieces.front(), d.blowups)
                                     : einstein_obstruction(d.pieces, d.blowups);
    v.hitchin_thorpe = hitchin_thorpe(m);
    return v;
  } catch (const InadmissiblePiece& e) {
    return unknown(std::string("not admissible: ") + e.what());
  }
}

int cmd_check_einstein(Context& ctx, const std::string& expr) {
  require_clean_catalog(ctx);
  const SumExpression e = parse_expression(expr);
  const ManifoldSpec m = evaluate(e, ctx.catalog);
  Verdict v = einstein_verdict(m, decompose(e, ctx.catalog));
  v.einstein_known = m.einstein_known;
  if (hitchin_thorpe(m) == HitchinThorpe::Violated)
    v.notes.push_back("no Einstein metric for either orientation: Hitchin-Thorpe inequality fails");
  if (v.einstein_known && v.status == VerdictStatus::Obstructed)
    v.notes.push_back("catalog records an Einstein metric; the catalog entry and the verdict disagree");

  switch (ctx.format) {
    case Format::Json:
      ctx.out << verdict_json(v, true).dump(2) << "\n";
      break;
    case Format::Csv: {
      Json pieces = Json::array();
      for (std::size_t i = 0; i < v.pieces.size(); ++i)
        pieces.push_back(v.pieces[i] + ":" + std::to_string(v.c1_squares[i]));
      emit_record({{"status", std::string(to_string(v.status))},
                   {"theorem", std::string(to_string(v.theorem))},
                   {"lhs", v.lhs},
                   {"rhs", v.rhs},
                   {"pieces", pieces},
                   {"k", v.k},
                   {"hitchin_thorpe", std::string(to_string(v.hitchin_thorpe))},
                   {"notes", v.notes},
                   {"certificate", v.certificate()},
                   {"einstein_known", optional_json(v.einstein_known)}},
                  ctx.format, ctx.out);
      break;
    }
    case Format::Table:
      ctx.out << "hitchin-thorpe: " << ht_line(m) << "\n";
      ctx.out << "verdict: " << to_string(v.status) << " [" << to_string(v.theorem) << "] " << v.certificate();
      for (const auto& n : v.notes) ctx.out << "; " << n;
      ctx.out << "\n";
      ctx.out << "einstein_known: " << v.einstein_known.value_or("-") << "\n";
      break;
  }
  return kSuccess;
}

FamilyInstance family_instance(const SumExpression& family, std::int64_t ell, const Catalog& catalog) {
  const SumExpression e = instantiate(family, ell);
  const Decomposition d = decompose(e, catalog);
  if (!d.other_summands.empty())
    throw InadmissiblePiece("summand " + d.other_summands.front() + " is neither a symplectic piece nor CP2bar");
  return {e.to_string(), d.pieces, d.blowups};
}

int cmd_bandwidth(Context& ctx, const std::string& expr, const std::string& ell_list) {
  require_clean_catalog(ctx);
  const SumExpression family = parse_expression(expr, true);
  std::vector<std::int64_t> ells{0};
  if (family.has_placeholder()) {
    if (ell_list.empty()) throw CLI::ValidationError("--ell-list", "expression uses 'l'; give --ell-list");
    ells = parse_ell_list(ell_list);
  } else if (!ell_list.empty()) {
    throw CLI::ValidationError("--ell-list", "expression has no placeholder 'l'");
  }
  const FamilyCertificate cert =
      family_certificate([&](std::int64_t ell) { return family_instance(family, ell, ctx.catalog); }, ells);

  std::vector<Record> rows;
  for (const auto& r : cert.rows) {
    Json pair = nullptr;
    if (r.bandwidth.witness)
      pair = Json::array({r.bandwidth.witness->first.to_string(), r.bandwidth.witness->second.to_string()});
    rows.push_back({{"l", family.has_placeholder() ? Json(r.ell) : Json(nullptr)},
                    {"expression", r.label},
                    {"bandwidth", r.bandwidth.lower_bound},
                    {"witness", pair}});
  }
  if (ctx.format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    ctx.out << Json{{"rows", arr}, {"unbounded_certified", cert.unbounded_certified}}.dump(2) << "\n";
  } else {
    emit_rows({"l", "expression", "bandwidth", "witness"}, rows, ctx.format, ctx.out);
    if (ctx.format == Format::Table && family.has_placeholder())
      ctx.out << "unbounded_certified: " << (cert.unbounded_certified ? "yes" : "no") << "\n";
  }
  return kSuccess;
}

int cmd_scan(Context& ctx, const std::string& m_text, const std::string& n_text, bool certify, std::int64_t ell) {
  require_clean_catalog(ctx);
  const IntRange m = parse_range(m_text, "--m");
  const IntRange n = parse_range(n_text, "--n");
  const auto reports = scan(m, n, {certify, ell}, ctx.catalog);
  std::vector<Record> rows;
  for (const auto& r : reports) {
    Json certified = Json::array();
    Json witnesses = Json::array();
    for (const auto& w : r.attempts) {
      if (w.certified()) certified.push_back(std::string(to_string(w.theorem)));
      witnesses.push_back(std::string(to_string(w.theorem)) + ":" +
                          (w.certified() ? w.expression : std::string(to_string(w.status))));
    }
    rows.push_back({{"m", r.m},
                    {"n", r.n},
                    {"claimed_prop6", r.claimed_prop6},
                    {"claimed_molti", r.claimed_molti},
                    {"claimed_lots", r.claimed_lots},
                    {"strict_ht", r.strict_ht},
                    {"certified", certified},
                    {"witness", witnesses}});
  }
  emit_rows({"m", "n", "claimed_prop6", "claimed_molti", "claimed_lots", "strict_ht", "certified", "witness"}, rows,
            ctx.format, ctx.out);
  return kSuccess;
}

int cmd_classify_form(Context& ctx, const std::string& text) {
  const UnimodularForm f = UnimodularForm::parse(text);
  const FormClass c = classify(f);
  Json warnings = Json::array();
  for (const auto& w : realizability_warnings(f)) warnings.push_back(w);
  emit_record({{"form", f.to_string()},
               {"normal_form", normal_form(f).to_string()},
               {"rank", c.rank},
               {"signature", c.signature},
               {"parity", std::string(to_string(c.parity))},
               {"definiteness", std::string(to_string(c.definiteness))},
               {"b_plus", f.b_plus()},
               {"b_minus", f.b_minus()},
               {"warnings", warnings}},
              ctx.format, ctx.out);
  return kSuccess;
}

int cmd_reproduce(Context& ctx, const std::string& filter) {
  const ReproduceReport report = run_reproduce(ctx.catalog, filter, ctx.catalog_issues);
  std::vector<Record> rows;
  for (const auto& r : report.rows)
    rows.push_back({{"result", r.pass ? "PASS" : "FAIL"},
                    {"tag", r.tag},
                    {"claim", r.claim},
                    {"anchor", r.anchor},
                    {"expected", r.expected},
                    {"computed", r.computed}});
  if (ctx.format == Format::Table) {
    for (const auto& r : report.rows) {
      ctx.out << (r.pass ? "PASS" : "FAIL") << "  [" << r.tag << "] " << r.claim << "  (" << r.anchor << ")\n";
      ctx.out << "      expected: " << r.expected << "\n";
      if (!r.pass) ctx.out << "      computed: " << r.computed << "\n";
    }
    ctx.out << report.rows.size() << " checks, " << report.failures() << " failed\n";
  } else {
    emit_rows({"result", "tag", "claim", "anchor", "expected", "computed"}, rows, ctx.format, ctx.out);
  }
  return report.all_passed() ? kSuccess : kCheckFailed;
}

int cmd_catalog(Context& ctx) {
  require_clean_catalog(ctx);
  std::vector<Record> rows;
  auto add = [&](const CatalogRecord& r) {
    rows.push_back({{"label", r.label()},
                    {"b_plus", r.b_plus},
                    {"b_minus", r.b_minus},
                    {"spin", r.spin},
                    {"c1_squared", r.c1_squared ? Json(*r.c1_squared) : Json(nullptr)},
                    {"c1_divisibility", r.c1_squared ? Json(r.c1_divisibility) : Json(nullptr)},
                    {"einstein_known", optional_json(r.einstein_known)},
                    {"provenance", r.provenance}});
  };
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> samples{
      {"K3", {}}, {"S2xS2", {}}, {"CP2", {}}, {"CP2bar", {}}, {"X", {2}}, {"Y", {0}},
      {"Y", {1}}, {"Z", {2}},    {"R22", {}}, {"BC", {6}}};
  for (const auto& [name, params] : samples) add(ctx.catalog.record(name, params));
  for (const auto& [key, r] : ctx.catalog.overrides())
    if (std::find(samples.begin(), samples.end(), key) == samples.end()) add(r);
  emit_rows({"label", "b_plus", "b_minus", "spin", "c1_squared", "c1_divisibility", "einstein_known", "provenance"},
            rows, ctx.format, ctx.out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants, homeomorphism tests and Einstein-metric obstructions for smooth 4-manifolds",
               "fourfold"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  std::string expr, expr2, m_range, n_range, ell_list, filter, form_text;
  bool certify = false, all = false;
  std::int64_t ell = 1;

  auto* invariants = app.add_subcommand("invariants", "Characteristic numbers and intersection form of EXPR");
  invariants->add_option("EXPR", expr, "Connected-sum expression, e.g. \"X(2) # Y(0) # Y(5)\"")->required();

  auto* homeo = app.add_subcommand("homeo", "Decide whether two expressions are homeomorphic");
  homeo->add_option("EXPR1", expr)->required();
  homeo->add_option("EXPR2", expr2)->required();

  auto* ht = app.add_subcommand("hitchin-thorpe", "Hitchin-Thorpe status of EXPR");
  ht->add_option("EXPR", expr)->required();

  auto* einstein = app.add_subcommand("check-einstein", "Einstein-metric obstruction for EXPR");
  einstein->add_option("EXPR", expr)->required();

  auto* bw = app.add_subcommand("bandwidth", "Bandwidth lower bound of the monopole classes of EXPR");
  bw->add_option("EXPR", expr, "Expression; the parameter l marks a family, e.g. \"X(2) # Y(0) # Y(l)\"")
      ->required();
  bw->add_option("--ell-list", ell_list, "Values of l: comma-separated integers or ranges A..B");

  auto* sc = app.add_subcommand("scan", "Region membership over a grid of (m, n)");
  sc->add_option("--m", m_range, "Range A..B of m")->required();
  sc->add_option("--n", n_range, "Range C..D of n")->required();
  sc->add_flag("--certify", certify, "Attempt witness certification for claimed regions");
  sc->add_option("--ell", ell, "l used by certified witnesses")->capture_default_str();

  auto* cf = app.add_subcommand("classify-form", "Classify a unimodular form such as \"-2E8 + 3H\"");
  cf->add_option("FORMTEXT", form_text)->required();

  auto* rep = app.add_subcommand("reproduce", "Run the regression table of known results");
  auto* filter_opt = rep->add_option("--filter", filter, "Run only rows with this tag");
  rep->add_flag("--all", all, "Run every row (default)")->excludes(filter_opt);

  auto* cat = app.add_subcommand("catalog", "List catalog entries (builtin samples and overrides)");

  std::vector<const char*> argv{"fourfold"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    Context ctx{format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table, out, err,
                Catalog::builtin(), {}};
    ctx.catalog = Catalog::from_environment(ctx.catalog_issues);

    if (invariants->parsed()) return cmd_invariants(ctx, expr);
    if (homeo->parsed()) return cmd_homeo(ctx, expr, expr2);
    if (ht->parsed()) return cmd_hitchin_thorpe(ctx, expr);
    if (einstein->parsed()) return cmd_check_einstein(ctx, expr);
    if (bw->parsed()) return cmd_bandwidth(ctx, expr, ell_list);
    if (sc->parsed()) return cmd_scan(ctx, m_range, n_range, certify, ell);
    if (cf->parsed()) return cmd_classify_form(ctx, form_text);
    if (rep->parsed()) return cmd_reproduce(ctx, filter);
    if (cat->parsed()) return cmd_catalog(ctx);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace fourfold::cli
