#include "fourfold/expression.hpp"

#include <cctype>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {

std::vector<std::int64_t> ExprTerm::values() const {
  std::vector<std::int64_t> out;
  for (const auto& p : params) {
    if (p.is_ell) throw ParameterOutOfRange("placeholder 'l' in " + name + " has not been instantiated");
    out.push_back(p.value);
  }
  return out;
}

std::int64_t SumExpression::summand_count() const {
  std::int64_t n = 0;
  for (const auto& t : terms) n = checked::add(n, t.multiplicity);
  return n;
}

bool SumExpression::has_placeholder() const {
  for (const auto& t : terms)
    for (const auto& p : t.params)
      if (p.is_ell) return true;
  return false;
}

std::string SumExpression::to_string() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " # ";
    if (t.multiplicity != 1) out += std::to_string(t.multiplicity) + "*";
    out += t.name;
    if (!t.params.empty()) {
      out += "(";
      for (std::size_t i = 0; i < t.params.size(); ++i) {
        if (i) out += ",";
        out += t.params[i].is_ell ? "l" : std::to_string(t.params[i].value);
      }
      out += ")";
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_placeholder) : text_(text), allow_placeholder_(allow_placeholder) {}

  SumExpression parse() {
    SumExpression e;
    e.terms.push_back(term());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '#') throw SyntaxError("expected '#'", pos_);
      ++pos_;
      e.terms.push_back(term());
      skip_ws();
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

  std::int64_t integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (!at_digit()) throw SyntaxError("expected integer", pos_);
    std::int64_t v = 0;
    while (at_digit()) {
      try {
        v = checked::add(checked::mul(v, 10), text_[pos_] - '0');
      } catch (const std::overflow_error&) {
        throw SyntaxError("integer too large", start);
      }
      ++pos_;
    }
    return negative ? -v : v;
  }

  ExprTerm term() {
    skip_ws();
    ExprTerm t;
    t.offset = pos_;
    if (pos_ >= text_.size()) throw SyntaxError("expected term", pos_);
    if (at_digit()) {
      const std::size_t at = pos_;
      t.multiplicity = integer(false);
      if (t.multiplicity <= 0) throw SyntaxError("multiplicity must be positive", at);
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '*') throw SyntaxError("expected '*' after multiplicity", pos_);
      ++pos_;
      skip_ws();
    }
    const std::size_t name_start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("expected manifold name", pos_);
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    t.name = std::string(text_.substr(name_start, pos_ - name_start));
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'l' &&
            (pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
          if (!allow_placeholder_) throw SyntaxError("placeholder 'l' is only allowed in family expressions", pos_);
          ++pos_;
          t.params.push_back({0, true});
        } else {
          t.params.push_back({integer(true), false});
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw SyntaxError("expected ',' or ')'", pos_);
      }
    }
    return t;
  }

  std::string_view text_;
  bool allow_placeholder_;
  std::size_t pos_ = 0;
};

}  // namespace

SumExpression parse_expression(std::string_view text, bool allow_placeholder) {
  return Parser(text, allow_placeholder).parse();
}

SumExpression instantiate(const SumExpression& e, std::int64_t ell) {
  SumExpression out = e;
  for (auto& t : out.terms)
    for (auto& p : t.params)
      if (p.is_ell) p = {ell, false};
  return out;
}

namespace {

ManifoldSpec summand(const ExprTerm& t, const Catalog& catalog) {
  const CatalogRecord r = catalog.record(t.name, t.values());
  const auto issues = validate_record(r);
  if (!issues.empty()) throw CatalogError("inconsistent catalog entry: " + issues.front());
  return to_manifold(r);
}

}  // namespace

ManifoldSpec evaluate(const SumExpression& e, const Catalog& catalog) {
  if (e.summand_count() > kMaxSummands)
    throw ParameterOutOfRange("expression expands to more than " + std::to_string(kMaxSummands) + " summands");
  ManifoldSpec result = sphere();
  bool first = true;
  for (const auto& t : e.terms) {
    const ManifoldSpec s = summand(t, catalog);
    for (std::int64_t i = 0; i < t.multiplicity; ++i) {
      result = first ? s : connected_sum(result, s);
      first = false;
    }
  }
  if (e.terms.size() > 1 || (e.terms.size() == 1 && e.terms[0].multiplicity > 1)) result.label = e.to_string();
  return result;
}

ManifoldSpec evaluate(std::string_view text, const Catalog& catalog) {
  return evaluate(parse_expression(text), catalog);
}

Decomposition decompose(const SumExpression& e, const Catalog& catalog) {
  if (e.summand_count() > kMaxSummands)
    throw ParameterOutOfRange("expression expands to more than " + std::to_string(kMaxSummands) + " summands");
  Decomposition d;
  for (const auto& t : e.terms) {
    const ManifoldSpec s = summand(t, catalog);
    for (std::int64_t i = 0; i < t.multiplicity; ++i) {
      if (s.blowups > 0 && s.pieces.empty()) {
        d.blowups = checked::add(d.blowups, s.blowups);
      } else if (!s.pieces.empty()) {
        d.pieces.insert(d.pieces.end(), s.pieces.begin(), s.pieces.end());
        d.blowups = checked::add(d.blowups, s.blowups);
      } else {
        d.other_summands.push_back(s.label);
      }
    }
  }
  return d;
}

}  // namespace fourfold
