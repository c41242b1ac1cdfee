#include "fourfold/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fourfold/checked.hpp"
#include "fourfold/errors.hpp"

namespace fourfold {

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::Positive:
      return "positive";
    case Definiteness::Negative:
      return "negative";
    case Definiteness::Indefinite:
      return "indefinite";
    case Definiteness::ZeroRank:
      return "zero-rank";
  }
  return "?";
}

namespace {

void require_valid(const UnimodularForm& f) {
  if (f.pos_diag < 0 || f.neg_diag < 0 || f.hyperbolic < 0)
    throw ParameterOutOfRange("form block counts must be non-negative: " + f.to_string());
}

}  // namespace

std::int64_t UnimodularForm::rank() const {
  using namespace checked;
  return add(add(pos_diag, neg_diag), add(mul(2, hyperbolic), mul(8, abs(e8))));
}

std::int64_t UnimodularForm::signature() const {
  using namespace checked;
  return add(sub(pos_diag, neg_diag), mul(8, e8));
}

std::int64_t UnimodularForm::b_plus() const {
  using namespace checked;
  return add(add(pos_diag, hyperbolic), e8 > 0 ? mul(8, e8) : 0);
}

std::int64_t UnimodularForm::b_minus() const {
  using namespace checked;
  return add(add(neg_diag, hyperbolic), e8 < 0 ? mul(8, -e8) : 0);
}

std::string UnimodularForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto term = [&](std::int64_t count, const char* block) {
    if (count == 0) return;
    if (!first) out << " + ";
    out << count << block;
    first = false;
  };
  term(e8, "E8");
  term(hyperbolic, "H");
  term(pos_diag, "<1>");
  term(neg_diag, "<-1>");
  if (first) out << "0";
  return out.str();
}

UnimodularForm UnimodularForm::parse(std::string_view text) {
  UnimodularForm f;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto starts = [&](std::string_view tok) { return text.substr(pos, tok.size()) == tok; };

  skip_ws();
  if (pos == text.size()) throw SyntaxError("empty form", pos);
  if (starts("0")) {
    // A lone "0" denotes the zero-rank form.
    std::size_t save = pos;
    ++pos;
    skip_ws();
    if (pos == text.size()) return f;
    pos = save;
  }

  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) {
      if (expect_term) throw SyntaxError("expected a block term", pos);
      break;
    }
    if (!expect_term) {
      // '-' doubles as separator and sign of the next coefficient
      if (text[pos] != '+' && text[pos] != '-') throw SyntaxError("expected '+'", pos);
      if (text[pos] == '+') ++pos;
      expect_term = true;
      continue;
    }
    std::size_t term_start = pos;
    std::int64_t sign = 1;
    if (text[pos] == '-' || text[pos] == '+') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
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
    coeff *= sign;
    if (starts("E8")) {
      pos += 2;
      f.e8 = checked::add(f.e8, coeff);
    } else if (starts("<-1>")) {
      pos += 4;
      if (coeff < 0) throw SyntaxError("negative <-1> count", term_start);
      f.neg_diag = checked::add(f.neg_diag, coeff);
    } else if (starts("<1>") || starts("<+1>")) {
      pos += starts("<1>") ? 3 : 4;
      if (coeff < 0) throw SyntaxError("negative <1> count", term_start);
      f.pos_diag = checked::add(f.pos_diag, coeff);
    } else if (starts("H")) {
      pos += 1;
      if (coeff < 0) throw SyntaxError("negative H count", term_start);
      f.hyperbolic = checked::add(f.hyperbolic, coeff);
    } else {
      throw SyntaxError("expected E8, H, <1> or <-1>", pos);
    }
    expect_term = false;
  }
  return f;
}

UnimodularForm direct_sum(const UnimodularForm& a, const UnimodularForm& b) {
  using checked::add;
  // E8 + (-E8) is even, indefinite, of rank 16 and signature 0, hence 8H.
  std::int64_t cancelled = 0;
  if ((a.e8 > 0 && b.e8 < 0) || (a.e8 < 0 && b.e8 > 0)) cancelled = std::min(checked::abs(a.e8), checked::abs(b.e8));
  return {add(a.pos_diag, b.pos_diag), add(a.neg_diag, b.neg_diag),
          add(add(a.hyperbolic, b.hyperbolic), checked::mul(8, cancelled)), add(a.e8, b.e8)};
}

FormClass classify(const UnimodularForm& f) {
  require_valid(f);
  FormClass c;
  c.rank = f.rank();
  c.signature = f.signature();
  c.parity = f.parity();
  const std::int64_t bp = f.b_plus();
  const std::int64_t bm = f.b_minus();
  if (c.rank == 0) {
    c.definiteness = Definiteness::ZeroRank;
  } else if (bp > 0 && bm > 0) {
    c.definiteness = Definiteness::Indefinite;
  } else {
    if (f.e8 != 0 || f.hyperbolic != 0)
      throw UnsupportedDefinite("definite form with E8 blocks is not classified: " + f.to_string());
    c.definiteness = bp > 0 ? Definiteness::Positive : Definiteness::Negative;
  }
  return c;
}

bool is_isomorphic(const UnimodularForm& a, const UnimodularForm& b) {
  const FormClass ca = classify(a);
  const FormClass cb = classify(b);
  // Diagonal definite forms are determined by their block counts, which the
  // class already captures (rank and signature fix p and q).
  return ca == cb;
}

UnimodularForm normal_form(const UnimodularForm& f) {
  const FormClass c = classify(f);
  if (c.definiteness == Definiteness::ZeroRank) return {};
  if (c.parity == Parity::Odd || c.definiteness != Definiteness::Indefinite)
    return UnimodularForm::diagonal(f.b_plus(), f.b_minus());
  const std::int64_t a = c.signature / 8;
  return UnimodularForm::even(a, (c.rank - 8 * checked::abs(a)) / 2);
}

UnimodularForm form_from_invariants(std::int64_t b_plus, std::int64_t b_minus, bool even) {
  if (b_plus < 0 || b_minus < 0) throw ParameterOutOfRange("negative Betti number");
  if (!even) {
    if (b_plus + b_minus == 0) throw ParameterOutOfRange("rank-zero form is even");
    return UnimodularForm::diagonal(b_plus, b_minus);
  }
  const std::int64_t sig = b_plus - b_minus;
  if (sig % 8 != 0) throw ParameterOutOfRange("even form needs signature divisible by 8");
  const std::int64_t a = sig / 8;
  const std::int64_t rest = b_plus + b_minus - 8 * checked::abs(a);
  // rest is even here since rank and signature have equal parity
  if (b_plus + b_minus > 0 && rest == 0)
    throw ParameterOutOfRange("even definite form is not supported");
  return UnimodularForm::even(a, rest / 2);
}

std::vector<std::string> realizability_warnings(const UnimodularForm& f) {
  std::vector<std::string> out;
  if (f.is_even() && f.signature() % 16 != 0)
    out.push_back("even form with signature " + std::to_string(f.signature()) +
                  " not divisible by 16: not the form of a closed smooth spin 4-manifold "
                  "(Rokhlin check, advisory)");
  return out;
}

}  // namespace fourfold
