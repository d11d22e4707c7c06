#include "cb/format.hpp"

#include <cctype>
#include <limits>

#include "cb/error.hpp"

namespace cb {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw InvalidInput("not a rational: '" + s + "'");
    return Rational(BigInt(strip_plus(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidInput("not a rational: '" + s + "'");
  return make_rational(BigInt(strip_plus(num)), BigInt(strip_plus(den)));
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational pow2(long e) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(BigInt(1), p);
}

std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<Rational, std::string>> out;
  auto trim = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  text = trim(text);
  if (text == "0" || text.empty()) return out;

  // Cut at top-level '+'/'-' that begin a term: either the first character or
  // preceded by whitespace.
  std::vector<std::pair<int, std::string_view>> pieces;
  int depth = 0;
  std::size_t start = 0;
  int sign = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '[' || ch == '(') ++depth;
    if (ch == ']' || ch == ')') --depth;
    bool at_boundary = depth == 0 && (ch == '+' || ch == '-') &&
                       (i == 0 || std::isspace(static_cast<unsigned char>(text[i - 1])));
    if (!at_boundary) continue;
    if (i > 0) pieces.emplace_back(sign, trim(text.substr(start, i - start)));
    sign = ch == '-' ? -1 : 1;
    start = i + 1;
  }
  pieces.emplace_back(sign, trim(text.substr(start)));

  for (auto [s, piece] : pieces) {
    if (piece.empty()) throw InvalidInput("empty term in '" + std::string(text) + "'");
    Rational c = s;
    // A coefficient prefix is digits and '/' followed by '*' at depth 0.
    std::size_t star = std::string_view::npos;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      char ch = piece[i];
      if (ch == '*') {
        star = i;
        break;
      }
      if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/')) break;
    }
    if (star != std::string_view::npos) {
      c *= parse_rational(piece.substr(0, star));
      piece = trim(piece.substr(star + 1));
    }
    out.emplace_back(c, std::string(piece));
  }
  return out;
}

nlohmann::json big_to_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

BigInt big_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InvalidInput("expected an integer or decimal string in JSON coefficient");
}

}  // namespace cb
