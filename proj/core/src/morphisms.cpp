#include "cb/morphisms.hpp"

#include <iostream>
#include <map>
#include <mutex>

#include "cb/error.hpp"

namespace cb {

Rational ZetaFunctional::operator()(const WElem& x) const {
  return evaluate([this](const WKey& a) { return eval(a); }, x);
}

Rational zeta_basic(Monotone m, const WKey& a) {
  switch (m) {
    case Monotone::le: return is_weakly_increasing(a.word) ? 1 : 0;
    case Monotone::ge: return is_weakly_decreasing(a.word) ? 1 : 0;
    case Monotone::lt: return is_strictly_increasing(a.word) ? 1 : 0;
    case Monotone::gt: return is_strictly_decreasing(a.word) ? 1 : 0;
  }
  return 0;
}

ZetaFunctional zeta_basic(Monotone m) {
  static const char* names[] = {"le", "ge", "lt", "gt"};
  return {names[static_cast<int>(m)], [m](const WKey& a) { return zeta_basic(m, a); }};
}

ZetaFunctional zeta_convolve(const ZetaFunctional& z1, const ZetaFunctional& z2) {
  return {z1.name + z2.name, [z1, z2](const WKey& a) {
            Rational total = 0;
            for (std::size_t i = 0; i <= a.word.size(); ++i) {
              Rational left = z1(WKey(a.word.prefix(i), a.frame));
              if (left != 0) total += left * z2(WKey(a.word.suffix_from(i), a.frame));
            }
            return total;
          }};
}

namespace {

ZetaFunctional gtle() { return zeta_convolve(zeta_basic(Monotone::gt), zeta_basic(Monotone::le)); }

}  // namespace

ZetaFunctional zeta_B() {
  auto base = gtle();
  return {"B", [base](const WKey& a) { return pow2(-count_ones(a.word)) * base(a); }};
}

ZetaFunctional zeta_C() {
  auto base = gtle();
  base.name = "C";
  return base;
}

ZetaFunctional zeta_D() {
  auto base = gtle();
  return {"D", [base](const WKey& a) { return pow2(-count_ones_and_twos(a.word)) * base(a); }};
}

const std::vector<std::string>& fast_zeta_names() {
  static const std::vector<std::string> names{"le", "ge", "lt", "gt", "gtle", "ltge", "gelt", "legt"};
  return names;
}

ZetaFunctional zeta_by_name(std::string_view name) {
  if (name == "le") return zeta_basic(Monotone::le);
  if (name == "ge") return zeta_basic(Monotone::ge);
  if (name == "lt") return zeta_basic(Monotone::lt);
  if (name == "gt") return zeta_basic(Monotone::gt);
  if (name == "gtle") return gtle();
  if (name == "ltge") return zeta_convolve(zeta_basic(Monotone::lt), zeta_basic(Monotone::ge));
  if (name == "gelt") return zeta_convolve(zeta_basic(Monotone::ge), zeta_basic(Monotone::lt));
  if (name == "legt") return zeta_convolve(zeta_basic(Monotone::le), zeta_basic(Monotone::gt));
  if (name == "B") return zeta_B();
  if (name == "C") return zeta_C();
  if (name == "D") return zeta_D();
  throw InvalidInput("unknown zeta functional '" + std::string(name) + "'");
}

Rational zeta_alpha(const ZetaFunctional& z, const Composition& alpha, const WKey& a) {
  if (alpha.weight() != a.degree()) return 0;
  Rational total = 1;
  std::size_t start = 0;
  for (int part : alpha.parts()) {
    const auto len = static_cast<std::size_t>(part);
    std::vector<Letter> block(a.word.begin() + static_cast<std::ptrdiff_t>(start),
                              a.word.begin() + static_cast<std::ptrdiff_t>(start + len));
    total *= z(WKey(Word(std::move(block)), a.frame));
    if (total == 0) return 0;
    start += len;
  }
  return total;
}

std::optional<std::string> multiplicativity_witness(const ZetaFunctional& z) {
  std::vector<WKey> sample;
  for (int n = 0; n <= 2; ++n) {
    sample.emplace_back(Word{}, n);
    for (int a = 1; a <= n; ++a) {
      sample.emplace_back(Word{a}, n);
      for (int b = 1; b <= n; ++b) sample.emplace_back(Word{a, b}, n);
    }
  }
  for (const auto& a : sample)
    for (const auto& b : sample)
      if (z(w_product(a, b)) != z(a) * z(b)) return to_string(a) + "·" + to_string(b);
  for (int n = 0; n <= 2; ++n)
    if (z(WKey(Word{}, n)) != 1) return "[;" + std::to_string(n) + "] does not evaluate to 1";
  return std::nullopt;
}

QSym psi(const ZetaFunctional& z, const WElem& x, CharacterPolicy policy) {
  if (policy != CharacterPolicy::skip) {
    static std::mutex guard;
    static std::map<std::string, std::optional<std::string>> checked;
    std::optional<std::string> witness;
    {
      std::lock_guard lock(guard);
      auto it = checked.find(z.name);
      if (it == checked.end()) it = checked.emplace(z.name, multiplicativity_witness(z)).first;
      witness = it->second;
    }
    if (witness) {
      const std::string msg = "zeta '" + z.name + "' is not multiplicative on " + *witness;
      if (policy == CharacterPolicy::fail) throw InvalidInput(msg);
      std::cerr << "warning: " << msg << "\n";
    }
  }
  QSym out;
  for (const auto& [a, c] : x)
    for (const auto& alpha : compositions_of(a.degree())) out.add_term(alpha, c * zeta_alpha(z, alpha, a));
  return out;
}

QSym psi_fast(std::string_view name, const WKey& a) {
  const int n = a.degree();
  const Word& w = a.word;
  const Word wr = w.reversed();
  auto L = [&](const PositionSet& s) { return Composition::from_set(s, n); };
  if (name == "le") return l_to_m(L(descents(w)));
  if (name == "gt") return l_to_m(comp_complement(L(descents(w))));
  if (name == "ge") return l_to_m(comp_reverse(L(descents(wr))));
  if (name == "lt") return l_to_m(comp_transpose(L(descents(wr))));
  if (name == "gtle") return k_to_m(L(peaks(w)));
  if (name == "ltge") return k_to_m(L(valleys(w)));
  if (name == "gelt") return k_to_m(comp_flat(L(peaks(wr))));
  if (name == "legt") return k_to_m(comp_flat(L(valleys(wr))));
  throw InvalidInput("no closed form for zeta '" + std::string(name) + "'");
}

QSym psi_fast(std::string_view name, const WElem& x) {
  QSym out;
  for (const auto& [a, c] : x) out += psi_fast(name, a) * c;
  return out;
}

QSym psi_B(const WElem& x) {
  QSym out;
  for (const auto& [a, c] : x) out += psi_fast("gtle", a) * (c * pow2(-count_ones(a.word)));
  return out;
}

QSym psi_C(const WElem& x) { return psi_fast("gtle", x); }

QSym psi_D(const WElem& x) {
  QSym out;
  for (const auto& [a, c] : x) out += psi_fast("gtle", a) * (c * pow2(-count_ones_and_twos(a.word)));
  return out;
}

}  // namespace cb
