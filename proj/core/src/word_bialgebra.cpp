#include "cb/word_bialgebra.hpp"

#include "cb/error.hpp"

namespace cb {

WKey::WKey(Word w, int n) : word(std::move(w)), frame(n) {
  if (n < 0) throw InvalidInput("negative frame");
  if (word.max_letter() > n)
    throw InvalidInput("[" + cb::to_string(word) + "," + std::to_string(n) + "]: letter exceeds frame");
}

std::string to_string(const WKey& k) { return "[" + to_string(k.word) + ";" + std::to_string(k.frame) + "]"; }

WKey parse_wkey(std::string_view text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']')
    throw InvalidInput("expected [w;n], got '" + std::string(text) + "'");
  auto body = text.substr(1, text.size() - 2);
  auto semi = body.rfind(';');
  if (semi == std::string_view::npos) throw InvalidInput("missing ';' in '" + std::string(text) + "'");
  std::string frame(body.substr(semi + 1));
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(frame, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (frame.empty() || used != frame.size()) throw InvalidInput("bad frame in '" + std::string(text) + "'");
  return WKey(parse_word(body.substr(0, semi)), n);
}

std::string render(const WElem& x) {
  return render(x, [](const WKey& k) { return to_string(k); });
}

std::string render(const Tensor<WKey, WKey>& x) {
  return render(x, [](const auto& p) { return to_string(p.first) + "⊗" + to_string(p.second); });
}

WElem w_product(const WKey& a, const WKey& b) {
  WElem out;
  const int n = a.frame + b.frame;
  for (const auto& [w, c] : shuffle_product(a.word, b.word.shifted(a.frame))) out.add_term(WKey(w, n), c);
  return out;
}

WElem w_product(const WElem& x, const WElem& y) {
  return bilinear_extend([](const WKey& a, const WKey& b) { return w_product(a, b); }, x, y);
}

Tensor<WKey, WKey> w_coproduct(const WKey& a) {
  Tensor<WKey, WKey> out;
  for (std::size_t i = 0; i <= a.word.size(); ++i)
    out.add_term({WKey(a.word.prefix(i), a.frame), WKey(a.word.suffix_from(i), a.frame)}, 1);
  return out;
}

Tensor<WKey, WKey> w_coproduct(const WElem& x) {
  return linear_extend([](const WKey& a) { return w_coproduct(a); }, x);
}

Tensor<WKey, WKey> w_tensor_product(const Tensor<WKey, WKey>& x, const Tensor<WKey, WKey>& y) {
  Tensor<WKey, WKey> out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) out += tensor(w_product(p.first, q.first), w_product(p.second, q.second)) * (cp * cq);
  return out;
}

Rational w_counit(const WKey& a) { return a.word.empty() ? 1 : 0; }

Rational w_counit(const WElem& x) {
  return evaluate([](const WKey& a) { return w_counit(a); }, x);
}

Rational counting_character(const WKey& a) { return Rational(1) / Rational(factorial(static_cast<unsigned>(a.degree()))); }

Rational counting_character(const WElem& x) {
  return evaluate([](const WKey& a) { return counting_character(a); }, x);
}

Word pack_project(const WKey& a) { return flatten(a.word); }

}  // namespace cb
