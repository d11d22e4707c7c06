#include "cb/signed_modules.hpp"

#include <map>

#include "cb/coxeter.hpp"
#include "cb/error.hpp"

namespace cb {

namespace {

template <class Key>
Key parse_signed_key(std::string_view text, std::string_view suffix) {
  if (text.size() < 2 + suffix.size() || text.front() != '[' || !text.ends_with(suffix) ||
      text[text.size() - suffix.size() - 1] != ']')
    throw InvalidInput("expected [π]" + std::string(suffix) + ", got '" + std::string(text) + "'");
  return Key{parse_signed_permutation(text.substr(1, text.size() - suffix.size() - 2))};
}

template <class T, class Key>
LinComb<Key> regroup_signed(const WElem& x) {
  struct Group {
    Rational coeff;
    BigInt members = 0;
    bool uniform = true;
  };
  std::map<SignedPermutation, Group> groups;
  for (const auto& [k, c] : x) {
    auto s = coxeter::evaluate<T>(k.word, k.frame);
    if (T::length(s) != k.degree()) throw InternalInconsistency(to_string(k) + " is not reduced in type " + T::name);
    auto& g = groups[s];
    if (g.members == 0)
      g.coeff = c;
    else if (g.coeff != c)
      g.uniform = false;
    ++g.members;
  }
  LinComb<Key> out;
  for (const auto& [s, g] : groups) {
    if (!g.uniform || g.members != coxeter::reduced_word_count<T>(s))
      throw InternalInconsistency("words of " + to_string(s) + " do not form a full type-" + T::name + " class");
    out.add_term(Key{s}, g.coeff);
  }
  return out;
}

template <class Elem>
void require_multiplicity_free(const WElem& words, const Elem& out) {
  for (const auto& [k, c] : words)
    if (c != 1) throw InternalInconsistency("shuffle word " + to_string(k) + " appears more than once");
  for (const auto& [k, c] : out)
    if (c != 1) throw InternalInconsistency("action is not multiplicity-free at " + to_string(k));
}

}  // namespace

std::string to_string(const BPiKey& k) { return "[" + to_string(k.perm) + "]_B"; }
std::string to_string(const DPiKey& k) { return "[" + to_string(k.perm) + "]_D"; }
BPiKey parse_bpikey(std::string_view text) { return parse_signed_key<BPiKey>(text, "_B"); }
DPiKey parse_dpikey(std::string_view text) {
  auto k = parse_signed_key<DPiKey>(text, "_D");
  if (!k.perm.in_d()) throw NotInGroup(to_string(k.perm) + " is not in D_n");
  return k;
}

std::string render(const BPiElem& x) {
  return render(x, [](const BPiKey& k) { return to_string(k); });
}
std::string render(const DPiElem& x) {
  return render(x, [](const DPiKey& k) { return to_string(k); });
}
std::string render(const Tensor<BPiKey, BPiKey>& x) {
  return render(x, [](const auto& p) { return to_string(p.first) + "⊗" + to_string(p.second); });
}
std::string render(const Tensor<DPiKey, DPiKey>& x) {
  return render(x, [](const auto& p) { return to_string(p.first) + "⊗" + to_string(p.second); });
}

BPiElem b_element(const SignedPermutation& p) { return BPiElem::term(BPiKey{p}); }

DPiElem d_element(const SignedPermutation& p) {
  if (!p.in_d()) return {};
  return DPiElem::term(DPiKey{p});
}

WElem expand(const BPiKey& k) {
  WElem out;
  for (const auto& w : reduced_words_b(k.perm)) out.add_term(WKey(w, k.frame()), 1);
  return out;
}

WElem expand(const DPiKey& k) {
  WElem out;
  for (const auto& w : reduced_words_d(k.perm)) out.add_term(WKey(w, k.frame()), 1);
  return out;
}

WElem expand(const BPiElem& x) {
  return linear_extend([](const BPiKey& k) { return expand(k); }, x);
}
WElem expand(const DPiElem& x) {
  return linear_extend([](const DPiKey& k) { return expand(k); }, x);
}

BPiElem regroup_b(const WElem& x) { return regroup_signed<coxeter::TypeB, BPiKey>(x); }
DPiElem regroup_d(const WElem& x) { return regroup_signed<coxeter::TypeD, DPiKey>(x); }

BPiElem bmodule_action(const BPiKey& u, const PiKey& v) {
  WElem words = w_product(expand(u), expand(v));
  BPiElem out = regroup_b(words);
  require_multiplicity_free(words, out);
  return out;
}

BPiElem bmodule_action(const BPiElem& x, const PiElem& y) {
  return bilinear_extend([](const BPiKey& a, const PiKey& b) { return bmodule_action(a, b); }, x, y);
}

DPiElem dmodule_action(const DPiKey& u, const PiKey& v) {
  if (u.frame() < 2) throw InvalidInput("type-D action needs n >= 2");
  WElem words = w_product(expand(u), expand(v));
  DPiElem out = regroup_d(words);
  require_multiplicity_free(words, out);
  return out;
}

DPiElem dmodule_action(const DPiElem& x, const PiElem& y) {
  return bilinear_extend([](const DPiKey& a, const PiKey& b) { return dmodule_action(a, b); }, x, y);
}

Tensor<BPiKey, BPiKey> b_coproduct(const BPiKey& u) {
  Tensor<BPiKey, BPiKey> out;
  for (const auto& p : coxeter::reduced_prefixes<coxeter::TypeB>(u.perm))
    out.add_term({BPiKey{p}, BPiKey{p.inverse() * u.perm}}, 1);
  return out;
}

Tensor<DPiKey, DPiKey> d_coproduct(const DPiKey& u) {
  Tensor<DPiKey, DPiKey> out;
  if (u.frame() < 2) {
    out.add_term({u, u}, 1);
    return out;
  }
  for (const auto& p : coxeter::reduced_prefixes<coxeter::TypeD>(u.perm))
    out.add_term({DPiKey{p}, DPiKey{p.inverse() * u.perm}}, 1);
  return out;
}

}  // namespace cb
