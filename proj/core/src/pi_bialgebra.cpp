#include "cb/pi_bialgebra.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "cb/coxeter.hpp"
#include "cb/error.hpp"

namespace cb {

std::string to_string(const PiKey& k) { return "[" + to_string(k.perm) + "]"; }

PiKey parse_pikey(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InvalidInput("expected [π], got '" + std::string(text) + "'");
  return PiKey{parse_permutation(text.substr(1, text.size() - 2))};
}

std::string render(const PiElem& x) {
  return render(x, [](const PiKey& k) { return to_string(k); });
}

std::string render(const PiTensor& x) {
  return render(x, [](const auto& p) { return to_string(p.first) + "⊗" + to_string(p.second); });
}

WElem expand(const PiKey& k) {
  WElem out;
  for (const auto& w : reduced_words(k.perm)) out.add_term(WKey(w, k.frame()), 1);
  return out;
}

WElem expand(const PiElem& x) {
  return linear_extend([](const PiKey& k) { return expand(k); }, x);
}

namespace {

Permutation reduced_evaluation(const WKey& k) {
  Permutation s = permutation_from_word(k.word, k.frame + 1);
  if (s.length() != k.degree())
    throw InternalInconsistency(to_string(k) + " is not a reduced word");
  return s;
}

template <class GroupKey>
struct Group {
  Rational coeff;
  BigInt members = 0;
  bool uniform = true;

  void add(const Rational& c) {
    if (members == 0)
      coeff = c;
    else if (coeff != c)
      uniform = false;
    ++members;
  }
};

}  // namespace

PiElem regroup_pi(const WElem& x) {
  std::map<Permutation, Group<Permutation>> groups;
  for (const auto& [k, c] : x) groups[reduced_evaluation(k)].add(c);
  PiElem out;
  for (const auto& [s, g] : groups) {
    if (!g.uniform || g.members != reduced_word_count(s))
      throw InternalInconsistency("words of " + to_string(s) + " do not form a full class");
    out.add_term(PiKey{s}, g.coeff);
  }
  return out;
}

PiTensor regroup_pi(const Tensor<WKey, WKey>& x) {
  std::map<std::pair<Permutation, Permutation>, Group<Permutation>> groups;
  for (const auto& [k, c] : x) groups[{reduced_evaluation(k.first), reduced_evaluation(k.second)}].add(c);
  PiTensor out;
  for (const auto& [st, g] : groups) {
    if (!g.uniform || g.members != reduced_word_count(st.first) * reduced_word_count(st.second))
      throw InternalInconsistency("tensor words of " + to_string(st.first) + "⊗" + to_string(st.second) +
                                  " do not form a full class");
    out.add_term({PiKey{st.first}, PiKey{st.second}}, g.coeff);
  }
  return out;
}

std::vector<Permutation> s_shuffle(const Permutation& u, const Permutation& v) {
  thread_local std::map<std::pair<Permutation, Permutation>, std::vector<Permutation>> memo;
  if (auto it = memo.find({u, v}); it != memo.end()) return it->second;

  const int m = u.size() - 1;
  std::vector<int> w;
  for (int x : v.oneline()) w.push_back(x + m);
  const auto& uu = u.oneline();

  std::vector<Permutation> out;
  if (u(m + 1) == m + 1) {
    std::vector<int> s(uu.begin(), uu.end() - 1);
    s.insert(s.end(), w.begin(), w.end());
    out.emplace_back(std::move(s));
  } else if (w.front() == m + 1) {
    std::vector<int> s(uu);
    s.insert(s.end(), w.begin() + 1, w.end());
    out.emplace_back(std::move(s));
  } else {
    const auto j = static_cast<std::size_t>(std::find(uu.begin(), uu.end(), m + 1) - uu.begin()) + 1;
    const auto k = static_cast<std::size_t>(std::find(w.begin(), w.end(), m + 1) - w.begin());
    const Word head(std::vector<int>(uu.begin(), uu.begin() + static_cast<std::ptrdiff_t>(j)));
    const Word tail(std::vector<int>(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
    const auto u_tilde = flatten_to_permutation(Word(std::vector<int>(uu.begin() + static_cast<std::ptrdiff_t>(j), uu.end())));
    const auto v_tilde = flatten_to_permutation(as_word(v).prefix(k));

    std::vector<Permutation> left, right;
    for (const auto& s : s_shuffle(u_tilde, v)) left.push_back(slash_over(head, as_word(s)));
    for (const auto& s : s_shuffle(u, v_tilde)) right.push_back(slash_under(as_word(s), tail));
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    std::merge(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(out));
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
      throw InternalInconsistency("branches of 𝒮⧢(" + to_string(u) + "," + to_string(v) + ") overlap");
  }
  memo.emplace(std::make_pair(u, v), out);
  return out;
}

std::vector<Permutation> s_shuffle(const std::vector<Permutation>& xs, const std::vector<Permutation>& ys) {
  std::vector<Permutation> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      auto part = s_shuffle(x, y);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InternalInconsistency("𝒮⧢ pieces overlap");
  return out;
}

std::vector<Permutation> s_shuffle_multi(const std::vector<Permutation>& seq) {
  if (seq.empty()) throw InvalidInput("s_shuffle_multi needs at least one permutation");
  std::vector<Permutation> acc{seq.back()};
  for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) acc = s_shuffle({*it}, acc);
  return acc;
}

PiElem pi_product(const PiKey& u, const PiKey& v) {
  PiElem out;
  for (const auto& s : s_shuffle(u.perm, v.perm)) out.add_term(PiKey{s}, 1);
  return out;
}

PiElem pi_product(const PiElem& x, const PiElem& y) {
  return bilinear_extend([](const PiKey& a, const PiKey& b) { return pi_product(a, b); }, x, y);
}

PiElem pi_product_oracle(const PiKey& u, const PiKey& v) {
  WElem words = w_product(expand(u), expand(v));
  for (const auto& [k, c] : words)
    if (c != 1) throw InternalInconsistency("shuffle word " + to_string(k) + " appears more than once");
  PiElem out = regroup_pi(words);
  for (const auto& [k, c] : out)
    if (c != 1) throw InternalInconsistency("product is not multiplicity-free at " + to_string(k));
  return out;
}

PiElem pi_product_oracle_counting(const PiKey& u, const PiKey& v) {
  const int m = u.frame();
  const int n = v.frame();
  const auto pu = coxeter::reduced_prefixes<coxeter::TypeA>(u.perm);
  const auto pv = coxeter::reduced_prefixes<coxeter::TypeA>(v.perm);
  const std::unordered_set<Permutation> in_u(pu.begin(), pu.end());
  const std::unordered_set<Permutation> in_v(pv.begin(), pv.end());

  struct State {
    Permutation x, p, q;
    auto operator<=>(const State&) const = default;
  };
  std::map<State, BigInt> layer{{State{Permutation::identity(m + n + 1), Permutation::identity(m + 1),
                                       Permutation::identity(n + 1)},
                                 BigInt(1)}};
  const int steps = u.degree() + v.degree();
  for (int t = 0; t < steps; ++t) {
    std::map<State, BigInt> next;
    for (const auto& [st, count] : layer) {
      auto step = [&](const Permutation& p2, const Permutation& q2, int letter) {
        if (st.x.has_right_descent(letter))
          throw InternalInconsistency("a shuffle of reduced words of " + to_string(u) + " and " + to_string(v) +
                                      " is not reduced");
        next[State{st.x.times_generator(letter), p2, q2}] += count;
      };
      for (int i = 1; i <= m; ++i) {
        if (st.p.has_right_descent(i)) continue;
        auto p2 = st.p.times_generator(i);
        if (in_u.count(p2)) step(p2, st.q, i);
      }
      for (int i = 1; i <= n; ++i) {
        if (st.q.has_right_descent(i)) continue;
        auto q2 = st.q.times_generator(i);
        if (in_v.count(q2)) step(st.p, q2, i + m);
      }
    }
    layer = std::move(next);
  }
  PiElem out;
  for (const auto& [st, count] : layer) {
    if (st.p != u.perm || st.q != v.perm) throw InternalInconsistency("walk ended before exhausting both words");
    if (count != reduced_word_count(st.x))
      throw InternalInconsistency("shuffles reach " + to_string(st.x) + " " + to_string(count) + " times, expected " +
                                  to_string(reduced_word_count(st.x)));
    out.add_term(PiKey{st.x}, 1);
  }
  return out;
}

PiElem fc_product(const PiKey& a, const PiKey& b) {
  const auto& u = a.perm;
  const auto& v = b.perm;
  if (!is_321_avoiding(u) || !is_321_avoiding(v))
    throw InvalidInput("fc_product needs 321-avoiding operands, got " + to_string(u) + " and " + to_string(v));
  const int m = u.size();
  std::vector<int> uw(u.oneline());
  for (int x : v.oneline()) uw.push_back(x + m - 1);
  const auto first = static_cast<std::size_t>(std::find(uw.begin(), uw.end(), m) - uw.begin());
  const auto second = static_cast<std::size_t>(std::find(uw.begin() + static_cast<std::ptrdiff_t>(first) + 1, uw.end(), m) - uw.begin());
  const auto mm = static_cast<std::size_t>(m);

  std::vector<int> up(uw);
  up[second] = u(m);
  up.erase(up.begin() + static_cast<std::ptrdiff_t>(mm - 1));
  std::vector<int> vp(uw);
  vp[first] = uw[mm];
  vp.erase(vp.begin() + static_cast<std::ptrdiff_t>(mm));

  Permutation u_prime(std::move(up));
  Permutation v_prime(std::move(vp));
  if (u_prime == v_prime) return PiElem::term(PiKey{u_prime});
  return PiElem{{PiKey{u_prime}, 1}, {PiKey{v_prime}, 1}};
}

PiTensor pi_coproduct(const PiKey& u) {
  PiTensor out;
  for (const auto& p : coxeter::reduced_prefixes<coxeter::TypeA>(u.perm))
    out.add_term({PiKey{p}, PiKey{p.inverse() * u.perm}}, 1);
  return out;
}

PiTensor pi_coproduct(const PiElem& x) {
  return linear_extend([](const PiKey& k) { return pi_coproduct(k); }, x);
}

PiTensor pi_tensor_product(const PiTensor& x, const PiTensor& y) {
  PiTensor out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y)
      out += tensor(pi_product(p.first, q.first), pi_product(p.second, q.second)) * (cp * cq);
  return out;
}

Rational pi_counit(const PiKey& u) { return u.degree() == 0 ? 1 : 0; }

bool flatten_reduced_words_bijection_check(const Permutation& p) {
  const auto words = reduced_words(p);
  std::vector<Word> flat;
  flat.reserve(words.size());
  for (const auto& w : words) flat.push_back(flatten(w));
  std::sort(flat.begin(), flat.end());
  if (std::adjacent_find(flat.begin(), flat.end()) != flat.end()) return false;

  std::vector<Word> target;
  for (const auto& s : s_shuffle_multi(irreducible_factors(p))) {
    auto rs = reduced_words(s);
    target.insert(target.end(), rs.begin(), rs.end());
  }
  std::sort(target.begin(), target.end());
  if (std::adjacent_find(target.begin(), target.end()) != target.end()) return false;
  return flat == target;
}

Rational counting_character_pi(const PiKey& k) {
  return Rational(reduced_word_count(k.perm)) / Rational(factorial(static_cast<unsigned>(k.degree())));
}

Rational counting_character_pi(const PiElem& x) {
  return evaluate([](const PiKey& k) { return counting_character_pi(k); }, x);
}

}  // namespace cb
