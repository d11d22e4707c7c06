#include "commands.hpp"

#include <cstdlib>

#include "cb/error.hpp"
#include "cb/families.hpp"
#include "cb/format.hpp"
#include "cb/morphisms.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/signed_modules.hpp"
#include "cb/stanley.hpp"
#include "cb/sym.hpp"

namespace cbtool {

using namespace cb;

namespace {

constexpr int kMaxA = 7;
constexpr int kMaxBD = 4;
constexpr long kMaxListedWords = 100000;

void cap(int n, int limit, const std::string& what, const Options& o) {
  if (n > limit && !o.force)
    throw Refusal(what + " has n = " + std::to_string(n) + ", above the cap of " + std::to_string(limit) +
                  "; pass --force to override");
}

void cap_degree(int degree, const Options& o) {
  const char* env = std::getenv("CB_MAX_DEGREE");
  if (!env || o.force) return;
  const int limit = std::atoi(env);
  if (limit > 0 && degree > limit)
    throw Refusal("degree " + std::to_string(degree) + " exceeds CB_MAX_DEGREE=" + std::to_string(limit) +
                  "; pass --force to override");
}

std::string strip_brackets(const std::string& s) {
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') return s.substr(1, s.size() - 2);
  return s;
}

Permutation perm_arg(const std::string& s, const Options& o) {
  auto p = parse_permutation(strip_brackets(s));
  cap(p.size(), kMaxA, to_string(p), o);
  cap_degree(p.length(), o);
  return p;
}

SignedPermutation signed_arg(const std::string& s, const Options& o) {
  std::string t = s;
  for (const char* suffix : {"_B", "_D"})
    if (t.size() > 2 && t.ends_with(suffix)) t = t.substr(0, t.size() - 2);
  auto p = parse_signed_permutation(strip_brackets(t));
  cap(p.size(), kMaxBD, to_string(p), o);
  cap_degree(length_b(p), o);
  return p;
}

std::string word_text(const Word& w) { return w.empty() ? "∅" : to_string(w); }

template <class K, class F>
void put(Report& r, const LinComb<K>& x, F&& key_text) {
  r.text.push_back(render(x, key_text));
  r.result = to_json(x, key_text);
}

auto pi_text = [](const PiKey& k) { return to_string(k); };
auto w_text = [](const WKey& k) { return to_string(k); };
auto b_text = [](const BPiKey& k) { return to_string(k); };
auto d_text = [](const DPiKey& k) { return to_string(k); };
auto basis_text(const std::string& b) {
  return [b](const Composition& a) { return b + to_string(a); };
}
template <class A, class B>
auto pair_text(A&& fa, B&& fb) {
  return [fa, fb](const auto& p) { return fa(p.first) + "⊗" + fb(p.second); };
}

}  // namespace

Report cmd_reduced_words(const std::string& group, const std::string& perm, const Options& o) {
  Report r;
  r.command = "reduced-words " + group + " " + perm;
  std::vector<Word> words;
  BigInt count;
  if (group == "A") {
    auto p = perm_arg(perm, o);
    count = reduced_word_count(p);
    if (!o.count_only && count > kMaxListedWords && !o.force)
      throw Refusal("r = " + to_string(count) + " words is too many to list; use --count or --force");
    if (!o.count_only) words = reduced_words(p);
    r.check("every listed word evaluates to the input with length l(pi)", [&] {
      for (const auto& w : words)
        if (permutation_from_word(w, p.size()) != p || static_cast<int>(w.size()) != p.length()) return false;
      return true;
    }());
  } else if (group == "B" || group == "D") {
    auto p = signed_arg(perm, o);
    const bool b = group == "B";
    if (!b && !p.in_d()) throw NotInGroup(to_string(p) + " is not in D_n");
    count = b ? reduced_word_count_b(p) : reduced_word_count_d(p);
    if (!o.count_only && count > kMaxListedWords && !o.force)
      throw Refusal("r = " + to_string(count) + " words is too many to list; use --count or --force");
    if (!o.count_only) words = b ? reduced_words_b(p) : reduced_words_d(p);
    r.check("every listed word evaluates to the input", [&] {
      for (const auto& w : words)
        if ((b ? signed_permutation_from_word_b(w, p.size()) : signed_permutation_from_word_d(w, p.size())) != p)
          return false;
      return true;
    }());
  } else {
    throw InvalidInput("group must be A, B or D");
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& w : words) {
    r.text.push_back(word_text(w));
    list.push_back(to_string(w));
  }
  r.text.push_back("r = " + to_string(count));
  r.result = {{"group", group}, {"count", big_to_json(count)}};
  if (!o.count_only) r.result["words"] = std::move(list);
  return r;
}

Report cmd_product(const std::string& kind, const std::string& lhs, const std::string& rhs, const Options& o) {
  Report r;
  r.command = "product " + kind + " " + lhs + " " + rhs + (o.oracle ? " --oracle" : "");
  if (kind == "pi") {
    const PiKey u{perm_arg(lhs, o)}, v{perm_arg(rhs, o)};
    cap(u.perm.size() + v.perm.size() - 1, kMaxA, "the product", o);
    const PiElem got = pi_product(u, v);
    put(r, got, pi_text);
    if (o.oracle) {
      const BigInt words = reduced_word_count(u.perm) * reduced_word_count(v.perm) *
                           binomial(static_cast<unsigned>(u.degree() + v.degree()), static_cast<unsigned>(u.degree()));
      PiElem oracle;
      std::string how = words <= 20000 ? "shuffle-and-regroup" : "path-counting";
      try {
        oracle = words <= 20000 ? pi_product_oracle(u, v) : pi_product_oracle_counting(u, v);
        r.check(how + " oracle agrees", oracle == got, render(oracle));
      } catch (const InternalInconsistency& e) {
        r.check(how + " oracle agrees", false, e.what());
      }
      if (is_321_avoiding(u.perm) && is_321_avoiding(v.perm)) {
        const auto fc = fc_product(u, v);
        r.check("two-term rule agrees", fc == got, render(fc));
      }
    }
  } else if (kind == "word") {
    const auto x = parse_lincomb<WKey>(lhs, parse_wkey);
    const auto y = parse_lincomb<WKey>(rhs, parse_wkey);
    const WElem got = w_product(x, y);
    put(r, got, w_text);
    if (o.oracle) {
      WElem brute;
      for (const auto& [a, ca] : x)
        for (const auto& [b, cbb] : y)
          for (const auto& w : shuffle(a.word, b.word.shifted(a.frame))) brute.add_term(WKey(w, a.frame + b.frame), ca * cbb);
      r.check("interleaving enumeration agrees", brute == got, render(brute));
    }
  } else if (kind == "qsymM") {
    const auto x = parse_basis(lhs, 'M');
    const auto y = parse_basis(rhs, 'M');
    const QSym got = m_product(x, y);
    put(r, got, basis_text("M"));
    if (o.oracle) {
      int k = 0;
      for (const auto& [a, c] : got) k = std::max(k, a.weight());
      r.check("power-series product in " + std::to_string(k) + " variables agrees",
              to_polynomial(got, k) == poly_multiply(to_polynomial(x, k), to_polynomial(y, k)));
    }
  } else if (kind == "Bmod" || kind == "Dmod") {
    const bool b = kind == "Bmod";
    const auto u = signed_arg(lhs, o);
    const PiKey v{perm_arg(rhs, o)};
    cap(u.size() + v.frame(), kMaxBD + 1, "the action result", o);
    if (b) {
      const auto got = bmodule_action(BPiKey{u}, v);
      put(r, got, b_text);
      if (o.oracle)
        r.check("Psi^B(x.[v]) = Psi^B(x) Psi_{>|<=}([v])",
                psi_B(expand(got)) == m_product(psi_B(expand(BPiKey{u})), psi_C(expand(v))));
    } else {
      if (!u.in_d()) throw NotInGroup(to_string(u) + " is not in D_n");
      const auto got = dmodule_action(DPiKey{u}, v);
      put(r, got, d_text);
      if (o.oracle)
        r.check("Psi^D(x.[v]) = Psi^D(x) Psi_{>|<=}([v])",
                psi_D(expand(got)) == m_product(psi_D(expand(DPiKey{u})), psi_C(expand(v))));
    }
  } else {
    throw InvalidInput("kind must be pi, word, qsymM, Bmod or Dmod");
  }
  return r;
}

Report cmd_coproduct(const std::string& kind, const std::string& x, const Options& o) {
  Report r;
  r.command = "coproduct " + kind + " " + x + (o.oracle ? " --oracle" : "");
  if (kind == "pi") {
    const PiKey u{perm_arg(x, o)};
    const auto got = pi_coproduct(u);
    put(r, got, pair_text(pi_text, pi_text));
    if (o.oracle) {
      try {
        const auto oracle = regroup_pi(w_coproduct(expand(u)));
        r.check("regrouped deconcatenation agrees", oracle == got, render(oracle));
      } catch (const InternalInconsistency& e) {
        r.check("regrouped deconcatenation agrees", false, e.what());
      }
    }
  } else if (kind == "word") {
    const auto got = w_coproduct(parse_lincomb<WKey>(x, parse_wkey));
    put(r, got, pair_text(w_text, w_text));
  } else if (kind == "qsymM") {
    const auto got = m_coproduct(parse_basis(x, 'M'));
    put(r, got, pair_text(basis_text("M"), basis_text("M")));
  } else if (kind == "B") {
    const BPiKey u{signed_arg(x, o)};
    const auto got = b_coproduct(u);
    put(r, got, pair_text(b_text, b_text));
    r.check("lengths of the legs add up", [&] {
      for (const auto& [k, c] : got)
        if (k.first.degree() + k.second.degree() != u.degree()) return false;
      return true;
    }());
  } else if (kind == "D") {
    const auto p = signed_arg(x, o);
    if (!p.in_d()) throw NotInGroup(to_string(p) + " is not in D_n");
    const DPiKey u{p};
    const auto got = d_coproduct(u);
    put(r, got, pair_text(d_text, d_text));
    r.check("lengths of the legs add up", [&] {
      for (const auto& [k, c] : got)
        if (k.first.degree() + k.second.degree() != u.degree()) return false;
      return true;
    }());
  } else {
    throw InvalidInput("kind must be pi, word, qsymM, B or D");
  }
  return r;
}

Report cmd_stanley(const std::string& type, const std::string& perm, const Options& o) {
  Report r;
  r.command = "stanley " + type + " " + perm + " --basis " + o.basis;
  QSym f;
  if (type == "A") {
    const auto p = perm_arg(perm, o);
    f = stanley_F(p);
    if (o.oracle) r.check("agrees with Psi_> on [pi]", psi(zeta_basic(Monotone::gt), expand(PiKey{p})) == f);
  } else if (type == "B" || type == "C" || type == "D") {
    const auto p = signed_arg(perm, o);
    f = type == "B" ? stanley_FB(p) : type == "C" ? stanley_FC(p) : stanley_FD(p);
    if (o.oracle && (type != "D" || p.in_d())) {
      const bool d = type == "D";
      KCoeffs by_peaks;
      for (const auto& w : d ? reduced_words_d(p) : reduced_words_b(p)) {
        const int ones = type == "C" ? 0 : d ? count_ones_and_twos(w) : count_ones(w);
        by_peaks.add_term(Composition::from_set(peaks(w), static_cast<int>(w.size())), pow2(-ones));
      }
      r.check("agrees with the peak-set sum over reduced words", k_to_m(by_peaks) == f);
    }
  } else {
    throw InvalidInput("type must be A, B, C or D");
  }
  r.check("symmetric", is_symmetric(f));

  auto nonnegative = [](const LinComb<Composition>& x, bool integral) {
    for (const auto& [k, c] : x)
      if (c < 0 || (integral && c.get_den() != 1)) return false;
    return true;
  };
  auto positivity = [&](Report& rep, const std::string& b, const LinComb<Composition>& x, bool natural) {
    if (natural)
      rep.check(b + " coefficients are nonnegative integers", nonnegative(x, true));
    else
      rep.check(b + " coefficients are nonnegative", nonnegative(x, false));
  };
  if (o.basis == "M") {
    put(r, f, basis_text("M"));
  } else if (o.basis == "L") {
    put(r, m_to_l(f), basis_text("L"));
  } else if (o.basis == "K") {
    put(r, m_to_k(f), basis_text("K"));
  } else if (o.basis == "schur") {
    const auto e = expand_in_schur(f);
    put(r, e, basis_text("s"));
    positivity(r, "Schur", e, type == "A");
  } else if (o.basis == "P") {
    const auto e = expand_in_P(f);
    put(r, e, basis_text("P"));
    positivity(r, "P", e, type == "B" || type == "D");
  } else if (o.basis == "Q") {
    LinComb<Composition> e;
    for (const auto& [lam, c] : expand_in_P(f)) e.add_term(lam, c * pow2(-lam.length()));
    put(r, e, basis_text("Q"));
    positivity(r, "Q", e, type == "C");
  } else {
    throw InvalidInput("basis must be M, L, K, schur, P or Q");
  }
  return r;
}

Report cmd_verify(const std::string& suite, const Options& o) {
  Report r;
  if (suite == "list") {
    r.command = "verify list";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : suites()) {
      r.text.push_back(s.name + "  " + s.summary);
      rows.push_back({{"name", s.name}, {"summary", s.summary}, {"default_max_n", s.default_max_n}});
    }
    r.result = {{"suites", std::move(rows)}};
    return r;
  }
  auto report = run_suite(suite, o.max_n);
  r.command = "verify " + suite + " --max-n " + std::to_string(report.max_n);
  r.checks = report.checks;
  r.result = {{"suite", report.suite}, {"max_n", report.max_n}};
  return r;
}

Report cmd_export(const std::string& dataset, const Options& o) {
  Report r;
  r.command = "export " + dataset + " --left " + std::to_string(o.left) + " --right " + std::to_string(o.right);
  nlohmann::json rows = nlohmann::json::array();
  auto keys_of = [](const auto& x, auto&& text) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, c] : x) out.push_back(text(k));
    return out;
  };
  if (dataset == "bmod-table" || dataset == "dmod-table") {
    const bool b = dataset == "bmod-table";
    cap(o.left, 3, "the left range", o);
    cap(o.right, 3, "the right range", o);
    if (o.left >= (b ? 1 : 2) && o.right >= 1) {
      const auto lefts = b ? all_signed_permutations(o.left) : all_even_signed_permutations(o.left);
      for (const auto& u : lefts)
        for (const auto& v : all_permutations(o.right)) {
          nlohmann::json result = b ? keys_of(bmodule_action(BPiKey{u}, PiKey{v}), b_text)
                                    : keys_of(dmodule_action(DPiKey{u}, PiKey{v}), d_text);
          const std::string left = b ? to_string(BPiKey{u}) : to_string(DPiKey{u});
          r.text.push_back(left + " " + to_string(PiKey{v}) + " -> " + result.dump());
          rows.push_back({{"left", left}, {"right", to_string(PiKey{v})}, {"result", std::move(result)}});
        }
    }
  } else if (dataset == "sshuffle-table") {
    cap(o.left, 5, "the left range", o);
    cap(o.right, 5, "the right range", o);
    if (o.left >= 1 && o.right >= 1)
      for (const auto& u : all_permutations(o.left))
        for (const auto& v : all_permutations(o.right)) {
          nlohmann::json result = nlohmann::json::array();
          for (const auto& s : s_shuffle(u, v)) result.push_back(to_string(s));
          r.text.push_back(to_string(u) + " " + to_string(v) + " -> " + result.dump());
          rows.push_back({{"left", to_string(u)}, {"right", to_string(v)}, {"result", std::move(result)}});
        }
  } else {
    throw InvalidInput("dataset must be bmod-table, dmod-table or sshuffle-table");
  }
  r.text.push_back(std::to_string(rows.size()) + " rows");
  r.result = {{"dataset", dataset}, {"left", o.left}, {"right", o.right}, {"rows", std::move(rows)}};
  return r;
}

Report cmd_families(const std::string& family, int a, std::optional<int> b, const Options& o) {
  Report r;
  std::vector<Permutation> members;
  if (family == "A") {
    cap(a, 9, "the family", o);
    r.command = "families A " + std::to_string(a);
    members = gen_A_set(a);
    r.check("size is (n-1)!!", BigInt(members.size()) == double_factorial_below(a));
  } else if (family == "B") {
    if (!b) throw InvalidInput("family B needs m and n");
    cap(*b, 9, "the family", o);
    r.command = "families B " + std::to_string(a) + " " + std::to_string(*b);
    members = gen_B_set(a, *b);
    r.check("size is C(n-1,m-1)", BigInt(members.size()) == binomial(static_cast<unsigned>(*b - 1),
                                                                      static_cast<unsigned>(a - 1)));
  } else {
    throw InvalidInput("family must be A or B");
  }
  nlohmann::json rows = nlohmann::json::array();
  BigInt total = 0;
  for (const auto& p : members) {
    const BigInt rp = reduced_word_count(p);
    total += rp;
    r.text.push_back(to_string(p) + "  r = " + to_string(rp));
    rows.push_back({{"perm", to_string(p)}, {"r", big_to_json(rp)}});
  }
  r.text.push_back("total r = " + to_string(total));
  r.result = {{"members", std::move(rows)}, {"total_r", big_to_json(total)}};
  return r;
}

}  // namespace cbtool
