#include "cb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cb/error.hpp"
#include "cb/families.hpp"
#include "cb/coxeter.hpp"
#include "cb/format.hpp"
#include "cb/morphisms.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/signed_modules.hpp"
#include "cb/stanley.hpp"
#include "cb/sym.hpp"

namespace cb {

bool SuiteReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using Suite = std::function<void(int, std::vector<CheckResult>&)>;

void record(std::vector<CheckResult>& out, std::string name, bool pass, std::string witness = {}) {
  out.push_back({std::move(name), pass, pass ? std::string{} : std::move(witness)});
}

BigInt sum_r(const std::vector<Permutation>& ps) {
  BigInt total = 0;
  for (const auto& p : ps) total += reduced_word_count(p);
  return total;
}

std::string r_list(const std::vector<Permutation>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + to_string(p) + ":" + to_string(reduced_word_count(p));
  return out;
}

void family_sizes(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    const auto a = gen_A_set(n);
    record(out, "|A(" + std::to_string(n) + ")| = (n-1)!!", BigInt(a.size()) == double_factorial_below(n),
           std::to_string(a.size()));
    for (int m = 1; m <= n; ++m) {
      const auto b = gen_B_set(m, n);
      record(out, "|B(" + std::to_string(m) + "," + std::to_string(n) + ")| = C(n-1,m-1)",
             BigInt(b.size()) == binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(m - 1)),
             std::to_string(b.size()));
    }
  }
}

void a5_sum(int, std::vector<CheckResult>& out) {
  const auto a = gen_A_set(5);
  const auto b = gen_B_set(3, 5);
  record(out, "sum r over A(5) = 80", sum_r(a) == 80, r_list(a));
  record(out, "sum r over B(3,5) = 80", sum_r(b) == 80, r_list(b));
}

void family_sums(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    const BigInt lhs = sum_r(gen_A_set(n));
    for (int p : {(n + 1) / 2, (n + 2) / 2}) {
      const BigInt rhs = sum_r(gen_B_set(p, n));
      record(out, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": sum r over A(n) = sum r over B(p,n)",
             lhs == rhs, to_string(lhs) + " vs " + to_string(rhs));
    }
  }
}

void staircase_counts(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n)
    for (int p = 1; p <= n; ++p) {
      const BigInt lhs = shuffle_count_N(p, n + 1 - p);
      const BigInt rhs = sum_r(gen_B_set(p, n));
      record(out, "N(" + std::to_string(p) + "," + std::to_string(n + 1 - p) + ") = sum r over B(p,n)", lhs == rhs,
             to_string(lhs) + " vs " + to_string(rhs));
    }
}

void staircase_product(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n)
    for (int m = 1; m <= n; ++m) {
      PiElem expected;
      for (const auto& p : gen_B_set(m, n)) expected.add_term(PiKey{p}, 1);
      const PiElem got = pi_product(PiKey{Permutation::longest(m)}, PiKey{Permutation::longest(n - m + 1)});
      record(out, "[w0(" + std::to_string(m) + ")]*[w0(" + std::to_string(n - m + 1) + ")] = sum over B(m,n)",
             got == expected, render(got));
    }
}

// Brute-force words are materialised only when there are few of them.
PiElem product_oracle(const PiKey& u, const PiKey& v) {
  const BigInt words = reduced_word_count(u.perm) * reduced_word_count(v.perm) *
                       binomial(static_cast<unsigned>(u.degree() + v.degree()), static_cast<unsigned>(u.degree()));
  return words <= 2000 ? pi_product_oracle(u, v) : pi_product_oracle_counting(u, v);
}

void product_oracle_suite(int max_n, std::vector<CheckResult>& out) {
  for (int total = 0; total <= max_n; ++total) {
    std::size_t pairs = 0;
    std::string witness;
    for (int m = 0; m <= total; ++m) {
      const int n = total - m;
      for (const auto& u : all_permutations(m + 1))
        for (const auto& v : all_permutations(n + 1)) {
          ++pairs;
          try {
            if (witness.empty() && pi_product(PiKey{u}, PiKey{v}) != product_oracle(PiKey{u}, PiKey{v}))
              witness = to_string(u) + " " + to_string(v);
          } catch (const InternalInconsistency& e) {
            if (witness.empty()) witness = to_string(u) + " " + to_string(v) + ": " + e.what();
          }
        }
    }
    record(out, "product = oracle on " + std::to_string(pairs) + " pairs with m+n=" + std::to_string(total),
           witness.empty(), witness);
  }
}

void flatten_bijection(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    std::string witness;
    for (const auto& p : all_permutations(n))
      if (witness.empty() && !flatten_reduced_words_bijection_check(p)) witness = to_string(p);
    record(out, "fl is a bijection onto the product classes on S_" + std::to_string(n), witness.empty(), witness);
  }
}

void fc_suite(int max_n, std::vector<CheckResult>& out) {
  for (int m = 1; m <= max_n; ++m)
    for (int n = 1; n <= max_n; ++n) {
      std::string witness;
      for (const auto& u : all_permutations(m))
        for (const auto& v : all_permutations(n)) {
          if (!is_321_avoiding(u) || !is_321_avoiding(v) || !witness.empty()) continue;
          if (fc_product(PiKey{u}, PiKey{v}) != pi_product(PiKey{u}, PiKey{v}))
            witness = to_string(u) + " " + to_string(v);
        }
      record(out, "two-term rule on 321-avoiding S_" + std::to_string(m) + " x S_" + std::to_string(n),
             witness.empty(), witness);
    }
}

void coproduct_oracle(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    std::string witness;
    for (const auto& p : all_permutations(n)) {
      if (!witness.empty()) break;
      const PiKey k{p};
      if (pi_coproduct(k) != regroup_pi(w_coproduct(expand(k)))) witness = to_string(p);
    }
    record(out, "coproduct = regrouped deconcatenation on S_" + std::to_string(n), witness.empty(), witness);
  }
}

void p42(int, std::vector<CheckResult>& out) {
  QSym sum;
  for (const auto& p : gen_B_set(3, 5)) sum += stanley_F(p);
  record(out, "P[4,2] = sum of F over B(3,5)", sum == schur_P(Composition{4, 2}), render_P(expand_in_P(sum)));
}

void staircase_schur_p(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    const int p = (n + 1) / 2;
    const int q = n + 1 - p;
    std::vector<int> parts;
    for (int k = n - 1; k > 0; k -= 2) parts.push_back(k);
    const QSym lhs = m_product(schur_s(staircase(p)), schur_s(staircase(q)));
    record(out, "s[delta_" + std::to_string(p) + "] s[delta_" + std::to_string(q) + "] = P" +
                    to_string(Composition(parts)),
           lhs == schur_P(Composition(parts)), render(lhs));
  }
}

struct ActionDisplay {
  char type;
  const char* left;
  const char* right;
  const char* result;
};

const ActionDisplay kActionDisplays[] = {
    {'B', "1,-2,-3", "213", "[1,4,-3,-2,5]_B + [1,-2,4,-3,5]_B + [1,-2,-4,3,5]_B + [1,-4,-3,2,5]_B + [4,-2,-3,1,5]_B"},
    {'D', "1,-2,-3", "213",
     "[1,4,-3,-2,5]_D + [1,-2,4,-3,5]_D + [1,-2,-4,3,5]_D + [1,-4,-3,2,5]_D + [4,-2,-3,1,5]_D + "
     "[-4,-2,-3,-1,5]_D"},
    {'B', "1,-2,-3", "231", "[1,4,-3,5,-2]_B + [1,-2,4,5,-3]_B + [1,-2,-4,5,3]_B + [1,-4,-3,5,2]_B + [4,-2,-3,5,1]_B"},
    {'D', "1,-2,-3", "231",
     "[1,4,-3,5,-2]_D + [1,-2,4,5,-3]_D + [1,-2,-4,5,3]_D + [1,-4,-3,5,2]_D + [4,-2,-3,5,1]_D + "
     "[-4,-2,-3,5,-1]_D"},
    {'B', "1,-3,-2", "312", "[1,-3,5,-2,4]_B + [1,-5,-2,3,4]_B + [5,-3,-2,1,4]_B"},
    {'D', "1,-3,-2", "312", "[1,-3,5,-2,4]_D + [1,-5,-2,3,4]_D + [5,-3,-2,1,4]_D + [-5,-3,-2,-1,4]_D"},
    {'B', "1,-3,-2", "321",
     "[1,-3,5,4,-2]_B + [1,-4,5,-2,3]_B + [1,-5,-2,4,3]_B + [4,-3,5,-2,1]_B + [5,-3,-2,4,1]_B + [5,-4,-2,1,3]_B"},
    {'D', "1,-3,-2", "321",
     "[1,-3,5,4,-2]_D + [1,-4,5,-2,3]_D + [1,-5,-2,4,3]_D + [4,-3,5,-2,1]_D + [5,-3,-2,4,1]_D + "
     "[5,-4,-2,1,3]_D + [-4,-3,5,-2,-1]_D + [-5,-3,-2,4,-1]_D + [-5,-4,-2,-1,3]_D"},
};

void bd_actions(int, std::vector<CheckResult>& out) {
  for (const auto& d : kActionDisplays) {
    const PiKey v{parse_permutation(d.right)};
    const std::string name = std::string("[") + d.left + "]_" + d.type + " [" + d.right + "]";
    if (d.type == 'B') {
      const auto got = bmodule_action(BPiKey{parse_signed_permutation(d.left)}, v);
      record(out, name, got == parse_lincomb<BPiKey>(d.result, parse_bpikey), render(got));
    } else {
      const auto got = dmodule_action(DPiKey{parse_signed_permutation(d.left)}, v);
      record(out, name, got == parse_lincomb<DPiKey>(d.result, parse_dpikey), render(got));
    }
  }
}

template <class T>
std::string bfs_length_witness(const std::vector<SignedPermutation>& group, int n) {
  std::map<SignedPermutation, int> dist{{SignedPermutation::identity(n), 0}};
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& x : frontier)
      for (int i = 1; i <= n; ++i) {
        auto y = T::act(x, i);
        if (dist.emplace(y, dist[x] + 1).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  for (const auto& p : group)
    if (!dist.count(p) || dist[p] != T::length(p)) return to_string(p);
  return {};
}

void bd_lengths(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    auto w = bfs_length_witness<coxeter::TypeB>(all_signed_permutations(n), n);
    record(out, "type-B length = Cayley distance on B_" + std::to_string(n), w.empty(), w);
    if (n >= 2) {
      w = bfs_length_witness<coxeter::TypeD>(all_even_signed_permutations(n), n);
      record(out, "type-D length = Cayley distance on D_" + std::to_string(n), w.empty(), w);
    }
  }
}

void counting_character(int max_n, std::vector<CheckResult>& out) {
  for (int m = 1; m <= max_n; ++m)
    for (int n = 1; n <= max_n; ++n) {
      std::string witness;
      for (const auto& u : all_permutations(m))
        for (const auto& v : all_permutations(n))
          if (witness.empty() && !counting_morphism_check(PiKey{u}, PiKey{v})) witness = to_string(u) + " " + to_string(v);
      record(out, "r/l! multiplicative on S_" + std::to_string(m) + " x S_" + std::to_string(n), witness.empty(),
             witness);
    }
}

void stanley_positivity(int max_n, std::vector<CheckResult>& out) {
  for (int n = 1; n <= max_n; ++n) {
    std::string witness;
    for (const auto& p : all_permutations(n)) {
      if (!witness.empty()) break;
      try {
        for (const auto& [lam, c] : expand_in_schur(stanley_F(p)))
          if (c < 0 || c.get_den() != 1) witness = to_string(p);
      } catch (const NotInSpan&) {
        witness = to_string(p);
      }
    }
    record(out, "F_pi Schur-positive on S_" + std::to_string(n), witness.empty(), witness);
  }
}

struct Entry {
  SuiteInfo info;
  Suite run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"family-sizes", "sizes of the families A(n) and B(m,n)", 9}, family_sizes},
      {{"a5-sum", "reduced-word counts over A(5) and B(3,5) both total 80", 0}, a5_sum},
      {{"family-sums", "sum of r over A(n) equals sum over B(p,n) for the two middle p", 7}, family_sums},
      {{"staircase-counts", "N(p,q) equals sum of r over B(p,n)", 7}, staircase_counts},
      {{"staircase-product", "product of two longest elements is the sum over B(m,n)", 6}, staircase_product},
      {{"product-oracle", "recursive product agrees with the shuffle oracle up to m+n = max-n", 4},
       product_oracle_suite},
      {{"coproduct-oracle", "factorisation coproduct agrees with regrouped deconcatenation", 5}, coproduct_oracle},
      {{"flatten-bijection", "flattening reduced words of reducible permutations", 5}, flatten_bijection},
      {{"fc-product", "two-term rule for 321-avoiding factors", 4}, fc_suite},
      {{"counting-character", "r(pi)/l(pi)! is multiplicative", 3}, counting_character},
      {{"stanley-positivity", "F_pi expands positively in Schur functions", 5}, stanley_positivity},
      {{"p42", "P[4,2] as a sum of six Stanley functions", 0}, p42},
      {{"staircase-schur-p", "products of staircase Schur functions are Schur P-functions", 6}, staircase_schur_p},
      {{"bd-actions", "the eight worked type-B/D action products", 0}, bd_actions},
      {{"bd-lengths", "type-B/D length formulas against Cayley-graph distance", 4}, bd_lengths},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteReport run_suite(std::string_view name, std::optional<int> max_n) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteReport report{e.info.name, max_n.value_or(e.info.default_max_n), {}};
    e.run(report.max_n, report.checks);
    return report;
  }
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace cb
