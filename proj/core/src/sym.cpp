#include "cb/sym.hpp"

#include <algorithm>
#include <map>

#include "cb/error.hpp"

namespace cb {

namespace {

void require_partition(const Partition& lambda) {
  if (!is_partition(lambda)) throw InvalidInput(to_string(lambda) + " is not a partition");
}

void require_strict(const Partition& lambda) {
  if (!is_strict_partition(lambda)) throw InvalidInput(to_string(lambda) + " is not a strict partition");
}

std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Shapes ν ⊂ λ with λ/ν a horizontal strip of the given size.
void horizontal_strips(const std::vector<int>& lambda, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> nu(lambda.size());
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == lambda.size()) {
      if (left == 0) out.push_back(trimmed(nu));
      return;
    }
    const int floor = row + 1 < lambda.size() ? lambda[row + 1] : 0;
    for (int take = 0; take <= std::min(left, lambda[row] - floor); ++take) {
      nu[row] = lambda[row] - take;
      self(self, row + 1, left - take);
    }
  };
  rec(rec, 0, size);
}

BigInt kostka_rec(const std::vector<int>& lambda, const std::vector<int>& content, std::size_t k,
                  std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (k == 0) return lambda.empty() ? 1 : 0;
  if (auto it = memo.find({lambda, k}); it != memo.end()) return it->second;
  std::vector<std::vector<int>> smaller;
  horizontal_strips(lambda, content[k - 1], smaller);
  BigInt total = 0;
  for (const auto& nu : smaller) total += kostka_rec(nu, content, k - 1, memo);
  memo.emplace(std::make_pair(lambda, k), total);
  return total;
}

// Number of valid {k', k} markings of the skew shifted shape μ/ν, where row
// i (0-based) of a shifted shape occupies columns i, …, i+μᵢ−1.
BigInt strip_markings(const std::vector<int>& mu, const std::vector<int>& nu, bool free_diagonal) {
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const int have = i < nu.size() ? nu[i] : 0;
    for (int c = have; c < mu[i]; ++c) cells.push_back({static_cast<int>(i), static_cast<int>(i) + c});
  }
  const std::size_t n = cells.size();
  BigInt count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // bit set = primed
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      const bool pa = mask & (1u << a);
      if (!free_diagonal && pa && cells[a].row == cells[a].col) ok = false;
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a == b) continue;
        const bool pb = mask & (1u << b);
        if (cells[a].row == cells[b].row && cells[a].col < cells[b].col) {
          // Row reads k′ at most once, primes first.
          if (pa == pb && pa) ok = false;
          if (!pa && pb) ok = false;
        }
        if (cells[a].col == cells[b].col && cells[a].row < cells[b].row) {
          // Column reads k at most once, primes first.
          if (pa == pb && !pa) ok = false;
          if (!pa && pb) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

// Strict ν ⊂ μ (as shifted shapes) with |μ/ν| = size.
void shifted_subshapes(const std::vector<int>& mu, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> nu(mu.size());
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == mu.size()) {
      if (left == 0) out.push_back(trimmed(nu));
      return;
    }
    for (int take = 0; take <= std::min(left, mu[row]); ++take) {
      const int len = mu[row] - take;
      // Shifted shapes need strictly decreasing nonzero rows.
      if (row > 0 && len > 0 && len >= nu[row - 1]) continue;
      // Column containment in shifted coordinates.
      if (row > 0 && len > 0 && row + static_cast<std::size_t>(len) > row - 1 + static_cast<std::size_t>(nu[row - 1]))
        continue;
      nu[row] = len;
      self(self, row + 1, left - take);
    }
  };
  rec(rec, 0, size);
}

BigInt marked_count(const std::vector<int>& mu, const std::vector<int>& content, std::size_t k, bool free_diagonal,
                    std::map<std::pair<std::vector<int>, std::size_t>, BigInt>& memo) {
  if (k == 0) return mu.empty() ? 1 : 0;
  if (auto it = memo.find({mu, k}); it != memo.end()) return it->second;
  std::vector<std::vector<int>> smaller;
  shifted_subshapes(mu, content[k - 1], smaller);
  BigInt total = 0;
  for (const auto& nu : smaller) {
    BigInt ways = strip_markings(mu, nu, free_diagonal);
    if (ways != 0) total += ways * marked_count(nu, content, k - 1, free_diagonal, memo);
  }
  memo.emplace(std::make_pair(mu, k), total);
  return total;
}

QSym shifted_function(const Partition& lambda, bool free_diagonal) {
  require_strict(lambda);
  QSym out;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  for (const auto& a : compositions_of(lambda.weight())) {
    // Memo keys are (shape, prefix length) and so depend on the content.
    memo.clear();
    out.add_term(a, Rational(marked_count(lambda.parts(), a.parts(), a.parts().size(), free_diagonal, memo)));
  }
  return out;
}

template <class Basis>
LinComb<Partition> triangular_expand(const QSym& x, bool strict_only, Basis&& basis) {
  if (!is_symmetric(x)) throw NotInSpan("input is not symmetric");
  QSym rest = x;
  LinComb<Partition> out;
  while (!rest.empty()) {
    // Largest partition-shaped key of the largest weight.
    const Composition* lead = nullptr;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it)
      if (is_partition(it->first)) {
        lead = &it->first;
        break;
      }
    if (!lead) throw NotInSpan("no partition-shaped leading term");
    const Partition lambda = *lead;
    if (strict_only && !is_strict_partition(lambda))
      throw NotInSpan("leading term M" + to_string(lambda) + " is not indexed by a strict partition");
    const Rational c = rest.coeff(lambda);
    out.add_term(lambda, c);
    rest -= basis(lambda) * c;
  }
  return out;
}

}  // namespace

QSym monomial_sym(const Partition& lambda) {
  require_partition(lambda);
  std::vector<int> p(lambda.parts());
  std::sort(p.begin(), p.end());
  QSym out;
  do {
    out.add_term(Composition(p), 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

BigInt kostka(const Partition& lambda, const Composition& content) {
  require_partition(lambda);
  if (lambda.weight() != content.weight()) return 0;
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  return kostka_rec(lambda.parts(), content.parts(), content.parts().size(), memo);
}

QSym schur_s(const Partition& lambda) {
  require_partition(lambda);
  QSym out;
  for (const auto& a : compositions_of(lambda.weight())) out.add_term(a, Rational(kostka(lambda, a)));
  return out;
}

QSym schur_Q(const Partition& lambda) { return shifted_function(lambda, true); }
QSym schur_P(const Partition& lambda) { return shifted_function(lambda, false); }

LinComb<Partition> expand_in_schur(const QSym& x) {
  return triangular_expand(x, false, [](const Partition& l) { return schur_s(l); });
}

LinComb<Partition> expand_in_P(const QSym& x) {
  return triangular_expand(x, true, [](const Partition& l) { return schur_P(l); });
}

std::string render_schur(const LinComb<Partition>& x) { return render_basis(x, "s"); }
std::string render_P(const LinComb<Partition>& x) { return render_basis(x, "P"); }

}  // namespace cb
