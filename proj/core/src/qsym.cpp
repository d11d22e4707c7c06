#include "cb/qsym.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cb/error.hpp"
#include "cb/format.hpp"

namespace cb {

namespace {

std::set<int> set_of(const Composition& a) {
  auto v = a.partial_sums();
  return {v.begin(), v.end()};
}

// All subsets T with S ⊆ T ⊆ [n−1], as compositions of n.
std::vector<Composition> coarsenings_below(const Composition& a) {
  const int n = a.weight();
  if (n == 0) return {a};
  const auto s = set_of(a);
  std::vector<int> free;
  for (int i = 1; i < n; ++i)
    if (!s.count(i)) free.push_back(i);
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    std::vector<int> t(s.begin(), s.end());
    for (std::size_t k = 0; k < free.size(); ++k)
      if (mask & (1u << k)) t.push_back(free[k]);
    out.push_back(Composition::from_set(t, n));
  }
  return out;
}

}  // namespace

std::string render_basis(const LinComb<Composition>& x, std::string_view basis) {
  return render(x, [&](const Composition& a) { return std::string(basis) + to_string(a); });
}

std::string render(const QSym& x) { return render_basis(x, "M"); }

std::string render(const QSymTensor& x) {
  return render(x, [](const auto& p) { return "M" + to_string(p.first) + "⊗M" + to_string(p.second); });
}

LinComb<Composition> parse_basis(std::string_view text, char basis) {
  return parse_lincomb<Composition>(text, [&](const std::string& key) {
    if (key.empty() || key.front() != basis)
      throw InvalidInput("expected a " + std::string(1, basis) + "-basis key, got '" + key + "'");
    return parse_composition(std::string_view(key).substr(1));
  });
}

QSym monomial(const Composition& a) { return QSym::term(a); }

QSym m_product(const Composition& a, const Composition& b) {
  thread_local std::map<std::pair<Composition, Composition>, QSym> memo;
  if (a.empty()) return QSym::term(b);
  if (b.empty()) return QSym::term(a);
  if (auto it = memo.find({a, b}); it != memo.end()) return it->second;

  const Composition a_tail(std::vector<int>(a.parts().begin() + 1, a.parts().end()));
  const Composition b_tail(std::vector<int>(b.parts().begin() + 1, b.parts().end()));
  auto prepend = [](int head, const QSym& x) {
    return x.map_keys<Composition>([&](const Composition& c) {
      std::vector<int> p{head};
      p.insert(p.end(), c.parts().begin(), c.parts().end());
      return Composition(std::move(p));
    });
  };
  QSym out = prepend(a[0], m_product(a_tail, b));
  out += prepend(b[0], m_product(a, b_tail));
  out += prepend(a[0] + b[0], m_product(a_tail, b_tail));
  memo.emplace(std::make_pair(a, b), out);
  return out;
}

QSym m_product(const QSym& x, const QSym& y) {
  return bilinear_extend([](const Composition& a, const Composition& b) { return m_product(a, b); }, x, y);
}

QSymTensor m_coproduct(const Composition& a) {
  QSymTensor out;
  const auto& p = a.parts();
  for (std::size_t i = 0; i <= p.size(); ++i)
    out.add_term({Composition(std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i))),
                  Composition(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(i), p.end()))},
                 1);
  return out;
}

QSymTensor m_coproduct(const QSym& x) {
  return linear_extend([](const Composition& a) { return m_coproduct(a); }, x);
}

QSymTensor m_tensor_product(const QSymTensor& x, const QSymTensor& y) {
  QSymTensor out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y)
      out += tensor(m_product(p.first, q.first), m_product(p.second, q.second)) * (cp * cq);
  return out;
}

QSym l_to_m(const Composition& a) {
  QSym out;
  for (const auto& b : coarsenings_below(a)) out.add_term(b, 1);
  return out;
}

QSym l_to_m(const LCoeffs& x) {
  return linear_extend([](const Composition& a) { return l_to_m(a); }, x);
}

QSym k_to_m(const Composition& a) {
  if (!is_peak_composition(a)) throw InvalidInput("K" + to_string(a) + ": not a peak composition");
  QSym out;
  const auto peaks = set_of(a);
  for (const auto& b : compositions_of(a.weight())) {
    const auto s = set_of(b);
    bool ok = true;
    for (int p : peaks)
      if (!s.count(p) && !s.count(p - 1)) ok = false;
    if (ok) out.add_term(b, pow2(b.length()));
  }
  return out;
}

QSym k_to_m(const KCoeffs& x) {
  return linear_extend([](const Composition& a) { return k_to_m(a); }, x);
}

LCoeffs m_to_l(const QSym& x) {
  LCoeffs out;
  for (const auto& [a, c] : x)
    for (const auto& b : coarsenings_below(a)) out.add_term(b, (b.length() - a.length()) % 2 ? -c : c);
  return out;
}

KCoeffs m_to_k(const QSym& x) {
  // Among the shortest monomials of the lowest weight present, the one whose
  // descent set is lexicographically largest is the leading term of exactly
  // one K_α, namely the one with I(α) equal to that set.
  QSym rest = x;
  KCoeffs out;
  while (!rest.empty()) {
    const int n = rest.begin()->first.weight();
    const Composition* lead = nullptr;
    std::vector<int> lead_set;
    for (const auto& [b, c] : rest) {
      if (b.weight() != n) break;
      auto s = b.partial_sums();
      if (!lead || b.length() < lead->length() || (b.length() == lead->length() && s > lead_set)) {
        lead = &b;
        lead_set = std::move(s);
      }
    }
    const Composition alpha = *lead;
    if (!is_peak_composition(alpha)) throw NotInSpan("not in the peak span: leading term M" + to_string(alpha));
    const Rational c = rest.coeff(alpha) / pow2(alpha.length());
    out.add_term(alpha, c);
    rest -= k_to_m(alpha) * c;
  }
  return out;
}

QSym reversal_involution(const QSym& x) {
  return x.map_keys<Composition>([](const Composition& a) { return comp_reverse(a); });
}

QSym omega(const QSym& x) {
  return l_to_m(m_to_l(x).map_keys<Composition>([](const Composition& a) { return comp_complement(a); }));
}

QSym theta(const QSym& x) {
  return k_to_m(m_to_l(x).map_keys<Composition>([](const Composition& a) { return comp_lambda(a); }));
}

bool is_symmetric(const QSym& x) {
  std::map<Composition, Rational> by_shape;
  std::map<Composition, std::size_t> seen;
  for (const auto& [a, c] : x) {
    const auto lam = sort_to_partition(a);
    auto [it, fresh] = by_shape.try_emplace(lam, c);
    if (!fresh && it->second != c) return false;
    ++seen[lam];
  }
  // Every rearrangement of a present shape must be present.
  for (const auto& [lam, count] : seen) {
    std::vector<int> p(lam.parts());
    std::sort(p.begin(), p.end());
    std::size_t perms = 0;
    do {
      ++perms;
    } while (std::next_permutation(p.begin(), p.end()));
    if (perms != count) return false;
  }
  return true;
}

Polynomial to_polynomial(const QSym& x, int k) {
  Polynomial out;
  for (const auto& [a, c] : x) {
    const int l = a.length();
    if (l > k) continue;
    // M_α = Σ over increasing index tuples i₁<⋯<i_l of x_{i₁}^{α₁}⋯.
    std::vector<int> idx(static_cast<std::size_t>(l));
    auto rec = [&](auto&& self, int pos, int from) -> void {
      if (pos == l) {
        std::vector<int> e(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < l; ++j) e[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = a[static_cast<std::size_t>(j)];
        auto& slot = out[e];
        slot += c;
        if (slot == 0) out.erase(e);
        return;
      }
      for (int i = from; i < k; ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      auto& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  return out;
}

}  // namespace cb
