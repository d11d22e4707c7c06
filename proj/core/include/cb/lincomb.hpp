#pragma once

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cb/rational.hpp"

namespace cb {

/// Finite formal linear combination of basis keys with exact rational
/// coefficients. Zero coefficients are never stored.
template <class K>
class LinComb {
 public:
  using key_type = K;
  using map_type = std::map<K, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;
  LinComb(std::initializer_list<std::pair<K, Rational>> terms) {
    for (const auto& [k, c] : terms) add_term(k, c);
  }

  static LinComb term(K key, const Rational& c = 1) {
    LinComb x;
    x.add_term(std::move(key), c);
    return x;
  }

  void add_term(const K& key, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  std::vector<K> support() const {
    std::vector<K> keys;
    keys.reserve(terms_.size());
    for (const auto& [k, c] : terms_) keys.push_back(k);
    return keys;
  }

  /// Sum of all coefficients.
  Rational mass() const {
    Rational total = 0;
    for (const auto& [k, c] : terms_) total += c;
    return total;
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  LinComb& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Rational(-1); }
  friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
  friend LinComb operator*(LinComb a, const Rational& s) { return a *= s; }
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Apply a key map term by term (a linear map that sends keys to keys).
  template <class K2, class F>
  LinComb<K2> map_keys(F&& f) const {
    LinComb<K2> out;
    for (const auto& [k, c] : terms_) out.add_term(f(k), c);
    return out;
  }

  /// Keep only the terms whose key satisfies pred.
  template <class Pred>
  LinComb filter(Pred&& pred) const {
    LinComb out;
    for (const auto& [k, c] : terms_)
      if (pred(k)) out.terms_.emplace(k, c);
    return out;
  }

 private:
  map_type terms_;
};


template <class K1, class K2>
using Tensor = LinComb<std::pair<K1, K2>>;

/// x ⊗ y.
template <class K1, class K2>
Tensor<K1, K2> tensor(const LinComb<K1>& x, const LinComb<K2>& y) {
  Tensor<K1, K2> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_term({a, b}, ca * cb);
  return out;
}

/// Extend f : K1 -> LinComb<K2> linearly.
template <class K1, class F>
auto linear_extend(F&& f, const LinComb<K1>& x) {
  using Out = std::decay_t<decltype(f(std::declval<const K1&>()))>;
  Out out;
  for (const auto& [k, c] : x) {
    Out image = f(k);
    image *= c;
    out += image;
  }
  return out;
}

/// Extend f : K1 × K2 -> LinComb<K3> bilinearly.
template <class K1, class K2, class F>
auto bilinear_extend(F&& f, const LinComb<K1>& x, const LinComb<K2>& y) {
  using Out = std::decay_t<decltype(f(std::declval<const K1&>(), std::declval<const K2&>()))>;
  Out out;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Out image = f(a, b);
      image *= ca * cb;
      out += image;
    }
  }
  return out;
}

/// Extend a scalar-valued f : K -> Rational linearly.
template <class K, class F>
Rational evaluate(F&& f, const LinComb<K>& x) {
  Rational total = 0;
  for (const auto& [k, c] : x) total += c * f(k);
  return total;
}

/// Canonical text form `c1*K1 + c2*K2 - K3`, terms sorted by their key text.
/// The zero element renders as "0".
template <class K, class KeyFormat>
std::string render(const LinComb<K>& x, KeyFormat&& key_text) {
  std::vector<std::pair<std::string, Rational>> rows;
  rows.reserve(x.size());
  for (const auto& [k, c] : x) rows.emplace_back(key_text(k), c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (rows.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : rows) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) {
      out += to_string(mag);
      out += "*";
    }
    out += key;
    first = false;
  }
  return out;
}

}  // namespace cb
