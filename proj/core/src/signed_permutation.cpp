#include "cb/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

#include "cb/coxeter.hpp"
#include "cb/error.hpp"

namespace cb {

SignedPermutation::SignedPermutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : oneline_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw InvalidInput("not a signed permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::from_unsigned(const Permutation& p) { return SignedPermutation(p.oneline()); }

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> v(oneline_.size());
  for (int i = 1; i <= size(); ++i) {
    const int x = (*this)(i);
    v[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? i : -i;
  }
  return SignedPermutation(std::move(v));
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.size() != b.size()) throw InvalidInput("composing signed permutations of different sizes");
  std::vector<int> v(a.oneline_.size());
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i - 1)] = a(b(i));
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::times_generator_b(int i) const {
  if (i < 1 || i > size()) throw InvalidInput("generator s_" + std::to_string(i) + " not in B_" + std::to_string(size()));
  SignedPermutation out(*this);
  if (i == 1)
    out.oneline_[0] = -out.oneline_[0];
  else
    std::swap(out.oneline_[static_cast<std::size_t>(i - 2)], out.oneline_[static_cast<std::size_t>(i - 1)]);
  return out;
}

SignedPermutation SignedPermutation::times_generator_d(int i) const {
  if (i < 1 || i > size() || size() < 2)
    throw InvalidInput("generator s_" + std::to_string(i) + " not in D_" + std::to_string(size()));
  if (i > 1) return times_generator_b(i);
  SignedPermutation out(*this);
  out.oneline_[0] = -oneline_[1];
  out.oneline_[1] = -oneline_[0];
  return out;
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(oneline_.begin(), oneline_.end(), [](int x) { return x < 0; }));
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string to_string(const SignedPermutation& p) {
  const bool compact = p.size() <= 9 && p.negative_count() == 0;
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

std::string to_human_string(const SignedPermutation& p) {
  std::string out;
  const bool spaced = p.size() > 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (spaced && i > 1) out += ' ';
    const int x = p(i);
    out += std::to_string(std::abs(x));
    if (x < 0) out += "̄";
  }
  return out;
}

SignedPermutation parse_signed_permutation(std::string_view text) {
  std::vector<int> v;
  const bool has_sep = text.find(',') != std::string_view::npos;
  if (has_sep) {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string tok(text.substr(start, end - start));
      tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
      if (tok.empty()) throw InvalidInput("empty entry at offset " + std::to_string(start) + " in '" + std::string(text) + "'");
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw InvalidInput("bad entry '" + tok + "' at offset " + std::to_string(start));
      v.push_back(x);
      start = end + 1;
    }
  } else {
    bool neg = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == '-') {
        if (neg) throw InvalidInput("doubled sign at offset " + std::to_string(i));
        neg = true;
      } else if (c >= '0' && c <= '9') {
        v.push_back(neg ? -(c - '0') : c - '0');
        neg = false;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        throw InvalidInput(std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
      }
    }
    if (neg) throw InvalidInput("dangling sign in '" + std::string(text) + "'");
  }
  return SignedPermutation(std::move(v));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<SignedPermutation> out;
  for (const auto& p : all_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v(p.oneline());
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> all_even_signed_permutations(int n) {
  auto all = all_signed_permutations(n);
  std::erase_if(all, [](const SignedPermutation& p) { return !p.in_d(); });
  return all;
}

namespace {

int inversions(const SignedPermutation& p) {
  int inv = 0;
  for (int i = 1; i <= p.size(); ++i)
    for (int j = i + 1; j <= p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv;
}

}  // namespace

int length_b(const SignedPermutation& p) {
  int len = inversions(p);
  for (int x : p.oneline())
    if (x < 0) len += -x;
  return len;
}

int length_d(const SignedPermutation& p) {
  if (!p.in_d()) throw NotInGroup(to_string(p) + " has an odd number of negative entries");
  int len = inversions(p);
  for (int x : p.oneline())
    if (x < 0) len += -x - 1;
  return len;
}

SignedPermutation signed_permutation_from_word_b(const Word& w, int n) {
  return coxeter::evaluate<coxeter::TypeB>(w, n);
}

SignedPermutation signed_permutation_from_word_d(const Word& w, int n) {
  if (n < 2) throw InvalidInput("type D needs n >= 2");
  return coxeter::evaluate<coxeter::TypeD>(w, n);
}

std::vector<Word> reduced_words_b(const SignedPermutation& p) { return coxeter::reduced_words<coxeter::TypeB>(p); }

std::vector<Word> reduced_words_d(const SignedPermutation& p) {
  if (!p.in_d()) return {};
  if (p.size() < 2) return {Word{}};
  return coxeter::reduced_words<coxeter::TypeD>(p);
}

BigInt reduced_word_count_b(const SignedPermutation& p) { return coxeter::reduced_word_count<coxeter::TypeB>(p); }

BigInt reduced_word_count_d(const SignedPermutation& p) {
  if (!p.in_d()) return 0;
  if (p.size() < 2) return 1;
  return coxeter::reduced_word_count<coxeter::TypeD>(p);
}

}  // namespace cb
