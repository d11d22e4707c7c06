#include "cb/composition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cb/error.hpp"

namespace cb {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw InvalidInput("composition parts must be positive");
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::from_set(const std::vector<int>& set, int n) {
  if (n == 0) {
    if (!set.empty()) throw InvalidInput("nonempty descent set for n = 0");
    return {};
  }
  std::vector<int> sorted(set);
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> parts;
  int prev = 0;
  for (int s : sorted) {
    if (s <= prev || s >= n) throw InvalidInput("descent set entry out of range");
    parts.push_back(s - prev);
    prev = s;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<int> Composition::partial_sums() const {
  std::vector<int> out;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) out.push_back(s += parts_[i]);
  return out;
}

std::strong_ordering Composition::operator<=>(const Composition& o) const {
  if (auto c = weight_ <=> o.weight_; c != 0) return c;
  return parts_ <=> o.parts_;
}

std::string to_string(const Composition& a) {
  std::string out = "[";
  for (int i = 0; i < a.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(a[static_cast<std::size_t>(i)]);
  }
  return out + "]";
}

Composition parse_composition(std::string_view text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw InvalidInput("unbalanced brackets in '" + std::string(text) + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(start, end - start));
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw InvalidInput("bad part '" + tok + "' at offset " + std::to_string(start));
    parts.push_back(x);
    start = end + 1;
  }
  return Composition(std::move(parts));
}

Composition comp_reverse(const Composition& a) {
  return Composition(std::vector<int>(a.parts().rbegin(), a.parts().rend()));
}

Composition comp_complement(const Composition& a) {
  const int n = a.weight();
  if (n == 0) return a;
  auto in = a.partial_sums();
  std::set<int> have(in.begin(), in.end());
  std::vector<int> out;
  for (int i = 1; i < n; ++i)
    if (!have.count(i)) out.push_back(i);
  return Composition::from_set(out, n);
}

Composition comp_transpose(const Composition& a) { return comp_complement(comp_reverse(a)); }

bool is_peak_composition(const Composition& a) {
  for (int i = 0; i + 1 < a.length(); ++i)
    if (a[static_cast<std::size_t>(i)] < 2) return false;
  return true;
}

Composition comp_flat(const Composition& a) {
  if (!is_peak_composition(a)) throw InvalidInput(to_string(a) + " is not a peak composition");
  if (a.length() <= 1) return a;
  std::vector<int> out(a.parts().rbegin(), a.parts().rend());
  out.front() += 1;
  out.back() -= 1;
  if (out.back() == 0) out.pop_back();
  return Composition(std::move(out));
}

Composition comp_lambda(const Composition& a) {
  auto in = a.partial_sums();
  std::set<int> have(in.begin(), in.end());
  std::vector<int> out;
  for (int i : in)
    if (i >= 2 && !have.count(i - 1)) out.push_back(i);
  return Composition::from_set(out, a.weight());
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw InvalidInput("negative weight");
  if (n == 0) return {Composition{}};
  std::vector<Composition> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> set;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) set.push_back(i);
    out.push_back(Composition::from_set(set, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> peak_compositions_of(int n) {
  auto all = compositions_of(n);
  std::erase_if(all, [](const Composition& a) { return !is_peak_composition(a); });
  return all;
}

bool is_partition(const Composition& a) {
  return std::is_sorted(a.parts().begin(), a.parts().end(), std::greater<>());
}

bool is_strict_partition(const Composition& a) {
  return std::adjacent_find(a.parts().begin(), a.parts().end(), std::less_equal<>()) == a.parts().end();
}

Composition sort_to_partition(const Composition& a) {
  std::vector<int> p(a.parts());
  std::sort(p.begin(), p.end(), std::greater<>());
  return Composition(std::move(p));
}

std::vector<Composition> partitions_of(int n, bool strict) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, strict ? p - 1 : p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end());
  return out;
}

Composition conjugate(const Composition& lambda) {
  if (!is_partition(lambda)) throw InvalidInput(to_string(lambda) + " is not a partition");
  std::vector<int> out;
  for (int c = 1; lambda.length() && c <= lambda[0]; ++c) {
    int h = 0;
    for (int p : lambda.parts())
      if (p >= c) ++h;
    out.push_back(h);
  }
  return Composition(std::move(out));
}

Composition staircase(int n) {
  std::vector<int> out;
  for (int i = n - 1; i >= 1; --i) out.push_back(i);
  return Composition(std::move(out));
}

}  // namespace cb
