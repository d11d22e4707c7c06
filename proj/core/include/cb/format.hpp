#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cb/lincomb.hpp"

namespace cb {

/// Split a rendered linear combination into (coefficient, key text) pairs.
/// Signs and `c*` prefixes are recognised only outside brackets, so keys
/// such as `[1,-3,-2]_B` survive intact. "0" yields no terms.
std::vector<std::pair<Rational, std::string>> split_terms(std::string_view text);

/// Inverse of render() given a key parser.
template <class K, class KeyParse>
LinComb<K> parse_lincomb(std::string_view text, KeyParse&& parse_key) {
  LinComb<K> out;
  for (auto& [c, key] : split_terms(text)) out.add_term(parse_key(key), c);
  return out;
}

/// Coefficient as a JSON value: an integer when it fits in 64 bits, a
/// decimal string otherwise.
nlohmann::json big_to_json(const BigInt& z);
BigInt big_from_json(const nlohmann::json& j);

/// `{"schema": 1, "terms": [{"key": ..., "num": ..., "den": ...}, ...]}` with
/// terms in the same order as render().
template <class K, class KeyFormat>
nlohmann::json to_json(const LinComb<K>& x, KeyFormat&& key_text) {
  std::vector<std::pair<std::string, Rational>> rows;
  for (const auto& [k, c] : x) rows.emplace_back(key_text(k), c);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [key, c] : rows) {
    terms.push_back({{"key", key},
                     {"num", big_to_json(c.get_num())},
                     {"den", big_to_json(c.get_den())}});
  }
  return {{"schema", 1}, {"terms", std::move(terms)}};
}

template <class K, class KeyParse>
LinComb<K> from_json(const nlohmann::json& j, KeyParse&& parse_key) {
  LinComb<K> out;
  for (const auto& t : j.at("terms")) {
    out.add_term(parse_key(t.at("key").template get<std::string>()),
                 make_rational(big_from_json(t.at("num")), big_from_json(t.at("den"))));
  }
  return out;
}

}  // namespace cb
