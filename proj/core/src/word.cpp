#include "cb/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "cb/error.hpp"

namespace cb {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter x : letters_)
    if (x < 1) throw InvalidInput("word letters must be positive, got " + std::to_string(x));
}

Letter Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::shifted(int n) const {
  std::vector<Letter> out(letters_);
  for (auto& x : out) x += n;
  return Word(std::move(out));
}

Word Word::reversed() const { return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend())); }

Word Word::prefix(std::size_t k) const {
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Word Word::suffix_from(std::size_t k) const {
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end()));
}

Word Word::at_positions(std::span<const std::size_t> positions) const {
  std::vector<Letter> out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(letters_.at(p));
  return Word(std::move(out));
}

Word Word::restricted_to(Letter lo, Letter hi) const {
  std::vector<Letter> out;
  for (Letter x : letters_)
    if (lo <= x && x <= hi) out.push_back(x);
  return Word(std::move(out));
}

bool Word::has_distinct_letters() const {
  std::vector<Letter> sorted(letters_);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Word operator+(const Word& a, const Word& b) {
  std::vector<Letter> out(a.letters_);
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

std::string to_string(const Word& w) {
  bool small = std::all_of(w.begin(), w.end(), [](Letter x) { return x <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!small && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  if (text.empty() || text == "∅") return Word();
  std::vector<Letter> letters;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        throw InvalidInput("bad letter '" + std::string(1, ch) + "' in word '" + std::string(text) + "'");
      letters.push_back(ch - '0');
    }
    return Word(std::move(letters));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw InvalidInput("bad letter '" + std::string(piece) + "' in word '" + std::string(text) + "'");
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Word(std::move(letters));
}

Word flatten(const Word& w) {
  std::vector<Letter> values(w.begin(), w.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    auto rank = std::lower_bound(values.begin(), values.end(), x) - values.begin();
    out.push_back(static_cast<Letter>(rank + 1));
  }
  return Word(std::move(out));
}

namespace {

void shuffle_into(const std::vector<Letter>& u, std::size_t i, const std::vector<Letter>& v,
                  std::size_t j, std::vector<Letter>& buffer, std::vector<Word>& out) {
  if (i == u.size() && j == v.size()) {
    out.emplace_back(buffer);
    return;
  }
  if (i < u.size()) {
    buffer.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, buffer, out);
    buffer.pop_back();
  }
  if (j < v.size()) {
    buffer.push_back(v[j]);
    shuffle_into(u, i, v, j + 1, buffer, out);
    buffer.pop_back();
  }
}

}  // namespace

std::vector<Word> shuffle(const Word& u, const Word& v) {
  std::vector<Word> out;
  std::vector<Letter> buffer;
  buffer.reserve(u.size() + v.size());
  shuffle_into(u.letters(), 0, v.letters(), 0, buffer, out);
  std::sort(out.begin(), out.end());
  return out;
}

LinComb<Word> shuffle_product(const Word& u, const Word& v) {
  LinComb<Word> out;
  for (auto& w : shuffle(u, v)) out.add_term(w, 1);
  return out;
}

LinComb<Word> shuffle_antipode(const Word& w) {
  return LinComb<Word>::term(w.reversed(), w.size() % 2 == 0 ? 1 : -1);
}

PositionSet descents(const Word& w) {
  PositionSet out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i + 1));
  return out;
}

PositionSet peaks(const Word& w) {
  PositionSet out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] <= w[i] && w[i] > w[i + 1]) out.push_back(static_cast<int>(i + 1));
  return out;
}

PositionSet valleys(const Word& w) {
  PositionSet out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] >= w[i] && w[i] < w[i + 1]) out.push_back(static_cast<int>(i + 1));
  return out;
}

bool is_weakly_increasing(const Word& w) { return std::is_sorted(w.begin(), w.end()); }
bool is_weakly_decreasing(const Word& w) { return std::is_sorted(w.begin(), w.end(), std::greater<>()); }
bool is_strictly_increasing(const Word& w) {
  return std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) == w.end();
}
bool is_strictly_decreasing(const Word& w) {
  return std::adjacent_find(w.begin(), w.end(), std::less_equal<>()) == w.end();
}

int count_ones(const Word& w) { return static_cast<int>(std::count(w.begin(), w.end(), 1)); }
int count_ones_and_twos(const Word& w) {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](Letter x) { return x == 1 || x == 2; }));
}

}  // namespace cb
