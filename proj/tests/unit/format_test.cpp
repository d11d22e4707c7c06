#include <gtest/gtest.h>

#include "cb/format.hpp"
#include "cb/pi_bialgebra.hpp"
#include "cb/qsym.hpp"
#include "cb/signed_modules.hpp"

using namespace cb;

TEST(Format, SplitTerms) {
  const auto t = split_terms("2*[1,-3,-2]_B - 1/3*[12]_B + [21]_B");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].first, 2);
  EXPECT_EQ(t[0].second, "[1,-3,-2]_B");
  EXPECT_EQ(t[1].first, Rational(-1, 3));
  EXPECT_TRUE(split_terms("0").empty());
}

TEST(Format, RenderParseRoundTrip) {
  QSym x;
  x.add_term(Composition{1, 2}, Rational(-3, 4));
  x.add_term(Composition{3}, 2);
  x.add_term(Composition{}, 1);
  EXPECT_EQ(parse_basis(render(x), 'M'), x);
  const auto y = pi_product(PiKey{parse_permutation("231")}, PiKey{parse_permutation("312")});
  EXPECT_EQ(parse_lincomb<PiKey>(render(y), parse_pikey), y);
  EXPECT_EQ(render(PiElem{}), "0");
}

TEST(Format, JsonRoundTrip) {
  QSym x;
  x.add_term(Composition{2, 1}, Rational(5, 3));
  x.add_term(Composition{1}, BigInt("123456789012345678901234567890"));
  auto text = [](const Composition& a) { return to_string(a); };
  const auto j = to_json(x, text);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(from_json<Composition>(j, parse_composition), x);
  EXPECT_EQ(big_from_json(big_to_json(BigInt(-7))), -7);
}
