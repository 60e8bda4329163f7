#include "apw/rational.hpp"

#include <cctype>

namespace apw {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  std::size_t i = 0;
  auto expect_digits = [&](const char* what) {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw input_error(std::string("expected digits in ") + what + ": '" + text + "'");
  };
  if (text[i] == '-' || text[i] == '+') ++i;
  expect_digits("numerator");
  if (i < text.size()) {
    if (text[i] != '/') throw input_error("bad rational literal: '" + text + "'");
    ++i;
    expect_digits("denominator");
    if (i != text.size()) throw input_error("bad rational literal: '" + text + "'");
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw input_error("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw input_error("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer denominator_lcm(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const Rational& q : v) {
    Integer d = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

}  // namespace apw
