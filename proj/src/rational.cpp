#include "seifert/rational.hpp"

#include "seifert/error.hpp"

#include <cctype>

namespace seifert {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::Overflow, "integer does not fit in 64 bits", Stage::Algebra);
  return static_cast<std::int64_t>(z.get_si());
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'", Stage::Parse);
  if (num_text.size() > 4096) throw Error(ErrorCode::ResourceLimit, "rational numerator too long", Stage::Parse);
  mpz_class num = parse_integer(num_text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text[0] == '-' || den_text[0] == '+')
      throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'", Stage::Parse);
    if (den_text.size() > 4096) throw Error(ErrorCode::ResourceLimit, "rational denominator too long", Stage::Parse);
    den = parse_integer(den_text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'", Stage::Parse);
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace seifert
