#include "casimir/rational.hpp"

#include <cctype>

#include "casimir/errors.hpp"

namespace casimir {

std::string to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
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

mpz_class parse_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text) || den_text[0] == '-')
    throw InputError("malformed rational: '" + std::string(text) + "'");
  const mpz_class den = parse_int(den_text);
  if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Rat r(parse_int(num_text), den);
  r.canonicalize();
  return r;
}

}  // namespace casimir
