#include "rational.hpp"

#include "error.hpp"

#include <cctype>

namespace orb {

Rat parse_rat(const std::string& text, const std::string& where) {
  auto fail = [&]() -> Rat {
    throw OrbError(where + ": malformed rational '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto digits_ok = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (sign_ok && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, false)) return fail();
  if (num[0] == '+') num.erase(0, 1); // mpz_set_str rejects an explicit plus
  mpz_class n(num), d(den);
  if (d == 0) throw OrbError(where + ": zero denominator in '" + text + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long rat_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw OrbError("rat_long: '" + rat_str(r) + "' is not a machine integer");
  return r.get_num().get_si();
}

} // namespace orb
