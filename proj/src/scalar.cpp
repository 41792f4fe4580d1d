#include "dgwork/scalar.hpp"

#include <cctype>

namespace dgwork {

std::string to_string(const Scalar& x) { return x.get_str(); }

namespace {

bool is_canonical_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (!allow_sign) return false;
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  // No leading zeros, and "-0" is not canonical.
  if (s[i] == '0' && (s.size() - i > 1 || i == 1)) return false;
  return true;
}

}  // namespace

std::optional<Scalar> parse_canonical(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_canonical_integer(text, true)) return std::nullopt;
    return Scalar(mpz_class(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_canonical_integer(num, true) || !is_canonical_integer(den, false)) {
    return std::nullopt;
  }
  mpz_class p(std::string{num});
  mpz_class q(std::string{den});
  if (q <= 1 || p == 0) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) return std::nullopt;
  return Scalar(p, q);
}

std::optional<std::uint64_t> reduce_mod(const Scalar& x, std::uint64_t p) {
  const mpz_class modulus(static_cast<unsigned long>(p));
  mpz_class num = x.get_num() % modulus;
  if (num < 0) num += modulus;
  mpz_class den = x.get_den() % modulus;
  if (den == 0) return std::nullopt;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
  mpz_class r = (num * inv) % modulus;
  return static_cast<std::uint64_t>(r.get_ui());
}

}  // namespace dgwork
