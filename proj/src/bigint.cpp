#include "normgcd/bigint.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <vector>

namespace normgcd {

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  int base = 10;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  if (digits.empty()) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  for (char ch : digits) {
    const auto uch = static_cast<unsigned char>(ch);
    const bool ok = base == 16 ? std::isxdigit(uch) != 0 : std::isdigit(uch) != 0;
    if (!ok) throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  BigInt value;
  value.set_str(std::string(digits), base);
  if (negative) value = -value;
  return value;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

BigInt floor_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt div_exact(const BigInt& x, const BigInt& d) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

bool fits_u64(const BigInt& x) {
  return sign(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const BigInt& x) {
  if (!fits_u64(x)) throw std::out_of_range("integer does not fit in 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

BigInt from_u64(std::uint64_t x) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
  return out;
}

BigInt from_i128(__int128 x) {
  const bool negative = x < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
  const std::uint64_t words[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  BigInt out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, words);
  if (negative) out = -out;
  return out;
}

BigInt random_below_pow2(std::mt19937_64& rng, unsigned bits) {
  if (bits == 0) return 0;
  std::vector<std::uint64_t> words((bits + 63) / 64);
  for (auto& w : words) w = rng();
  if (const unsigned top = bits % 64; top != 0) words.back() &= (std::uint64_t{1} << top) - 1;
  BigInt out;
  mpz_import(out.get_mpz_t(), words.size(), -1, sizeof(std::uint64_t), 0, 0, words.data());
  return out;
}

BigInt random_with_bits(std::mt19937_64& rng, unsigned bits) {
  if (bits == 0) throw std::invalid_argument("bit size must be positive");
  BigInt out = random_below_pow2(rng, bits - 1);
  mpz_setbit(out.get_mpz_t(), bits - 1);
  return out;
}

}  // namespace normgcd
