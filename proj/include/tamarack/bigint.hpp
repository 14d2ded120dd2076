#ifndef TAMARACK_BIGINT_HPP
#define TAMARACK_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tamarack {

// Arbitrary-precision signed integer, sign-and-magnitude over base 2^32.
// All homology runs on exact integers; no modular shortcuts anywhere.
class Int {
public:
  Int() = default;
  Int(long long v);

  static Int from_string(const std::string &s);

  bool is_zero() const { return mag_.empty(); }
  bool is_one() const { return sign_ > 0 && mag_.size() == 1 && mag_[0] == 1; }
  bool is_neg() const { return sign_ < 0; }
  int sign() const { return sign_; }

  // Fits in int64? (used by JSON emission)
  bool fits_i64() const;
  long long to_i64() const;

  std::string to_string() const;

  Int operator-() const;
  Int abs() const;

  Int &operator+=(const Int &o);
  Int &operator-=(const Int &o);
  Int &operator*=(const Int &o);

  friend Int operator+(Int a, const Int &b) { return a += b; }
  friend Int operator-(Int a, const Int &b) { return a -= b; }
  friend Int operator*(const Int &a, const Int &b);

  // Truncated division (C semantics): quotient rounds toward zero.
  static void divmod(const Int &a, const Int &b, Int &q, Int &r);
  friend Int operator/(const Int &a, const Int &b);
  friend Int operator%(const Int &a, const Int &b);

  // Exact division; aborts if the remainder is nonzero.
  Int div_exact(const Int &b) const;

  // Floor division (used by HNF entry reduction).
  static Int fdiv(const Int &a, const Int &b);

  static Int gcd(Int a, Int b);
  static Int pow(const Int &base, unsigned long long e);

  friend bool operator==(const Int &a, const Int &b);
  friend bool operator!=(const Int &a, const Int &b) { return !(a == b); }
  friend bool operator<(const Int &a, const Int &b);
  friend bool operator>(const Int &a, const Int &b) { return b < a; }
  friend bool operator<=(const Int &a, const Int &b) { return !(b < a); }
  friend bool operator>=(const Int &a, const Int &b) { return !(a < b); }

  friend std::ostream &operator<<(std::ostream &os, const Int &v);

  // |a| vs |b|
  static int cmp_abs(const Int &a, const Int &b);

  size_t limbs() const { return mag_.size(); }

private:
  int sign_ = 0;                 // -1, 0, +1
  std::vector<uint32_t> mag_;    // little-endian limbs, no trailing zeros

  void trim();
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t> &a,
                                       const std::vector<uint32_t> &b);
  static void divmod_mag(const std::vector<uint32_t> &a,
                         const std::vector<uint32_t> &b,
                         std::vector<uint32_t> &q, std::vector<uint32_t> &r);
};

} // namespace tamarack

#endif
