#include "tamarack/bigint.hpp"

#include <cassert>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace tamarack {

Int::Int(long long v) {
  if (v == 0) return;
  sign_ = v > 0 ? 1 : -1;
  unsigned long long u = v > 0 ? (unsigned long long)v : 0ULL - (unsigned long long)v;
  while (u) {
    mag_.push_back(uint32_t(u & 0xffffffffu));
    u >>= 32;
  }
}

void Int::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) sign_ = 0;
}

bool Int::fits_i64() const {
  if (mag_.size() > 2) return false;
  if (mag_.size() < 2) return true;
  unsigned long long u = ((unsigned long long)mag_[1] << 32) | mag_[0];
  if (sign_ > 0) return u <= 0x7fffffffffffffffULL;
  return u <= 0x8000000000000000ULL;
}

long long Int::to_i64() const {
  assert(fits_i64());
  unsigned long long u = 0;
  if (mag_.size() > 1) u = ((unsigned long long)mag_[1] << 32);
  if (!mag_.empty()) u |= mag_[0];
  return sign_ < 0 ? -(long long)u : (long long)u;
}

int Int::cmp_abs(const Int &a, const Int &b) {
  if (a.mag_.size() != b.mag_.size())
    return a.mag_.size() < b.mag_.size() ? -1 : 1;
  for (size_t i = a.mag_.size(); i-- > 0;) {
    if (a.mag_[i] != b.mag_[i]) return a.mag_[i] < b.mag_[i] ? -1 : 1;
  }
  return 0;
}

bool operator==(const Int &a, const Int &b) {
  return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

bool operator<(const Int &a, const Int &b) {
  if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
  int c = Int::cmp_abs(a, b);
  return a.sign_ >= 0 ? c < 0 : c > 0;
}

std::vector<uint32_t> Int::add_mag(const std::vector<uint32_t> &a,
                                   const std::vector<uint32_t> &b) {
  const auto &big = a.size() >= b.size() ? a : b;
  const auto &sml = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> r(big.size() + 1, 0);
  unsigned long long carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    unsigned long long s = carry + big[i] + (i < sml.size() ? sml[i] : 0);
    r[i] = uint32_t(s);
    carry = s >> 32;
  }
  r[big.size()] = uint32_t(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Int::sub_mag(const std::vector<uint32_t> &a,
                                   const std::vector<uint32_t> &b) {
  std::vector<uint32_t> r(a.size(), 0);
  long long borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    long long d = (long long)a[i] - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else
      borrow = 0;
    r[i] = uint32_t(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::vector<uint32_t> Int::mul_mag(const std::vector<uint32_t> &a,
                                   const std::vector<uint32_t> &b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    unsigned long long carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      unsigned long long s =
          (unsigned long long)a[i] * b[j] + r[i + j] + carry;
      r[i + j] = uint32_t(s);
      carry = s >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      unsigned long long s = r[k] + carry;
      r[k] = uint32_t(s);
      carry = s >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on 32-bit limbs.
void Int::divmod_mag(const std::vector<uint32_t> &a,
                     const std::vector<uint32_t> &b, std::vector<uint32_t> &q,
                     std::vector<uint32_t> &r) {
  assert(!b.empty());
  q.clear();
  r.clear();
  if (a.size() < b.size()) {
    r = a;
    return;
  }
  if (b.size() == 1) {
    unsigned long long d = b[0], rem = 0;
    q.assign(a.size(), 0);
    for (size_t i = a.size(); i-- > 0;) {
      unsigned long long cur = (rem << 32) | a[i];
      q[i] = uint32_t(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (rem) r.push_back(uint32_t(rem));
    return;
  }
  // normalize
  int shift = 0;
  uint32_t top = b.back();
  while (!(top & 0x80000000u)) {
    top <<= 1;
    ++shift;
  }
  size_t n = b.size(), m = a.size() - n;
  std::vector<uint32_t> u(a.size() + 1, 0), v(n, 0);
  for (size_t i = a.size(); i-- > 0;) {
    u[i] = a[i] << shift;
    if (shift && i > 0) u[i] |= uint32_t((unsigned long long)a[i - 1] >> (32 - shift));
  }
  u[a.size()] = shift ? uint32_t((unsigned long long)a.back() >> (32 - shift)) : 0;
  for (size_t i = n; i-- > 0;) {
    v[i] = b[i] << shift;
    if (shift && i > 0) v[i] |= uint32_t((unsigned long long)b[i - 1] >> (32 - shift));
  }
  q.assign(m + 1, 0);
  for (size_t j = m + 1; j-- > 0;) {
    unsigned long long num =
        ((unsigned long long)u[j + n] << 32) | u[j + n - 1];
    unsigned long long qh = num / v[n - 1];
    unsigned long long rh = num % v[n - 1];
    while (qh >= (1ULL << 32) ||
           (rh < (1ULL << 32) &&
            qh * v[n - 2] > ((rh << 32) | u[j + n - 2]))) {
      --qh;
      rh += v[n - 1];
    }
    // multiply-subtract
    long long borrow = 0;
    unsigned long long carry = 0;
    for (size_t i = 0; i < n; ++i) {
      unsigned long long p = qh * v[i] + carry;
      carry = p >> 32;
      long long d = (long long)u[i + j] - (long long)(uint32_t)p - borrow;
      if (d < 0) {
        d += (1LL << 32);
        borrow = 1;
      } else
        borrow = 0;
      u[i + j] = uint32_t(d);
    }
    long long d = (long long)u[j + n] - (long long)carry - borrow;
    if (d < 0) {
      d += (1LL << 32);
      borrow = 1;
    } else
      borrow = 0;
    u[j + n] = uint32_t(d);
    if (borrow) {
      // add back
      --qh;
      unsigned long long c = 0;
      for (size_t i = 0; i < n; ++i) {
        unsigned long long s = (unsigned long long)u[i + j] + v[i] + c;
        u[i + j] = uint32_t(s);
        c = s >> 32;
      }
      u[j + n] = uint32_t(u[j + n] + c);
    }
    q[j] = uint32_t(qh);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  // denormalize remainder
  r.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    r[i] = u[i] >> shift;
    if (shift && i + 1 < u.size())
      r[i] |= uint32_t((unsigned long long)u[i + 1] << (32 - shift));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

Int &Int::operator+=(const Int &o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) {
    *this = o;
    return *this;
  }
  if (sign_ == o.sign_) {
    mag_ = add_mag(mag_, o.mag_);
  } else {
    int c = cmp_abs(*this, o);
    if (c == 0) {
      sign_ = 0;
      mag_.clear();
    } else if (c > 0) {
      mag_ = sub_mag(mag_, o.mag_);
    } else {
      mag_ = sub_mag(o.mag_, mag_);
      sign_ = o.sign_;
    }
  }
  trim();
  return *this;
}

Int &Int::operator-=(const Int &o) { return *this += -o; }

Int Int::operator-() const {
  Int r = *this;
  r.sign_ = -r.sign_;
  return r;
}

Int Int::abs() const {
  Int r = *this;
  if (r.sign_ < 0) r.sign_ = 1;
  return r;
}

Int operator*(const Int &a, const Int &b) {
  Int r;
  if (a.sign_ == 0 || b.sign_ == 0) return r;
  r.sign_ = a.sign_ * b.sign_;
  r.mag_ = Int::mul_mag(a.mag_, b.mag_);
  r.trim();
  return r;
}

Int &Int::operator*=(const Int &o) {
  *this = *this * o;
  return *this;
}

void Int::divmod(const Int &a, const Int &b, Int &q, Int &r) {
  if (b.sign_ == 0) throw std::domain_error("Int: division by zero");
  std::vector<uint32_t> qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
  r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

Int operator/(const Int &a, const Int &b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return q;
}

Int operator%(const Int &a, const Int &b) {
  Int q, r;
  Int::divmod(a, b, q, r);
  return r;
}

Int Int::div_exact(const Int &b) const {
  Int q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw std::logic_error("Int::div_exact: nonzero remainder");
  return q;
}

Int Int::fdiv(const Int &a, const Int &b) {
  Int q, r;
  divmod(a, b, q, r);
  if (!r.is_zero() && ((a.sign_ < 0) != (b.sign_ < 0))) q -= Int(1);
  return q;
}

Int Int::gcd(Int a, Int b) {
  a.sign_ = a.mag_.empty() ? 0 : 1;
  b.sign_ = b.mag_.empty() ? 0 : 1;
  while (!b.is_zero()) {
    Int r = a % b;
    a = b;
    b = r;
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
  }
  return a;
}

Int Int::pow(const Int &base, unsigned long long e) {
  Int r(1), b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Int Int::from_string(const std::string &s) {
  Int r;
  size_t i = 0;
  int sg = 1;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    if (s[i] == '-') sg = -1;
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("Int: empty numeral");
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("Int: bad digit");
    r *= Int(10);
    r += Int(s[i] - '0');
  }
  if (sg < 0) r = -r;
  return r;
}

std::string Int::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint32_t> m = mag_;
  std::string digits;
  while (!m.empty()) {
    unsigned long long rem = 0;
    for (size_t i = m.size(); i-- > 0;) {
      unsigned long long cur = (rem << 32) | m[i];
      m[i] = uint32_t(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
    for (int k = 0; k < 9; ++k) {
      digits.push_back(char('0' + rem % 10));
      rem /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::string out;
  if (sign_ < 0) out.push_back('-');
  out.append(digits.rbegin(), digits.rend());
  return out;
}

std::ostream &operator<<(std::ostream &os, const Int &v) {
  return os << v.to_string();
}

} // namespace tamarack
