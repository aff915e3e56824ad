#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "heckoid/errors.hpp"

namespace heckoid {

/// Arbitrary-precision signed integer, sign + little-endian base-2^32 magnitude.
/// Sized for slope/orbit arithmetic: values rarely exceed a few limbs, so the
/// schoolbook algorithms below are deliberate.
class BigInt {
 public:
  BigInt() = default;

  BigInt(long long v) {  // NOLINT: implicit by design, mirrors int literals
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                 : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<uint32_t>(m & 0xffffffffULL));
    if (m >> 32) mag_.push_back(static_cast<uint32_t>(m >> 32));
  }
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt parse(std::string_view s) {
    BigInt out;
    bool neg = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size()) throw error("BigInt::parse: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw error("BigInt::parse: bad digit");
      out.mul_small_add(10, static_cast<uint32_t>(s[i] - '0'));
    }
    if (!out.mag_.empty()) out.sign_ = neg ? -1 : 1;
    return out;
  }

  bool is_zero() const { return sign_ == 0; }
  int sgn() const { return sign_; }
  bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    unsigned long long m = mag_u64();
    if (sign_ >= 0) return m <= 0x7fffffffffffffffULL;
    return m <= 0x8000000000000000ULL;
  }
  long long to_int64() const {
    if (!fits_int64()) throw error("BigInt: value does not fit in 64 bits");
    unsigned long long m = mag_u64();
    if (sign_ < 0) return -static_cast<long long>(m - 1) - 1;
    return static_cast<long long>(m);
  }

  double to_double() const {
    long double acc = 0.0L;
    for (size_t i = mag_.size(); i-- > 0;) acc = acc * 4294967296.0L + mag_[i];
    return static_cast<double>(sign_ < 0 ? -acc : acc);
  }

  std::string str() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> tmp = mag_;
    std::string digits;
    while (!tmp.empty()) {
      uint64_t rem = 0;
      for (size_t i = tmp.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | tmp[i];
        tmp[i] = static_cast<uint32_t>(cur / 1000000000ULL);
        rem = cur % 1000000000ULL;
      }
      while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  friend BigInt operator-(BigInt a) {
    a.sign_ = -a.sign_;
    return a;
  }
  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  static int cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
  }
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
      return r;
    }
    int c = cmp_mag(a.mag_, b.mag_);
    if (c == 0) return r;
    if (c > 0) {
      r.mag_ = sub_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      r.mag_ = sub_mag(b.mag_, a.mag_);
      r.sign_ = b.sign_;
    }
    return r;
  }
  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.mag_ = mul_mag(a.mag_, b.mag_);
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  /// Truncated division: q = trunc(a/b), r = a - q*b (r has the sign of a).
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (a.sign_ == 0) return;
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    if (!qm.empty()) {
      q.mag_ = std::move(qm);
      q.sign_ = a.sign_ * b.sign_;
    }
    if (!rm.empty()) {
      r.mag_ = std::move(rm);
      r.sign_ = a.sign_;
    }
  }
  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }
  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  /// Floor division (round toward -inf); pairs with canonicalization moves.
  static BigInt fdiv(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero() && (a.sign_ * b.sign_) < 0) q -= BigInt(1);
    return q;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.sign_ == 0 ? 0 : 1;
    b.sign_ = b.sign_ == 0 ? 0 : 1;
    while (!b.is_zero()) {
      BigInt r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

 private:
  int sign_ = 0;                // -1, 0, +1
  std::vector<uint32_t> mag_;   // little-endian, no leading zero limbs

  unsigned long long mag_u64() const {
    unsigned long long m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() == 2) m |= static_cast<unsigned long long>(mag_[1]) << 32;
    return m;
  }

  void mul_small_add(uint32_t mul, uint32_t add) {
    uint64_t carry = add;
    for (auto& limb : mag_) {
      uint64_t cur = static_cast<uint64_t>(limb) * mul + carry;
      limb = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<uint32_t>(carry));
  }

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<uint32_t> r(hi.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < hi.size(); ++i) {
      uint64_t cur = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
      r[i] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    r[hi.size()] = static_cast<uint32_t>(carry);
    trim(r);
    return r;
  }

  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      if (cur < 0) cur += (1LL << 32);
      r[i] = static_cast<uint32_t>(cur);
    }
    trim(r);
    return r;
  }

  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
      uint64_t carry = 0;
      for (size_t j = 0; j < b.size(); ++j) {
        uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
        r[i + j] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
      }
      size_t k = i + b.size();
      while (carry) {
        uint64_t cur = r[k] + carry;
        r[k] = static_cast<uint32_t>(cur);
        carry = cur >> 32;
        ++k;
      }
    }
    trim(r);
    return r;
  }

  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      return;
    }
    if (b.size() == 1) {
      q.assign(a.size(), 0);
      uint64_t d = b[0], rem = 0;
      for (size_t i = a.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
      }
      trim(q);
      if (rem) r.push_back(static_cast<uint32_t>(rem));
      return;
    }
    // Bitwise long division; fine at the few-limb sizes seen here.
    size_t nbits = a.size() * 32;
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = nbits; bit-- > 0;) {
      shl1(r);
      if ((a[bit / 32] >> (bit % 32)) & 1u) {
        if (r.empty())
          r.push_back(1);
        else
          r[0] |= 1u;
      }
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[bit / 32] |= (1u << (bit % 32));
      }
    }
    trim(q);
    trim(r);
  }

  static void shl1(std::vector<uint32_t>& v) {
    uint32_t carry = 0;
    for (auto& limb : v) {
      uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) v.push_back(carry);
  }

  static void trim(std::vector<uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }
};

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace heckoid
