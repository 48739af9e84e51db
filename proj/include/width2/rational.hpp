#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace width2 {

// ---- exact rationals -----------------------------------------------------
//
// Plain fraction over long long, reduced, positive denominator. Products run
// through __int128; a result that no longer fits raises overflow_error
// instead of wrapping.

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n, long long d = 1) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num = n;
    den = d;
  }

  static Rat from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 lim = 0x7fffffffffffffffLL;
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational out of range");
    Rat r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return from_i128(__int128(x.num) * y.den + __int128(y.num) * x.den, __int128(x.den) * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return from_i128(__int128(x.num) * y.den - __int128(y.num) * x.den, __int128(x.den) * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return from_i128(__int128(x.num) * y.num, __int128(x.den) * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::invalid_argument("division by zero");
    return from_i128(__int128(x.num) * y.den, __int128(x.den) * y.num);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }
  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
    return __int128(x.num) * y.den <=> __int128(y.num) * x.den;
  }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  double to_double() const { return double(num) / double(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// ---- numbers a + b*pi ----------------------------------------------------
//
// Comparisons reduce to the sign of pi - t for a rational t, settled by a
// fixed ladder of continued-fraction enclosures of pi. Each rung was checked
// against an independently computed 60-digit value of pi before being frozen
// here. The ladder bottoms out at width ~5e-25; a rational t built from the
// denominators this library produces (at most a few times 1e7) sits at least
// ~1e-15 away from pi, so running off the ladder indicates a logic error, not
// a data-dependent failure.

namespace detail {

struct PiRung {
  long long lo_num, lo_den, hi_num, hi_den;
};

inline constexpr PiRung pi_ladder[] = {
    {3LL, 1LL, 22LL, 7LL},
    {333LL, 106LL, 355LL, 113LL},
    {103993LL, 33102LL, 104348LL, 33215LL},
    {208341LL, 66317LL, 312689LL, 99532LL},
    {833719LL, 265381LL, 1146408LL, 364913LL},
    {4272943LL, 1360120LL, 5419351LL, 1725033LL},
    {80143857LL, 25510582LL, 165707065LL, 52746197LL},
    {245850922LL, 78256779LL, 411557987LL, 131002976LL},
    {1068966896LL, 340262731LL, 2549491779LL, 811528438LL},
    {6167950454LL, 1963319607LL, 14885392687LL, 4738167652LL},
    {21053343141LL, 6701487259LL, 1783366216531LL, 567663097408LL},
    {3587785776203LL, 1142027682075LL, 5371151992734LL, 1709690779483LL},
};

// sign of pi - num/den, den > 0
inline int sign_pi_minus(long long num, long long den) {
  for (const PiRung& r : pi_ladder) {
    if (__int128(num) * r.lo_den <= __int128(r.lo_num) * den) return 1;
    if (__int128(num) * r.hi_den >= __int128(r.hi_num) * den) return -1;
  }
  throw std::logic_error("pi enclosure ladder exhausted");
}

}  // namespace detail

struct PiRational {
  Rat a;  // rational part
  Rat b;  // coefficient of pi

  PiRational() = default;
  PiRational(Rat ra, Rat rb = Rat(0)) : a(ra), b(rb) {}
  PiRational(long long n) : a(Rat(n)) {}

  static PiRational pi(Rat coeff = Rat(1)) { return PiRational(Rat(0), coeff); }

  friend PiRational operator+(const PiRational& x, const PiRational& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend PiRational operator-(const PiRational& x, const PiRational& y) {
    return {x.a - y.a, x.b - y.b};
  }
  PiRational operator-() const { return {-a, -b}; }

  int sign() const {
    if (b.num == 0) return a.sign();
    Rat t = -a / b;  // value is b * (pi - t)
    return b.sign() * detail::sign_pi_minus(t.num, t.den);
  }

  friend bool operator==(const PiRational& x, const PiRational& y) {
    return x.a == y.a && x.b == y.b;  // 1 and pi are independent over Q
  }
  friend std::strong_ordering operator<=>(const PiRational& x, const PiRational& y) {
    return (x - y).sign() <=> 0;
  }

  double to_double() const { return a.to_double() + b.to_double() * 3.141592653589793; }
  std::string str() const {
    if (b.num == 0) return a.str();
    std::string s = b.str() + "pi";
    return a.num == 0 ? s : a.str() + (b.num > 0 ? "+" : "") + s;
  }
};

}  // namespace width2
