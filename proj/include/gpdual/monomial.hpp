#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "gpdual/errors.hpp"

namespace gpdual {

inline constexpr int kMaxVars = 21;

/* Exponent vector with cached total degree.  Dense storage: every ring here
 * has at most 21 variables, so a fixed array beats anything clever. */
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint8_t n = 0;     // number of variables in the ring
  std::uint16_t deg = 0;  // total degree

  static Monomial one(int nvars) {
    Monomial m;
    m.n = static_cast<std::uint8_t>(nvars);
    return m;
  }

  static Monomial var(int nvars, int i, int power = 1) {
    Monomial m = one(nvars);
    m.e[i] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
  }

  bool is_one() const { return deg == 0; }

  Monomial mul(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < n; ++i) {
      int s = r.e[i] + o.e[i];
      if (s > 255) throw InvariantError("Monomial: exponent overflow");
      r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  /* o / this, caller guarantees divisibility */
  Monomial div_into(const Monomial& o) const {
    Monomial r = o;
    for (int i = 0; i < n; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
    r.deg = static_cast<std::uint16_t>(o.deg - deg);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r = *this;
    int d = 0;
    for (int i = 0; i < n; ++i) {
      r.e[i] = std::max(e[i], o.e[i]);
      d += r.e[i];
    }
    r.deg = static_cast<std::uint16_t>(d);
    return r;
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    if (n != o.n || deg != o.deg) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] != o.e[i]) return false;
    return true;
  }

  std::string str(const std::string& stem = "x") const;
};

enum class OrderKind { grevlex, lex };

/* Term order with an optional variable permutation: perm[k] is the variable
 * sitting at importance position k.  grevlex is the workhorse; lex exists for
 * small eliminations and tests. */
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::uint8_t n = 0;
  std::array<std::uint8_t, kMaxVars> perm{};

  static MonomialOrder make(OrderKind k, int nvars) {
    MonomialOrder o;
    o.kind = k;
    o.n = static_cast<std::uint8_t>(nvars);
    std::iota(o.perm.begin(), o.perm.begin() + nvars, 0);
    return o;
  }

  static MonomialOrder make_permuted(OrderKind k, int nvars,
                                     const std::array<std::uint8_t, kMaxVars>& perm) {
    MonomialOrder o;
    o.kind = k;
    o.n = static_cast<std::uint8_t>(nvars);
    o.perm = perm;
    return o;
  }

  /* negative if a < b, zero if equal, positive if a > b */
  int cmp(const Monomial& a, const Monomial& b) const {
    if (kind == OrderKind::grevlex) {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int k = n - 1; k >= 0; --k) {
        int i = perm[k];
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
      }
      return 0;
    }
    for (int k = 0; k < n; ++k) {
      int i = perm[k];
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace gpdual
