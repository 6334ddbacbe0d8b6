#pragma once

// Brute-force reference computations that share no code with the library.
// They work on raw tables (or plain integers for Z_n) and favor the most
// literal reading of each definition.

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "qjlab/finring.hpp"

namespace oracle {

struct Table {
  std::size_t n = 0;
  std::vector<std::uint16_t> add, mul;
  unsigned zero = 0, one = 0;

  unsigned plus(unsigned a, unsigned b) const { return add[a * n + b]; }
  unsigned times(unsigned a, unsigned b) const { return mul[a * n + b]; }
};

inline Table of(const qjlab::finring::RingTable& R) {
  Table t;
  t.n = R.order();
  t.add.assign(R.add_table().begin(), R.add_table().end());
  t.mul.assign(R.mul_table().begin(), R.mul_table().end());
  t.zero = R.zero();
  t.one = R.one();
  return t;
}

using Set = std::vector<bool>;

inline Set to_set(const qjlab::ElemBits& bits, std::size_t n) {
  Set s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = bits.test(i);
  return s;
}

inline bool is_unit(const Table& t, unsigned a) {
  for (unsigned b = 0; b < t.n; ++b)
    if (t.times(a, b) == t.one) return true;
  return false;
}

// Some power a^k, k >= 1, lies in s.
inline bool power_in(const Table& t, unsigned a, const Set& s) {
  unsigned p = a;
  for (std::size_t k = 0; k <= t.n; ++k) {
    if (s[p]) return true;
    p = t.times(p, a);
  }
  return false;
}

inline Set nilradical(const Table& t) {
  Set zero(t.n);
  zero[t.zero] = true;
  Set out(t.n);
  for (unsigned a = 0; a < t.n; ++a) out[a] = power_in(t, a, zero);
  return out;
}

// {a : 1 + ra is a unit for every r}
inline Set jacobson(const Table& t) {
  Set out(t.n);
  for (unsigned a = 0; a < t.n; ++a) {
    bool ok = true;
    for (unsigned r = 0; r < t.n && ok; ++r) ok = is_unit(t, t.plus(t.one, t.times(r, a)));
    out[a] = ok;
  }
  return out;
}

inline Set radical(const Table& t, const Set& I) {
  Set out(t.n);
  for (unsigned a = 0; a < t.n; ++a) out[a] = power_in(t, a, I);
  return out;
}

inline bool proper(const Table& t, const Set& I) { return !I[t.one]; }

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// ab ∈ I and a ∉ A imply b ∈ B.
inline bool pair_rule(const Table& t, const Set& I, const Set& A, const Set& B) {
  for (unsigned a = 0; a < t.n; ++a)
    for (unsigned b = 0; b < t.n; ++b)
      if (I[t.times(a, b)] && !A[a] && !B[b]) return false;
  return true;
}

inline bool j_ideal(const Table& t, const Set& I) {
  return proper(t, I) && pair_rule(t, I, jacobson(t), I);
}

inline bool quasi_j(const Table& t, const Set& I) {
  return proper(t, I) && j_ideal(t, radical(t, I));
}

inline bool n_ideal(const Table& t, const Set& I) {
  return proper(t, I) && pair_rule(t, I, nilradical(t), I);
}

inline bool delta1_n(const Table& t, const Set& I) {
  return proper(t, I) && pair_rule(t, I, nilradical(t), radical(t, I));
}

inline bool prime(const Table& t, const Set& I) { return proper(t, I) && pair_rule(t, I, I, I); }

inline bool presimplifiable(const Table& t) {
  for (unsigned a = 0; a < t.n; ++a)
    for (unsigned b = 0; b < t.n; ++b)
      if (t.times(a, b) == a && a != t.zero && !is_unit(t, b)) return false;
  return true;
}

inline bool quasi_presimplifiable(const Table& t) {
  const auto N = nilradical(t);
  for (unsigned a = 0; a < t.n; ++a)
    for (unsigned b = 0; b < t.n; ++b)
      if (t.times(a, b) == a && !N[a] && !is_unit(t, b)) return false;
  return true;
}

// The ideal lattice, grown by adjoining one element to a known ideal and
// closing under + and multiplication until nothing new appears.
inline std::set<std::vector<bool>> ideals(const Table& t) {
  auto close = [&](Set s) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (unsigned a = 0; a < t.n; ++a) {
        if (!s[a]) continue;
        for (unsigned b = 0; b < t.n; ++b) {
          const unsigned c = t.times(a, b);
          if (!s[c]) s[c] = grew = true;
          if (s[b] && !s[t.plus(a, b)]) s[t.plus(a, b)] = grew = true;
        }
      }
    }
    return s;
  };
  std::set<std::vector<bool>> out;
  Set zero(t.n);
  zero[t.zero] = true;
  out.insert(close(zero));
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = out;
    for (const auto& I : snapshot)
      for (unsigned a = 0; a < t.n; ++a) {
        if (I[a]) continue;
        Set s = I;
        s[a] = true;
        if (out.insert(close(s)).second) grew = true;
      }
  }
  return out;
}

// Z_n arithmetic on plain integers.
namespace zn {

inline unsigned rad(unsigned d) {
  unsigned out = 1;
  for (unsigned p = 2; p <= d; ++p) {
    if (d % p) continue;
    out *= p;
    while (d % p == 0) d /= p;
  }
  return out;
}

// The ideal dZ_n for d | n, as a set of residues.
inline Set ideal(unsigned n, unsigned d) {
  Set s(n);
  for (unsigned k = 0; k < n; k += d) s[k] = true;
  return s;
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

// Z_n is local iff n is a prime power, and then every proper ideal is
// quasi-J. Otherwise there are none.
inline bool quasi_j(unsigned n, unsigned d) {
  if (d == 1) return false;
  const unsigned r = rad(n);
  // prime power iff its radical is prime
  for (unsigned p = 2; p < r; ++p)
    if (r % p == 0) return false;
  return true;
}

}  // namespace zn

}  // namespace oracle
