#ifndef FIXLAB_GROUP_HPP_
#define FIXLAB_GROUP_HPP_

// G = NS2^l x Z^p x Z2^q with NS2 = <a, b | b a b^-1 a>.
//
// Elements are stored directly in normal form
//   a1^s1 b1^t1 ... al^sl bl^tl c1^n1 ... cp^np d1^e1 ... dq^eq
// so equality of records is equality in G. Inside one Klein factor
//   (s, t) * (s', t') = (s + (-1)^t s', t + t'),
// which is b a^n = a^-n b written on exponents.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"
#include "intlat.hpp"

namespace fixlab {

enum class EuclideanBlock { Trivial, Z, Z2Torus, Z2, KleinBottle };

enum class GenKind { A, B, C, D };

struct Generator {
  GenKind kind;
  std::size_t factor;  // 0-based index within its kind
};

struct GroupSpec {
  std::size_t klein = 0;    // l
  std::size_t free = 0;     // p
  std::size_t torsion = 0;  // q

  std::size_t generator_count() const { return 2 * klein + free + torsion; }
  // Integer exponent coordinates (s_i, t_i, n_j); also the rank of T.
  std::size_t lattice_dim() const { return 2 * klein + free; }
  // Target of the parity quotient G -> Z2^{l+q}.
  std::size_t quotient_dim() const { return klein + torsion; }
  // Target of parity_class.
  std::size_t parity_dim() const { return 2 * klein + free + torsion; }

  Generator generator(std::size_t i) const {
    if (i < 2 * klein)
      return {i % 2 == 0 ? GenKind::A : GenKind::B, i / 2};
    i -= 2 * klein;
    if (i < free)
      return {GenKind::C, i};
    i -= free;
    if (i < torsion)
      return {GenKind::D, i};
    throw std::out_of_range("GroupSpec: generator index out of range");
  }

  std::size_t generator_index(Generator g) const {
    switch (g.kind) {
    case GenKind::A: return 2 * g.factor;
    case GenKind::B: return 2 * g.factor + 1;
    case GenKind::C: return 2 * klein + g.factor;
    case GenKind::D: return 2 * klein + free + g.factor;
    }
    return 0;
  }

  std::string generator_name(std::size_t i) const {
    Generator g = generator(i);
    static const char letters[] = {'a', 'b', 'c', 'd'};
    return letters[static_cast<int>(g.kind)] + std::to_string(g.factor + 1);
  }

  // Direct factor a generator belongs to: Klein factors first, then each
  // Z and each Z2 on its own.
  std::size_t direct_factor(std::size_t i) const {
    Generator g = generator(i);
    switch (g.kind) {
    case GenKind::A:
    case GenKind::B: return g.factor;
    case GenKind::C: return klein + g.factor;
    case GenKind::D: return klein + free + g.factor;
    }
    return 0;
  }

  bool operator==(const GroupSpec&) const = default;
};

inline GroupSpec canonicalize_spec(std::span<const EuclideanBlock> blocks) {
  GroupSpec spec;
  for (EuclideanBlock b : blocks) {
    switch (b) {
    case EuclideanBlock::Trivial: break;
    case EuclideanBlock::Z: spec.free += 1; break;
    case EuclideanBlock::Z2Torus: spec.free += 2; break;
    case EuclideanBlock::Z2: spec.torsion += 1; break;
    case EuclideanBlock::KleinBottle: spec.klein += 1; break;
    }
  }
  return spec;
}

struct KleinCoord {
  Integer s, t;
  bool operator==(const KleinCoord&) const = default;
};

// Bit vector over Z2, one byte per bit.
using Parity = std::vector<std::uint8_t>;

struct Element {
  std::vector<KleinCoord> klein;
  IntVector free;
  Parity tor;

  bool operator==(const Element&) const = default;

  bool is_identity() const {
    for (const auto& k : klein)
      if (k.s != 0 || k.t != 0)
        return false;
    for (const auto& n : free)
      if (n != 0)
        return false;
    for (auto e : tor)
      if (e)
        return false;
    return true;
  }
};

inline Element identity(const GroupSpec& spec) {
  Element g;
  g.klein.resize(spec.klein);
  g.free.resize(spec.free);
  g.tor.assign(spec.torsion, 0);
  return g;
}

inline Element generator_element(const GroupSpec& spec, std::size_t i) {
  Element g = identity(spec);
  Generator gen = spec.generator(i);
  switch (gen.kind) {
  case GenKind::A: g.klein[gen.factor].s = 1; break;
  case GenKind::B: g.klein[gen.factor].t = 1; break;
  case GenKind::C: g.free[gen.factor] = 1; break;
  case GenKind::D: g.tor[gen.factor] = 1; break;
  }
  return g;
}

inline std::vector<Element> all_generators(const GroupSpec& spec) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < spec.generator_count(); ++i)
    gens.push_back(generator_element(spec, i));
  return gens;
}

inline bool shape_matches(const GroupSpec& spec, const Element& g) {
  return g.klein.size() == spec.klein && g.free.size() == spec.free && g.tor.size() == spec.torsion;
}

inline Element mul(const Element& g, const Element& h) {
  if (g.klein.size() != h.klein.size() || g.free.size() != h.free.size() || g.tor.size() != h.tor.size())
    throw std::invalid_argument("mul: elements belong to different groups");
  Element r = g;
  for (std::size_t i = 0; i < r.klein.size(); ++i) {
    if (is_odd(g.klein[i].t))
      r.klein[i].s -= h.klein[i].s;
    else
      r.klein[i].s += h.klein[i].s;
    r.klein[i].t += h.klein[i].t;
  }
  for (std::size_t j = 0; j < r.free.size(); ++j)
    r.free[j] += h.free[j];
  for (std::size_t j = 0; j < r.tor.size(); ++j)
    r.tor[j] ^= h.tor[j];
  return r;
}

inline Element inv(const Element& g) {
  Element r = g;
  for (auto& k : r.klein) {
    // (s, t)^-1 = (-(-1)^t s, -t)
    if (!is_odd(k.t))
      k.s = -k.s;
    k.t = -k.t;
  }
  for (auto& n : r.free)
    n = -n;
  return r;
}

inline Element pow(const Element& g, const Integer& k) {
  Element r = g;
  const bool k_odd = is_odd(k);
  for (auto& c : r.klein) {
    if (is_odd(c.t)) {
      // (a^r b^t)^2 = b^2t for odd t, so the a-part survives only for odd k.
      if (!k_odd)
        c.s = 0;
    } else {
      c.s *= k;
    }
    c.t *= k;
  }
  for (auto& n : r.free)
    n *= k;
  for (auto& e : r.tor)
    e = e && k_odd;
  return r;
}

inline Element commutator(const Element& g, const Element& h) {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

// Every exponent reduced mod 2, in the order (s1, t1, ..., sl, tl, n, e).
inline Parity parity_class(const Element& g) {
  Parity p;
  p.reserve(2 * g.klein.size() + g.free.size() + g.tor.size());
  for (const auto& k : g.klein) {
    p.push_back(is_odd(k.s));
    p.push_back(is_odd(k.t));
  }
  for (const auto& n : g.free)
    p.push_back(is_odd(n));
  for (auto e : g.tor)
    p.push_back(e);
  return p;
}

// Parity quotient G -> Z2^{l+q}: (t_i mod 2, e_j). Its kernel is T.
inline Parity parity_quotient(const Element& g) {
  Parity p;
  p.reserve(g.klein.size() + g.tor.size());
  for (const auto& k : g.klein)
    p.push_back(is_odd(k.t));
  for (auto e : g.tor)
    p.push_back(e);
  return p;
}

// Coordinates (s_i, floor(t_i / 2), n_j). Exact on T, where the record
// reads back through from_coords with zero parity.
inline IntVector coords(const Element& g) {
  IntVector v;
  v.reserve(2 * g.klein.size() + g.free.size());
  for (const auto& k : g.klein) {
    v.push_back(k.s);
    v.push_back(floor_div(k.t, 2));
  }
  for (const auto& n : g.free)
    v.push_back(n);
  return v;
}

// Inverse of (coords, parity_quotient).
inline Element from_coords(const GroupSpec& spec, const IntVector& v, const Parity& quotient) {
  if (v.size() != spec.lattice_dim() || quotient.size() != spec.quotient_dim())
    throw std::invalid_argument("from_coords: dimension mismatch");
  Element g = identity(spec);
  for (std::size_t i = 0; i < spec.klein; ++i) {
    g.klein[i].s = v[2 * i];
    g.klein[i].t = 2 * v[2 * i + 1] + (quotient[i] ? 1 : 0);
  }
  for (std::size_t j = 0; j < spec.free; ++j)
    g.free[j] = v[2 * spec.klein + j];
  for (std::size_t j = 0; j < spec.torsion; ++j)
    g.tor[j] = quotient[spec.klein + j];
  return g;
}

inline Element from_coords(const GroupSpec& spec, const IntVector& v) {
  return from_coords(spec, v, Parity(spec.quotient_dim(), 0));
}

// Conjugation by an element with parity-quotient image f, acting on T
// coordinates: b a b^-1 = a^-1, so s_i changes sign where t_i is odd.
inline IntVector conjugate_coords(const IntVector& v, const Parity& f, std::size_t klein) {
  IntVector r = v;
  for (std::size_t i = 0; i < klein; ++i)
    if (f[i])
      r[2 * i] = -r[2 * i];
  return r;
}

enum class Distinguished { N, Gprime, T };

inline bool in_distinguished(const Element& g, Distinguished which) {
  for (auto e : g.tor)
    if (e)
      return false;
  if (which == Distinguished::T) {
    for (const auto& k : g.klein)
      if (is_odd(k.t))
        return false;
    return true;
  }
  for (const auto& n : g.free)
    if (n != 0)
      return false;
  for (const auto& k : g.klein) {
    if (k.t != 0)
      return false;
    if (which == Distinguished::Gprime && is_odd(k.s))
      return false;
  }
  return true;
}

struct NotInCommutator : std::invalid_argument {
  NotInCommutator(const std::string& what, std::size_t coordinate)
    : std::invalid_argument(what), coordinate(coordinate) {}
  std::size_t coordinate;  // index into the (s1, t1, ..., n, e) layout
};

// The square root inside N of an element of G' = <a1^2, ..., al^2>.
inline Element sqrt_in_N(const Element& g) {
  const std::size_t l = g.klein.size();
  for (std::size_t i = 0; i < l; ++i) {
    if (g.klein[i].t != 0)
      throw NotInCommutator("sqrt_in_N: b" + std::to_string(i + 1) + " exponent is nonzero", 2 * i + 1);
    if (is_odd(g.klein[i].s))
      throw NotInCommutator("sqrt_in_N: a" + std::to_string(i + 1) + " exponent is odd", 2 * i);
  }
  for (std::size_t j = 0; j < g.free.size(); ++j)
    if (g.free[j] != 0)
      throw NotInCommutator("sqrt_in_N: c" + std::to_string(j + 1) + " exponent is nonzero", 2 * l + j);
  for (std::size_t j = 0; j < g.tor.size(); ++j)
    if (g.tor[j])
      throw NotInCommutator("sqrt_in_N: d" + std::to_string(j + 1) + " exponent is nonzero",
                            2 * l + g.free.size() + j);
  Element r = g;
  for (auto& k : r.klein)
    k.s /= 2;
  return r;
}

} // namespace fixlab

#endif
