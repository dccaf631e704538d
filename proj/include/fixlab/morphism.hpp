#ifndef FIXLAB_MORPHISM_HPP_
#define FIXLAB_MORPHISM_HPP_

// Endomorphisms of G as generator-image tables, checked against every
// defining relation, and the exact computation of their fixed subgroups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "intlat.hpp"
#include "subgroup.hpp"
#include "word.hpp"

namespace fixlab {

struct RelationError : std::invalid_argument {
  RelationError(const std::string& relation, const std::string& image)
    : std::invalid_argument("relation " + relation + " maps to " + image + ", not the identity"),
      relation(relation), image(image) {}
  std::string relation;
  std::string image;
};

class Endomorphism {
public:
  // Validates images (one per generator, canonical order) against the
  // relators b a b^-1 a, d^2 and the commutators across direct factors.
  static Endomorphism create(const GroupSpec& spec, std::vector<Element> images) {
    if (auto err = violation(spec, images))
      throw *err;
    return Endomorphism(spec, std::move(images));
  }

  static Endomorphism identity(const GroupSpec& spec) { return Endomorphism(spec, all_generators(spec)); }

  // The first violated relation, if any.
  static std::optional<RelationError> violation(const GroupSpec& spec, std::span<const Element> images) {
    if (images.size() != spec.generator_count())
      throw std::invalid_argument("endomorphism needs exactly one image per generator");
    for (const auto& g : images)
      if (!shape_matches(spec, g))
        throw std::invalid_argument("endomorphism image does not belong to the group");
    auto name = [&](std::size_t i) { return spec.generator_name(i); };
    for (std::size_t i = 0; i < spec.klein; ++i) {
      const Element& a = images[2 * i];
      const Element& b = images[2 * i + 1];
      Element r = mul(mul(b, a), mul(inv(b), a));
      if (!r.is_identity())
        return RelationError(name(2 * i + 1) + " " + name(2 * i) + " " + name(2 * i + 1) + "^-1 " + name(2 * i),
                             to_string(spec, r));
    }
    for (std::size_t j = 0; j < spec.torsion; ++j) {
      std::size_t gi = 2 * spec.klein + spec.free + j;
      Element r = mul(images[gi], images[gi]);
      if (!r.is_identity())
        return RelationError(name(gi) + "^2", to_string(spec, r));
    }
    for (std::size_t x = 0; x < images.size(); ++x)
      for (std::size_t y = x + 1; y < images.size(); ++y) {
        if (spec.direct_factor(x) == spec.direct_factor(y))
          continue;
        Element r = commutator(images[x], images[y]);
        if (!r.is_identity())
          return RelationError("[" + name(x) + ", " + name(y) + "]", to_string(spec, r));
      }
    return std::nullopt;
  }

  const GroupSpec& spec() const { return spec_; }
  const std::vector<Element>& images() const { return images_; }
  const Element& image(std::size_t generator) const { return images_[generator]; }

  bool operator==(const Endomorphism&) const = default;

private:
  Endomorphism(GroupSpec spec, std::vector<Element> images) : spec_(spec), images_(std::move(images)) {}

  GroupSpec spec_;
  std::vector<Element> images_;
};

inline Endomorphism new_checked_endo(const GroupSpec& spec, std::vector<Element> images) {
  return Endomorphism::create(spec, std::move(images));
}

inline Element apply(const Endomorphism& f, const Element& g) {
  const GroupSpec& spec = f.spec();
  if (!shape_matches(spec, g))
    throw std::invalid_argument("apply: element does not belong to the group");
  Element r = identity(spec);
  for (std::size_t i = 0; i < spec.klein; ++i) {
    r = mul(r, pow(f.image(2 * i), g.klein[i].s));
    r = mul(r, pow(f.image(2 * i + 1), g.klein[i].t));
  }
  for (std::size_t j = 0; j < spec.free; ++j)
    r = mul(r, pow(f.image(2 * spec.klein + j), g.free[j]));
  for (std::size_t j = 0; j < spec.torsion; ++j)
    if (g.tor[j])
      r = mul(r, f.image(2 * spec.klein + spec.free + j));
  return r;
}

// (f o h)(x) = f(h(x))
inline Endomorphism compose(const Endomorphism& f, const Endomorphism& h) {
  if (!(f.spec() == h.spec()))
    throw std::invalid_argument("compose: endomorphisms of different groups");
  std::vector<Element> images;
  for (const auto& x : h.images())
    images.push_back(apply(f, x));
  return Endomorphism::create(f.spec(), std::move(images));
}

// Surjective endomorphisms of G are automorphisms: G is finitely generated
// and residually finite, hence Hopfian.
inline bool is_automorphism(const Endomorphism& f) {
  return Subgroup::from_generators(f.spec(), f.images()) == special_subgroup(f.spec(), Special::Full);
}

struct ClassRep {
  Parity parity;  // parity_class layout (s1, t1, ..., n, e)
  Element rep;
};

struct FixResult {
  Subgroup subgroup;
  std::vector<Element> lattice_generators;  // fixed points with every exponent even
  std::vector<ClassRep> class_reps;         // one per other nonempty class
  std::size_t classes_enumerated = 0;
  std::size_t solved_classes = 0;           // nonempty classes, the even one included

  std::vector<Element> generators() const {
    std::vector<Element> out = lattice_generators;
    for (const auto& c : class_reps)
      out.push_back(c.rep);
    return out;
  }
};

namespace impl {

// constant + coef . y, where y are the half-exponents of one parity class.
struct AffineForm {
  Integer constant;
  IntVector coef;

  static AffineForm constant_of(const Integer& c, std::size_t n) { return {c, IntVector(n)}; }

  AffineForm& operator+=(const AffineForm& o) {
    constant += o.constant;
    for (std::size_t i = 0; i < coef.size(); ++i)
      coef[i] += o.coef[i];
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    constant -= o.constant;
    for (std::size_t i = 0; i < coef.size(); ++i)
      coef[i] -= o.coef[i];
    return *this;
  }
  AffineForm scaled(const Integer& k) const {
    AffineForm r{constant * k, coef};
    for (auto& c : r.coef)
      c *= k;
    return r;
  }
  // Every variable enters as 2*y, so the parity is that of the constant.
  bool odd() const { return is_odd(constant); }
};

struct SymbolicElement {
  std::vector<std::pair<AffineForm, AffineForm>> klein;
  std::vector<AffineForm> free;
  Parity tor;
};

inline SymbolicElement symbolic_identity(const GroupSpec& spec, std::size_t vars) {
  SymbolicElement e;
  e.klein.assign(spec.klein, {AffineForm::constant_of(0, vars), AffineForm::constant_of(0, vars)});
  e.free.assign(spec.free, AffineForm::constant_of(0, vars));
  e.tor.assign(spec.torsion, 0);
  return e;
}

inline void symbolic_mul_into(SymbolicElement& x, const SymbolicElement& y) {
  for (std::size_t i = 0; i < x.klein.size(); ++i) {
    if (x.klein[i].second.odd())
      x.klein[i].first -= y.klein[i].first;
    else
      x.klein[i].first += y.klein[i].first;
    x.klein[i].second += y.klein[i].second;
  }
  for (std::size_t j = 0; j < x.free.size(); ++j)
    x.free[j] += y.free[j];
  for (std::size_t j = 0; j < x.tor.size(); ++j)
    x.tor[j] ^= y.tor[j];
}

// h^X for a concrete h and an exponent form X of known parity.
inline SymbolicElement symbolic_pow(const GroupSpec& spec, const Element& h, const AffineForm& x,
                                    std::size_t vars) {
  SymbolicElement r = symbolic_identity(spec, vars);
  const bool x_odd = x.odd();
  for (std::size_t i = 0; i < spec.klein; ++i) {
    const auto& [s, t] = h.klein[i];
    if (is_odd(t))
      r.klein[i].first = AffineForm::constant_of(x_odd ? s : Integer(0), vars);
    else
      r.klein[i].first = x.scaled(s);
    r.klein[i].second = x.scaled(t);
  }
  for (std::size_t j = 0; j < spec.free; ++j)
    r.free[j] = x.scaled(h.free[j]);
  for (std::size_t j = 0; j < spec.torsion; ++j)
    r.tor[j] = h.tor[j] && x_odd;
  return r;
}

inline Element element_from_exponents(const GroupSpec& spec, const IntVector& x, const Parity& e) {
  Element g = fixlab::identity(spec);
  for (std::size_t i = 0; i < spec.klein; ++i) {
    g.klein[i].s = x[2 * i];
    g.klein[i].t = x[2 * i + 1];
  }
  for (std::size_t j = 0; j < spec.free; ++j)
    g.free[j] = x[2 * spec.klein + j];
  g.tor = e;
  return g;
}

} // namespace impl

// Fixed points, one parity class of all exponents at a time. Inside a class
// every exponent is x = parity + 2y, every sign in f(g) is determined, and
// f(g) = g becomes an integer linear system in y. The all-even class gives a
// lattice of fixed points; any fixed point of another class times that
// lattice gives the rest of the class.
inline FixResult fixed_subgroup(const Endomorphism& f) {
  const GroupSpec& spec = f.spec();
  const std::size_t dim = spec.lattice_dim(), bits = spec.parity_dim();
  if (bits >= 8 * sizeof(std::size_t) - 1)
    throw std::invalid_argument("fixed_subgroup: too many parity classes");
  FixResult out{Subgroup::trivial(spec), {}, {}, 0, 0};
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    ++out.classes_enumerated;
    Parity cls = impl::bits_of(mask, bits);
    Parity e(cls.begin() + dim, cls.end());

    impl::SymbolicElement image = impl::symbolic_identity(spec, dim);
    for (std::size_t k = 0; k < dim; ++k) {
      impl::AffineForm x = impl::AffineForm::constant_of(cls[k], dim);
      x.coef[k] = 2;
      impl::symbolic_mul_into(image, impl::symbolic_pow(spec, f.image(k), x, dim));
    }
    for (std::size_t j = 0; j < spec.torsion; ++j)
      if (e[j])
        impl::symbolic_mul_into(image, impl::symbolic_pow(spec, f.image(dim + j),
                                                          impl::AffineForm::constant_of(1, dim), dim));
    if (image.tor != e)
      continue;

    // image_k(y) = cls_k + 2 y_k for every integer coordinate k.
    IntMatrix a(dim, dim);
    IntVector b(dim);
    auto equate = [&](std::size_t k, const impl::AffineForm& form) {
      for (std::size_t j = 0; j < dim; ++j)
        a(k, j) = form.coef[j];
      a(k, k) -= 2;
      b[k] = Integer(cls[k]) - form.constant;
    };
    for (std::size_t i = 0; i < spec.klein; ++i) {
      equate(2 * i, image.klein[i].first);
      equate(2 * i + 1, image.klein[i].second);
    }
    for (std::size_t j = 0; j < spec.free; ++j)
      equate(2 * spec.klein + j, image.free[j]);
    auto sol = solve_linear(a, b);
    if (!sol)
      continue;
    ++out.solved_classes;

    auto exponents = [&](const IntVector& y) {
      IntVector x(dim);
      for (std::size_t k = 0; k < dim; ++k)
        x[k] = Integer(cls[k]) + 2 * y[k];
      return impl::element_from_exponents(spec, x, e);
    };
    if (mask == 0) {
      for (std::size_t i = 0; i < sol->lattice().rank(); ++i)
        out.lattice_generators.push_back(exponents(sol->lattice().basis_row(i)));
    } else {
      out.class_reps.push_back({cls, exponents(sol->offset())});
    }
  }
  out.subgroup = Subgroup::from_generators(spec, out.generators());
  return out;
}

inline Subgroup fixed_family(std::span<const Endomorphism> fs) {
  if (fs.empty())
    throw std::invalid_argument("fixed_family: the family must be nonempty");
  Subgroup acc = fixed_subgroup(fs[0]).subgroup;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (!(fs[i].spec() == fs[0].spec()))
      throw std::invalid_argument("fixed_family: endomorphisms of different groups");
    acc = intersect(acc, fixed_subgroup(fs[i]).subgroup);
  }
  return acc;
}

namespace impl {

struct Letter {
  std::size_t generator;
  bool inverse;
};

inline std::vector<Letter> letters(const GroupSpec& spec) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < spec.generator_count(); ++i) {
    out.push_back({i, false});
    if (spec.generator(i).kind != GenKind::D)
      out.push_back({i, true});
  }
  return out;
}

inline Element random_word_element(const GroupSpec& spec, const std::vector<Element>& letter_values,
                                   std::size_t max_len, std::mt19937_64& rng, std::size_t min_len = 0) {
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<std::size_t> letter_dist(0, letter_values.size() - 1);
  Element g = fixlab::identity(spec);
  for (std::size_t n = len_dist(rng); n > 0; --n)
    g = mul(g, letter_values[letter_dist(rng)]);
  return g;
}

inline std::vector<Element> letter_values(const GroupSpec& spec) {
  std::vector<Element> out;
  for (const auto& l : letters(spec)) {
    Element g = generator_element(spec, l.generator);
    out.push_back(l.inverse ? inv(g) : g);
  }
  return out;
}

} // namespace impl

// Images drawn as random words of length <= word_len_bound until one table
// passes validation; reproducible for equal seeds.
inline std::optional<Endomorphism> random_endo(const GroupSpec& spec, std::size_t word_len_bound,
                                               std::uint64_t seed, std::size_t budget = 200000) {
  if (word_len_bound == 0)
    throw std::invalid_argument("random_endo: word length bound must be at least 1");
  std::mt19937_64 rng(seed);
  auto values = impl::letter_values(spec);
  if (values.empty())
    return Endomorphism::identity(spec);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::vector<Element> images;
    for (std::size_t i = 0; i < spec.generator_count(); ++i)
      images.push_back(impl::random_word_element(spec, values, word_len_bound, rng));
    if (!Endomorphism::violation(spec, images))
      return Endomorphism::create(spec, std::move(images));
  }
  return std::nullopt;
}

} // namespace fixlab

#endif
