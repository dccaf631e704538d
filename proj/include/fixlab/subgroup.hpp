#ifndef FIXLAB_SUBGROUP_HPP_
#define FIXLAB_SUBGROUP_HPP_

// Finitely generated subgroups H <= G.
//
// T = {t_i even, e = 0} is free abelian of rank 2l+p and normal of 2-power
// index, with G/T = Z2^{l+q} (the parity quotient). A subgroup is stored as
//   F    = image of H in Z2^{l+q}, reduced row echelon basis;
//   reps = one element of H over each basis vector of F, reduced mod L;
//   L    = H n T in coordinates (s_i, t_i/2, n_j), canonical HNF.
// These three pieces are canonical, so equal subgroups have equal records.

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"
#include "intlat.hpp"
#include "word.hpp"

namespace fixlab {

class Subgroup {
public:
  static Subgroup from_generators(const GroupSpec& spec, std::span<const Element> gens);

  static Subgroup trivial(const GroupSpec& spec) {
    return Subgroup(spec, {}, {}, {}, Lattice(spec.lattice_dim()));
  }

  // Subgroup of T with the given lattice, which must be invariant under
  // the sign flips of conjugation (true for every lattice used here that
  // comes from a normal subgroup).
  static Subgroup from_lattice(const GroupSpec& spec, Lattice l) {
    return Subgroup(spec, {}, {}, {}, std::move(l));
  }

  const GroupSpec& spec() const { return spec_; }
  const std::vector<Parity>& parity_basis() const { return basis_; }
  const std::vector<std::size_t>& parity_pivots() const { return pivots_; }
  const std::vector<Element>& reps() const { return reps_; }
  const Lattice& lattice() const { return lattice_; }
  std::size_t parity_rank() const { return basis_.size(); }

  std::vector<Element> lattice_generators() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < lattice_.rank(); ++i)
      out.push_back(from_coords(spec_, lattice_.basis_row(i)));
    return out;
  }

  // Canonical generating list: lattice basis elements, then the reps.
  std::vector<Element> generators() const {
    auto out = lattice_generators();
    out.insert(out.end(), reps_.begin(), reps_.end());
    return out;
  }

  // Coordinates of f over the basis of F, if f lies in F.
  std::optional<Parity> parity_coefficients(Parity f) const {
    Parity c(basis_.size(), 0);
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (f[pivots_[k]]) {
        c[k] = 1;
        for (std::size_t j = 0; j < f.size(); ++j)
          f[j] ^= basis_[k][j];
      }
    for (auto bit : f)
      if (bit)
        return std::nullopt;
    return c;
  }

  // Transversal element over sum_k c_k f_k: the ordered product of reps.
  Element coset_rep(const Parity& c) const {
    Element r = identity(spec_);
    for (std::size_t k = 0; k < reps_.size(); ++k)
      if (c[k])
        r = mul(r, reps_[k]);
    return r;
  }

  bool operator==(const Subgroup&) const = default;

private:
  Subgroup(GroupSpec spec, std::vector<Parity> basis, std::vector<std::size_t> pivots,
           std::vector<Element> reps, Lattice l)
    : spec_(spec), basis_(std::move(basis)), pivots_(std::move(pivots)), reps_(std::move(reps)),
      lattice_(std::move(l)) {}

  GroupSpec spec_;
  std::vector<Parity> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Element> reps_;
  Lattice lattice_;
};

namespace impl {

inline Parity bits_of(std::size_t mask, std::size_t n) {
  Parity p(n);
  for (std::size_t k = 0; k < n; ++k)
    p[k] = (mask >> k) & 1u;
  return p;
}

inline void check_same_spec(const GroupSpec& a, const GroupSpec& b) {
  if (!(a == b))
    throw std::invalid_argument("subgroups of different groups");
}

} // namespace impl

inline Subgroup Subgroup::from_generators(const GroupSpec& spec, std::span<const Element> gens) {
  const std::size_t q = spec.quotient_dim(), m = gens.size();
  for (const auto& g : gens)
    if (!shape_matches(spec, g))
      throw std::invalid_argument("from_generators: element does not belong to the group");

  // Row reduction over Z2, remembering which generators sum to each row.
  struct Row {
    Parity v, combo;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < m; ++k) {
    Parity combo(m, 0);
    combo[k] = 1;
    rows.push_back({parity_quotient(gens[k]), std::move(combo)});
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < q && r < rows.size(); ++col) {
    std::size_t i = r;
    while (i < rows.size() && !rows[i].v[col])
      ++i;
    if (i == rows.size())
      continue;
    std::swap(rows[r], rows[i]);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != r && rows[j].v[col]) {
        for (std::size_t x = 0; x < q; ++x)
          rows[j].v[x] ^= rows[r].v[x];
        for (std::size_t x = 0; x < m; ++x)
          rows[j].combo[x] ^= rows[r].combo[x];
      }
    pivots.push_back(col);
    ++r;
  }
  std::vector<Parity> basis;
  std::vector<Element> reps;
  for (std::size_t k = 0; k < r; ++k) {
    basis.push_back(rows[k].v);
    Element rep = identity(spec);
    for (std::size_t x = 0; x < m; ++x)
      if (rows[k].combo[x])
        rep = mul(rep, gens[x]);
    reps.push_back(std::move(rep));
  }
  Subgroup draft(spec, basis, pivots, reps, Lattice(spec.lattice_dim()));

  // Schreier generators R(c) g R(c')^-1 generate H n T.
  std::vector<IntVector> schreier;
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    Element rc = draft.coset_rep(impl::bits_of(mask, r));
    for (const auto& g : gens) {
      Element u = mul(rc, g);
      auto c = draft.parity_coefficients(parity_quotient(u));
      Element s = mul(u, inv(draft.coset_rep(*c)));
      IntVector v = coords(s);
      if (!is_zero(v))
        schreier.push_back(std::move(v));
    }
  }
  Lattice l = Lattice::span(schreier, spec.lattice_dim());
  for (std::size_t k = 0; k < r; ++k)
    reps[k] = from_coords(spec, l.reduce(coords(reps[k])), parity_quotient(reps[k]));
  return Subgroup(spec, std::move(basis), std::move(pivots), std::move(reps), std::move(l));
}

inline Subgroup from_generators(const GroupSpec& spec, std::span<const Element> gens) {
  return Subgroup::from_generators(spec, gens);
}

inline Subgroup from_generators(const GroupSpec& spec, std::initializer_list<Element> gens) {
  return Subgroup::from_generators(spec, std::span<const Element>(gens.begin(), gens.size()));
}

// Parses "w1; w2; w3".
inline Subgroup parse_subgroup(const GroupSpec& spec, std::string_view text) {
  std::vector<Element> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();
    auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string_view::npos)
      gens.push_back(parse_and_normalize(spec, piece));
    start = end + 1;
  }
  return Subgroup::from_generators(spec, gens);
}

inline bool membership(const Element& g, const Subgroup& h) {
  if (!shape_matches(h.spec(), g))
    throw std::invalid_argument("membership: element does not belong to the group");
  auto c = h.parity_coefficients(parity_quotient(g));
  if (!c)
    return false;
  Element w = mul(inv(h.coset_rep(*c)), g);
  return h.lattice().contains(coords(w));
}

inline bool containment(const Subgroup& h, const Subgroup& k) {
  impl::check_same_spec(h.spec(), k.spec());
  for (const auto& g : h.generators())
    if (!membership(g, k))
      return false;
  return true;
}

inline bool equals(const Subgroup& h, const Subgroup& k) { return h == k; }

inline Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  impl::check_same_spec(h.spec(), k.spec());
  const GroupSpec& spec = h.spec();
  const std::size_t dim = spec.lattice_dim();
  Lattice meet = lattice_meet(h.lattice(), k.lattice());
  std::vector<Element> gens = Subgroup::from_lattice(spec, meet).lattice_generators();
  const std::size_t d = h.parity_rank();
  for (std::size_t mask = 1; mask < (std::size_t{1} << d); ++mask) {
    Parity ch = impl::bits_of(mask, d);
    Parity f(spec.quotient_dim(), 0);
    for (std::size_t i = 0; i < d; ++i)
      if (ch[i])
        for (std::size_t j = 0; j < f.size(); ++j)
          f[j] ^= h.parity_basis()[i][j];
    auto ck = k.parity_coefficients(f);
    if (!ck)
      continue;
    Element rh = h.coset_rep(ch), rk = k.coset_rep(*ck);
    // rh x = rk y with x in L_h, y in L_k  <=>  y in (w + L_h) n L_k
    IntVector w = coords(mul(inv(rk), rh));
    auto sol = affine_meet(AffineLattice(w, h.lattice()), AffineLattice(IntVector(dim), k.lattice()));
    if (sol)
      gens.push_back(mul(rk, from_coords(spec, sol->offset())));
  }
  return Subgroup::from_generators(spec, gens);
}

// [k : h] for h <= k; std::nullopt stands for infinite index.
inline std::optional<Integer> index(const Subgroup& h, const Subgroup& k) {
  if (!containment(h, k))
    throw std::invalid_argument("index: first subgroup is not contained in the second");
  if (h.lattice().rank() != k.lattice().rank())
    return std::nullopt;
  Integer finite = Integer(1) << (k.parity_rank() - h.parity_rank());
  return finite * (h.lattice().pivot_product() / k.lattice().pivot_product());
}

inline Subgroup commutator_subgroup(const Subgroup& h) {
  const GroupSpec& spec = h.spec();
  const std::size_t dim = spec.lattice_dim();
  auto gens = h.generators();
  std::vector<IntVector> vecs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      IntVector v = coords(commutator(gens[i], gens[j]));
      if (!is_zero(v))
        vecs.push_back(std::move(v));
    }
  Lattice l = Lattice::span(vecs, dim);
  // Normal closure: conjugation by the reps flips signs.
  for (bool grown = true; grown;) {
    grown = false;
    auto rows = l.basis_rows();
    std::vector<IntVector> more = rows;
    for (const auto& f : h.parity_basis())
      for (const auto& row : rows)
        more.push_back(conjugate_coords(row, f, spec.klein));
    Lattice next = Lattice::span(more, dim);
    if (!(next == l)) {
      l = std::move(next);
      grown = true;
    }
  }
  return Subgroup::from_lattice(spec, std::move(l));
}

struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  std::size_t min_generators() const { return free_rank + torsion.size(); }
  bool operator==(const Abelianization&) const = default;
};

inline std::string to_string(const Abelianization& ab) {
  std::string out;
  if (ab.free_rank > 0)
    out = ab.free_rank == 1 ? "Z" : "Z^" + std::to_string(ab.free_rank);
  for (const auto& t : ab.torsion)
    out += (out.empty() ? "Z_" : " x Z_") + t.str();
  return out.empty() ? "1" : out;
}

// H/H' presented on (L basis, reps) with relations H' and rep^2 in L.
inline Abelianization abelianization(const Subgroup& h) {
  const Lattice& l = h.lattice();
  const std::size_t r = l.rank(), d = h.parity_rank();
  Subgroup hc = commutator_subgroup(h);
  const Lattice& lc = hc.lattice();
  IntMatrix rel(lc.rank() + d, r + d);
  for (std::size_t i = 0; i < lc.rank(); ++i) {
    auto c = l.coefficients(lc.basis_row(i));
    if (!c)
      throw std::logic_error("abelianization: commutator lattice escapes H n T");
    for (std::size_t j = 0; j < r; ++j)
      rel(i, j) = (*c)[j];
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Element& rep = h.reps()[k];
    auto c = l.coefficients(coords(mul(rep, rep)));
    if (!c)
      throw std::logic_error("abelianization: square of a rep escapes H n T");
    for (std::size_t j = 0; j < r; ++j)
      rel(lc.rank() + k, j) = -(*c)[j];
    rel(lc.rank() + k, r + k) = 2;
  }
  SnfResult s = snf(rel);
  Abelianization ab;
  ab.free_rank = s.free_rank;
  for (auto& f : s.factors)
    if (f > 1)
      ab.torsion.push_back(f);
  return ab;
}

enum class Special { Full, Trivial, N, Gprime, T, Torsion };

inline Subgroup special_subgroup(const GroupSpec& spec, Special which) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < spec.generator_count(); ++i) {
    Element g = generator_element(spec, i);
    GenKind kind = spec.generator(i).kind;
    switch (which) {
    case Special::Full: gens.push_back(g); break;
    case Special::Trivial: break;
    case Special::N:
      if (kind == GenKind::A) gens.push_back(g);
      break;
    case Special::Gprime:
      if (kind == GenKind::A) gens.push_back(pow(g, 2));
      break;
    case Special::T:
      if (kind == GenKind::A || kind == GenKind::C) gens.push_back(g);
      if (kind == GenKind::B) gens.push_back(pow(g, 2));
      break;
    case Special::Torsion:
      if (kind == GenKind::D) gens.push_back(g);
      break;
    }
  }
  return Subgroup::from_generators(spec, gens);
}

// Generators of H n N followed by lifts of a basis of the image of H in
// G/N = Z^l x Z^p x Z2^q.
inline std::vector<Element> extension_generators(const Subgroup& h) {
  const GroupSpec& spec = h.spec();
  std::vector<Element> out = intersect(h, special_subgroup(spec, Special::N)).lattice_generators();
  auto gens = h.generators();
  const std::size_t m = gens.size(), cols = spec.klein + spec.free + spec.torsion;
  IntMatrix img(m + spec.torsion, cols);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < spec.klein; ++i)
      img(k, i) = gens[k].klein[i].t;
    for (std::size_t j = 0; j < spec.free; ++j)
      img(k, spec.klein + j) = gens[k].free[j];
    for (std::size_t j = 0; j < spec.torsion; ++j)
      img(k, spec.klein + spec.free + j) = gens[k].tor[j];
  }
  for (std::size_t j = 0; j < spec.torsion; ++j)
    img(m + j, spec.klein + spec.free + j) = 2;
  HnfResult hr = hnf(img);
  for (std::size_t i = 0; i < hr.lattice.rank(); ++i) {
    bool in_relations = true;
    for (std::size_t c = 0; c < cols; ++c) {
      const Integer& x = hr.lattice.basis()(i, c);
      if (c < spec.klein + spec.free ? x != 0 : is_odd(x))
        in_relations = false;
    }
    if (in_relations)
      continue;
    Element lift = identity(spec);
    for (std::size_t k = 0; k < m; ++k)
      if (hr.transform(i, k) != 0)
        lift = mul(lift, pow(gens[k], hr.transform(i, k)));
    out.push_back(std::move(lift));
  }
  return out;
}

struct RankCertificate {
  std::size_t lower = 0;  // minimal generator count of the abelianization
  std::size_t upper = 0;  // size of generating_set
  bool exact = false;
  std::vector<Element> generating_set;
  Abelianization abelianization;
};

struct RankOptions {
  // Subset sizes tried beyond the lower bound.
  std::size_t extra_sizes = 1;
  // Cap on generation checks during the subset search.
  std::size_t max_checks = 20000;
};

namespace impl {

inline void append_unique(std::vector<Element>& pool, const Element& g) {
  if (g.is_identity())
    return;
  if (std::find(pool.begin(), pool.end(), g) == pool.end())
    pool.push_back(g);
}

// First subset (in lexicographic index order) of `pool` with `size`
// elements generating h; `checks` counts generation tests against `budget`.
inline std::optional<std::vector<Element>> generating_subset(const Subgroup& h, const std::vector<Element>& pool,
                                                             std::size_t size, std::size_t& checks,
                                                             std::size_t budget) {
  const std::size_t n = pool.size();
  if (size > n)
    return std::nullopt;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i)
    idx[i] = i;
  std::vector<Element> pick(size);
  for (;;) {
    if (checks++ >= budget)
      return std::nullopt;
    for (std::size_t i = 0; i < size; ++i)
      pick[i] = pool[idx[i]];
    if (Subgroup::from_generators(h.spec(), pick) == h)
      return pick;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1)
      --i;
    if (i == 0)
      return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace impl

// Rank bounds: lower from the abelianization, upper from the smallest
// generating set found. Elements of `hint` are tried first, in order.
inline RankCertificate rank(const Subgroup& h, std::span<const Element> hint = {}, RankOptions opt = {}) {
  RankCertificate cert;
  cert.abelianization = abelianization(h);
  cert.lower = cert.abelianization.min_generators();

  std::vector<Element> best = h.generators();
  std::size_t checks = 0;
  auto settle = [&] {
    cert.generating_set = best;
    cert.upper = best.size();
    cert.exact = cert.upper == cert.lower;
    return cert;
  };

  std::vector<Element> hinted;
  for (const auto& g : hint)
    impl::append_unique(hinted, g);
  bool hint_generates = !hint.empty() && Subgroup::from_generators(h.spec(), hinted) == h;
  if (hint_generates) {
    if (hinted.size() <= best.size())
      best = hinted;
    for (std::size_t k = cert.lower; k < hinted.size() && k <= best.size() && k <= cert.lower + opt.extra_sizes; ++k)
      if (auto s = impl::generating_subset(h, hinted, k, checks, opt.max_checks)) {
        best = std::move(*s);
        break;
      }
  }
  if (best.size() <= cert.lower)
    return settle();

  auto ext = extension_generators(h);
  if (ext.size() < best.size())
    best = ext;
  if (best.size() <= cert.lower)
    return settle();

  std::vector<Element> pool = hinted;
  auto stored = h.generators();
  for (const auto& g : stored)
    impl::append_unique(pool, g);
  for (const auto& g : ext)
    impl::append_unique(pool, g);
  for (std::size_t i = 0; i < stored.size(); ++i)
    for (std::size_t j = i + 1; j < stored.size(); ++j)
      impl::append_unique(pool, mul(stored[i], stored[j]));
  for (std::size_t k = cert.lower; k < best.size() && k <= cert.lower + opt.extra_sizes; ++k)
    if (auto s = impl::generating_subset(h, pool, k, checks, opt.max_checks)) {
      best = std::move(*s);
      break;
    }
  return settle();
}

// Splitting data for subgroups of NS2 x Z2^q: H is pi(H) x (H n Z2^q).
enum class ProjectionType { Trivial, Cyclic, FreeAbelian2, KleinBottle };

inline std::string to_string(ProjectionType t) {
  switch (t) {
  case ProjectionType::Trivial: return "1";
  case ProjectionType::Cyclic: return "Z";
  case ProjectionType::FreeAbelian2: return "Z^2";
  case ProjectionType::KleinBottle: return "NS2";
  }
  return "?";
}

struct Euc2Decomposition {
  ProjectionType type = ProjectionType::Trivial;
  std::vector<Element> projection_generators;  // u (, v) presenting pi(H)
  std::vector<Element> splitting;              // alpha(u) (, alpha(v)) in H
  Subgroup torsion_part;                       // H n Z2^q
};

inline Euc2Decomposition decompose_euc2(const Subgroup& h) {
  const GroupSpec& spec = h.spec();
  if (spec.klein != 1 || spec.free != 0)
    throw std::invalid_argument("decompose_euc2: the group must be NS2 x Z2^q");
  if (spec.torsion > 20)
    throw std::invalid_argument("decompose_euc2: too many Z2 factors to enumerate decorations");

  auto strip = [&](Element g) {
    std::fill(g.tor.begin(), g.tor.end(), 0);
    return g;
  };
  std::vector<Element> projected;
  for (const auto& g : h.generators())
    projected.push_back(strip(g));
  Subgroup image = Subgroup::from_generators(spec, projected);
  const Lattice& l = image.lattice();

  Euc2Decomposition out{ProjectionType::Trivial, {}, {}, intersect(h, special_subgroup(spec, Special::Torsion))};
  if (image.parity_rank() == 0) {
    out.type = l.rank() == 0 ? ProjectionType::Trivial
             : l.rank() == 1 ? ProjectionType::Cyclic
                             : ProjectionType::FreeAbelian2;
    out.projection_generators = image.lattice_generators();
  } else if (l.rank() == 1) {
    // pi(H) = <u> with u of odd t; pi(H) n T = <u^2> = span{(0, m)}.
    out.type = ProjectionType::Cyclic;
    const Element& rep = image.reps()[0];
    Integer m = l.basis()(0, 1);
    Integer j = (m - rep.klein[0].t) / 2;
    out.projection_generators = {mul(rep, from_coords(spec, IntVector{0, j}))};
  } else {
    out.type = ProjectionType::KleinBottle;
    Lattice axis = lattice_meet(l, Lattice::span(std::vector<IntVector>{{1, 0}}, 2));
    Element u = from_coords(spec, axis.basis_row(0));
    const Element& rep = image.reps()[0];
    std::vector<std::pair<int, int>> steps;
    for (int i = -2; i <= 2; ++i)
      for (int k = -2; k <= 2; ++k)
        steps.emplace_back(i, k);
    std::stable_sort(steps.begin(), steps.end(), [](auto x, auto y) {
      return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
    });
    std::optional<Element> v;
    for (auto [i, k] : steps) {
      IntVector x(2);
      for (std::size_t c = 0; c < 2; ++c)
        x[c] = i * l.basis()(0, c) + k * l.basis()(1, c);
      Element cand = mul(rep, from_coords(spec, x));
      if (from_generators(spec, {u, cand}) == image) {
        v = cand;
        break;
      }
    }
    if (!v)
      throw std::logic_error("decompose_euc2: no Klein bottle presentation found");
    out.projection_generators = {u, *v};
  }
  if (Subgroup::from_generators(spec, out.projection_generators) != image)
    throw std::logic_error("decompose_euc2: presentation does not generate the projection");

  // alpha: lift each presentation generator by a torsion decoration.
  for (const auto& u : out.projection_generators) {
    std::optional<Element> lift;
    for (std::size_t mask = 0; mask < (std::size_t{1} << spec.torsion) && !lift; ++mask) {
      Element cand = u;
      for (std::size_t j = 0; j < spec.torsion; ++j)
        cand.tor[j] = (mask >> j) & 1u;
      if (membership(cand, h))
        lift = cand;
    }
    if (!lift)
      throw std::logic_error("decompose_euc2: generator of the projection has no preimage");
    out.splitting.push_back(*lift);
  }
  const auto& a = out.splitting;
  bool relations_hold = true;
  if (out.type == ProjectionType::FreeAbelian2)
    relations_hold = commutator(a[0], a[1]).is_identity();
  else if (out.type == ProjectionType::KleinBottle)
    relations_hold = mul(mul(a[1], a[0]), mul(inv(a[1]), a[0])).is_identity();
  std::vector<Element> all = a;
  for (const auto& g : out.torsion_part.generators())
    all.push_back(g);
  if (!relations_hold || Subgroup::from_generators(spec, all) != h)
    throw std::logic_error("decompose_euc2: splitting does not reproduce H");
  return out;
}

// Whether sqrt(g) lies in H for every g in H n G'.
inline bool is_sqrt_closed(const Subgroup& h) {
  Subgroup meet = intersect(h, special_subgroup(h.spec(), Special::Gprime));
  for (const auto& g : meet.lattice_generators())
    if (!membership(sqrt_in_N(g), h))
      return false;
  return true;
}

inline std::string canonical_key(const Subgroup& h) {
  std::string key;
  for (const auto& f : h.parity_basis()) {
    for (auto b : f)
      key += b ? '1' : '0';
    key += '|';
  }
  key += '#';
  for (const auto& r : h.reps()) {
    for (const auto& x : coords(r))
      key += x.str() + ',';
    key += '|';
  }
  key += '#';
  const auto& b = h.lattice().basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j)
      key += b(i, j).str() + ',';
    key += '|';
  }
  return key;
}

inline std::string to_string(const Subgroup& h) {
  auto gens = h.generators();
  return gens.empty() ? "<1>" : "<" + to_string(h.spec(), gens) + ">";
}

} // namespace fixlab

#endif
