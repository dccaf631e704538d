#ifndef FIXLAB_CERTIFY_HPP_
#define FIXLAB_CERTIFY_HPP_

// Compression and inertia: the classification of Euclidean products,
// a sufficient certificate for compression, bounded witness searches and a
// seeded random sampler.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "group.hpp"
#include "intlat.hpp"
#include "morphism.hpp"
#include "subgroup.hpp"
#include "word.hpp"

namespace fixlab {

enum class EuclideanCase { Euc1, Euc2, Euc3, Euc4, OtherEuclidean };

inline std::string to_string(EuclideanCase c) {
  switch (c) {
  case EuclideanCase::Euc1: return "euc1";
  case EuclideanCase::Euc2: return "euc2";
  case EuclideanCase::Euc3: return "euc3";
  case EuclideanCase::Euc4: return "euc4";
  case EuclideanCase::OtherEuclidean: return "other-euclidean";
  }
  return "?";
}

struct Classification {
  EuclideanCase kind;
  bool compressed_all;
  bool inert_all;
};

inline Classification classify(const GroupSpec& spec) {
  EuclideanCase c = EuclideanCase::OtherEuclidean;
  if (spec.klein == 0)
    c = EuclideanCase::Euc1;
  else if (spec.klein == 1 && spec.free == 0)
    c = EuclideanCase::Euc2;
  else if (spec.klein == 1 && spec.torsion == 1)
    c = EuclideanCase::Euc3;
  else if (spec.torsion == 0)
    c = EuclideanCase::Euc4;
  bool compressed = c == EuclideanCase::Euc1 || c == EuclideanCase::Euc2 || c == EuclideanCase::Euc4;
  bool inert = c == EuclideanCase::Euc1 || c == EuclideanCase::Euc2;
  return {c, compressed, inert};
}

// Minimal number of generators of the image of h in G/G' = Z2^l x Z^(l+p).
// Only defined without torsion factors.
inline std::size_t abelian_image_rank(const Subgroup& h) {
  const GroupSpec& spec = h.spec();
  if (spec.torsion != 0)
    throw std::invalid_argument("abelian_image_rank: the group has torsion factors");
  const std::size_t n = spec.lattice_dim();
  // Image coordinates (s_i, t_i, n_j); the s part is taken mod 2, so the
  // image is (span + R) / R with R = 2Z on every s coordinate.
  std::vector<IntVector> rows;
  for (const auto& g : h.generators()) {
    IntVector v;
    for (const auto& k : g.klein) {
      v.push_back(k.s);
      v.push_back(k.t);
    }
    for (const auto& c : g.free)
      v.push_back(c);
    rows.push_back(std::move(v));
  }
  std::vector<IntVector> r;
  for (std::size_t i = 0; i < spec.klein; ++i) {
    IntVector v(n);
    v[2 * i] = 2;
    r.push_back(v);
  }
  std::vector<IntVector> all = rows;
  all.insert(all.end(), r.begin(), r.end());
  Lattice m = Lattice::span(all, n);
  IntMatrix rel(r.size(), m.rank());
  for (std::size_t i = 0; i < r.size(); ++i) {
    auto c = m.coefficients(r[i]);
    for (std::size_t j = 0; j < m.rank(); ++j)
      rel(i, j) = (*c)[j];
  }
  SnfResult s = snf(rel);
  std::size_t count = s.free_rank;
  for (const auto& d : s.factors)
    if (d != 1)
      ++count;
  return count;
}

struct CompressionCertificate {
  RankCertificate rank;
  std::size_t image_rank = 0;
};

// Sufficient condition for compression in a torsion-free product: h is
// closed under square roots of G' elements and its image in G/G' needs as
// many generators as h. Returns nothing when the test does not apply; that
// says nothing about compression.
inline std::optional<CompressionCertificate> check_compressed_certificate(const Subgroup& h,
                                                                          std::span<const Element> hint = {}) {
  if (h.spec().torsion != 0)
    throw std::invalid_argument("check_compressed_certificate: requires a group without Z2 factors");
  if (!is_sqrt_closed(h))
    return std::nullopt;
  RankCertificate rc = rank(h, hint);
  if (!rc.exact)
    return std::nullopt;
  std::size_t img = abelian_image_rank(h);
  if (img != rc.upper)
    return std::nullopt;
  return CompressionCertificate{std::move(rc), img};
}

enum class WitnessKind { Compression, Inertia };

struct Witness {
  WitnessKind kind;
  Subgroup h;
  Subgroup k;
  std::optional<Subgroup> meet;
  RankCertificate h_rank;  // compression only
  RankCertificate k_rank;
  std::optional<RankCertificate> meet_rank;
  std::vector<Element> words;  // the candidate words that produced k
};

struct SearchStats {
  std::size_t words = 0;
  std::size_t candidates = 0;   // distinct subgroups examined
  std::size_t pruned = 0;       // excluded by a lower bound
  std::size_t inexact = 0;      // skipped for an inexact certificate
};

// Nontrivial values of freely reduced words of length <= max_len, in
// shortlex order (letters by generator index, x before x^-1), keeping the
// first word of each value.
inline std::vector<Element> candidate_words(const GroupSpec& spec, std::size_t max_len) {
  auto letters = impl::letters(spec);
  auto values = impl::letter_values(spec);
  std::vector<Element> out;
  std::unordered_set<std::string> seen;
  struct Partial {
    Element value;
    std::size_t last;
  };
  std::vector<Partial> layer{{identity(spec), letters.size()}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Partial> next;
    for (const auto& p : layer)
      for (std::size_t li = 0; li < letters.size(); ++li) {
        if (p.last < letters.size() && letters[p.last].generator == letters[li].generator &&
            (letters[p.last].inverse != letters[li].inverse ||
             spec.generator(letters[li].generator).kind == GenKind::D))
          continue;
        Element v = mul(p.value, values[li]);
        next.push_back({v, li});
        if (v.is_identity())
          continue;
        if (seen.insert(to_string(spec, v)).second)
          out.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  return out;
}

namespace impl {

// Subsets of {0..n-1} with at most max_size elements, ordered by largest
// element, then size, then colexicographically. Stops when fn returns true.
inline bool for_each_subset(std::size_t n, std::size_t max_size,
                            const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  for (std::size_t top = 0; top < n; ++top)
    for (std::size_t size = 1; size <= max_size && size <= top + 1; ++size) {
      std::size_t k = size - 1;
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i)
        c[i] = i;
      for (;;) {
        pick = c;
        pick.push_back(top);
        if (fn(pick))
          return true;
        std::size_t i = 0;
        while (i < k && c[i] + 1 == (i + 1 < k ? c[i + 1] : top))
          ++i;
        if (i == k)
          break;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j)
          c[j] = j;
      }
    }
  return false;
}

} // namespace impl

// First K = <gens(h), W> of smaller exact rank than h, over sets W of at most
// max_extra_gens candidate words.
inline std::optional<Witness> search_compression_counterexample(const Subgroup& h, std::size_t max_word_len,
                                                                std::size_t max_extra_gens,
                                                                SearchStats* stats = nullptr,
                                                                std::span<const Element> h_hint = {}) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  RankCertificate hr = rank(h, h_hint);
  if (!hr.exact)
    throw std::invalid_argument("search_compression_counterexample: rank of h is not determined");
  // A nontrivial subgroup of G is solvable, so its abelianization is
  // nontrivial; nothing can drop below rank 1.
  if (hr.lower <= 1)
    return std::nullopt;
  const GroupSpec& spec = h.spec();
  auto words = candidate_words(spec, max_word_len);
  st.words = words.size();
  std::unordered_set<std::string> seen{canonical_key(h)};
  std::optional<Witness> found;
  impl::for_each_subset(words.size(), max_extra_gens, [&](const std::vector<std::size_t>& pick) {
    std::vector<Element> gens = hr.generating_set;
    std::vector<Element> w;
    for (auto i : pick) {
      w.push_back(words[i]);
      gens.push_back(words[i]);
    }
    Subgroup k = Subgroup::from_generators(spec, gens);
    if (!seen.insert(canonical_key(k)).second)
      return false;
    ++st.candidates;
    if (abelianization(k).min_generators() >= hr.lower) {
      ++st.pruned;
      return false;
    }
    std::vector<Element> hint = w;
    hint.insert(hint.end(), hr.generating_set.begin(), hr.generating_set.end());
    RankCertificate kr = rank(k, hint);
    if (!kr.exact) {
      ++st.inexact;
      return false;
    }
    if (kr.upper >= hr.lower)
      return false;
    found = Witness{WitnessKind::Compression, h, std::move(k), std::nullopt, hr, std::move(kr), std::nullopt,
                    std::move(w)};
    return true;
  });
  return found;
}

// First K generated by at most max_gens candidate words with
// rank(h n K) > rank(K), both ranks exact.
inline std::optional<Witness> search_inertia_counterexample(const Subgroup& h, std::size_t max_word_len,
                                                            std::size_t max_gens, SearchStats* stats = nullptr) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  const GroupSpec& spec = h.spec();
  auto words = candidate_words(spec, max_word_len);
  st.words = words.size();
  std::unordered_set<std::string> seen;
  std::optional<Witness> found;
  impl::for_each_subset(words.size(), max_gens, [&](const std::vector<std::size_t>& pick) {
    std::vector<Element> w;
    for (auto i : pick)
      w.push_back(words[i]);
    Subgroup k = Subgroup::from_generators(spec, w);
    if (!seen.insert(canonical_key(k)).second)
      return false;
    ++st.candidates;
    Subgroup meet = intersect(h, k);
    std::size_t meet_lower = abelianization(meet).min_generators();
    if (meet_lower <= abelianization(k).min_generators() || meet_lower <= 1) {
      ++st.pruned;
      return false;
    }
    RankCertificate kr = rank(k, w);
    if (!kr.exact) {
      ++st.inexact;
      return false;
    }
    if (meet_lower <= kr.upper) {
      ++st.pruned;
      return false;
    }
    RankCertificate mr = rank(meet);
    if (!mr.exact) {
      ++st.inexact;
      return false;
    }
    found = Witness{WitnessKind::Inertia, h, std::move(k), std::move(meet), RankCertificate{}, std::move(kr),
                    std::move(mr), std::move(w)};
    return true;
  });
  return found;
}

struct InertiaReport {
  GroupSpec spec;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t exact_pairs = 0;
  std::size_t violations = 0;
  std::vector<std::pair<Subgroup, Subgroup>> violating;
};

inline std::string to_string(const InertiaReport& r) {
  std::ostringstream os;
  os << "group " << describe(r.spec) << "\n";
  os << "seed " << r.seed << "\n";
  os << "pairs " << r.trials << "\n";
  os << "exact " << r.exact_pairs << "\n";
  os << "violations " << r.violations << "\n";
  for (const auto& [h, k] : r.violating)
    os << "violation H=" << to_string(h) << " K=" << to_string(k) << "\n";
  return os.str();
}

// A subgroup on 1..gen_bound generators, each a random word of length
// 1..word_len.
inline Subgroup random_subgroup(const GroupSpec& spec, std::size_t gen_bound, std::size_t word_len,
                                std::mt19937_64& rng) {
  auto values = impl::letter_values(spec);
  if (values.empty() || gen_bound == 0 || word_len == 0)
    return Subgroup::trivial(spec);
  std::uniform_int_distribution<std::size_t> count(1, gen_bound);
  std::vector<Element> gens;
  for (std::size_t n = count(rng); n > 0; --n)
    gens.push_back(impl::random_word_element(spec, values, word_len, rng, 1));
  return Subgroup::from_generators(spec, gens);
}

// Checks rank(H n K) <= rank(K) on random pairs (and on `injected` pairs,
// first) whenever both certificates are exact.
inline InertiaReport sample_inertia_property(const GroupSpec& spec, std::size_t trials, std::size_t gen_bound,
                                             std::size_t word_len, std::uint64_t seed,
                                             std::span<const std::pair<Subgroup, Subgroup>> injected = {}) {
  InertiaReport rep;
  rep.spec = spec;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  auto examine = [&](const Subgroup& h, const Subgroup& k) {
    ++rep.trials;
    Subgroup meet = intersect(h, k);
    RankCertificate kr = rank(k);
    RankCertificate mr = rank(meet);
    if (!kr.exact || !mr.exact)
      return;
    ++rep.exact_pairs;
    if (mr.lower > kr.upper) {
      ++rep.violations;
      rep.violating.emplace_back(h, k);
    }
  };
  for (const auto& [h, k] : injected)
    examine(h, k);
  for (std::size_t i = 0; i < trials; ++i) {
    Subgroup h = random_subgroup(spec, gen_bound, word_len, rng);
    Subgroup k = random_subgroup(spec, gen_bound, word_len, rng);
    examine(h, k);
  }
  return rep;
}

} // namespace fixlab

#endif
