#ifndef FIXLAB_SUITE_HPP_
#define FIXLAB_SUITE_HPP_

// Reproduction report for the worked examples and the randomized batches.
// Output: one `CHECK <id> <PASS|FAIL> expected=<...> actual=<...>` line per
// check and a final `TOTAL <pass>/<count>`.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "certify.hpp"
#include "group.hpp"
#include "morphism.hpp"
#include "subgroup.hpp"
#include "testing/oracles.hpp"
#include "word.hpp"

namespace fixlab {

enum class Scale { Quick, Full };

struct Check {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct CheckGroup {
  int number = 0;  // 0 is the arithmetic sanity group
  std::string title;
  bool randomized = false;
  std::function<std::vector<Check>()> run;
};

namespace impl {

inline Check check_eq(std::string id, std::string expected, std::string actual) {
  bool ok = expected == actual;
  return {std::move(id), ok, std::move(expected), std::move(actual)};
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string rank_text(const RankCertificate& r) {
  if (r.exact)
    return std::to_string(r.upper) + " exact";
  return std::to_string(r.lower) + ".." + std::to_string(r.upper);
}

inline Endomorphism endo_from_words(const GroupSpec& spec, std::initializer_list<const char*> words) {
  std::vector<Element> images;
  for (const char* w : words)
    images.push_back(parse_and_normalize(spec, w));
  return Endomorphism::create(spec, std::move(images));
}

inline Subgroup sub(const GroupSpec& spec, const char* text) { return parse_subgroup(spec, text); }

inline std::vector<Check> sanity_checks() {
  GroupSpec spec = parse_group_spec("NS2");
  return {check_eq("arith.ba", "a1^-1 b1", to_string(spec, parse_and_normalize(spec, "b1 a1")))};
}

inline std::vector<Check> euc3_checks() {
  std::vector<Check> out;
  GroupSpec spec = parse_group_spec("NS2 x Z^2 x Z2");
  auto phi_or = Endomorphism::violation(spec, std::vector<Element>{
      parse_and_normalize(spec, "a1 d1"), parse_and_normalize(spec, "b1 a1"), parse_and_normalize(spec, "c1 d1"),
      parse_and_normalize(spec, "c2^-1"), parse_and_normalize(spec, "d1")});
  out.push_back(check_eq("euc3.map-valid", "valid", phi_or ? phi_or->what() : "valid"));
  if (phi_or)
    return out;
  Endomorphism phi = endo_from_words(spec, {"a1 d1", "b1 a1", "c1 d1", "c2^-1", "d1"});
  Endomorphism psi = endo_from_words(spec, {"a1 d1", "b1 a1^-1 d1", "c1 d1", "c2^-1", "d1"});
  Endomorphism id = Endomorphism::identity(spec);
  out.push_back(check_eq("euc3.inverse", "true", yes_no(compose(phi, psi) == id && compose(psi, phi) == id)));
  out.push_back(check_eq("euc3.check-auto", "true", yes_no(is_automorphism(phi))));
  FixResult fx = fixed_subgroup(phi);
  Subgroup expected = sub(spec, "a1^2; b1^2; a1 c1; d1");
  out.push_back(check_eq("euc3.fix", to_string(expected), to_string(fx.subgroup)));
  auto gens = fx.generators();
  RankCertificate rc = rank(fx.subgroup, gens);
  out.push_back(check_eq("euc3.fix-rank", "4 exact", rank_text(rc)));
  out.push_back(check_eq("euc3.fix-abelianization", "Z^3 x Z_2", to_string(rc.abelianization)));
  Element ac = parse_and_normalize(spec, "a1 c1"), b = parse_and_normalize(spec, "b1");
  out.push_back(check_eq("euc3.a2-commutator", "a1^2", to_string(spec, commutator(ac, b))));
  auto w = search_compression_counterexample(fx.subgroup, 3, 2, nullptr, gens);
  Subgroup k_expected = sub(spec, "a1 c1; b1; d1");
  out.push_back(check_eq("euc3.search-compression", to_string(k_expected) + " rank 3 exact",
                         w ? to_string(w->k) + " rank " + rank_text(w->k_rank) : "none"));
  return out;
}

inline std::vector<Check> phi1_checks() {
  std::vector<Check> out;
  GroupSpec spec = parse_group_spec("NS2 x Z");
  Endomorphism phi = endo_from_words(spec, {"a1", "b1 a1", "c1"});
  out.push_back(check_eq("phi1.check-auto", "true", yes_no(is_automorphism(phi))));
  FixResult fx = fixed_subgroup(phi);
  out.push_back(check_eq("phi1.fix", to_string(sub(spec, "a1; b1^2; c1")), to_string(fx.subgroup)));
  out.push_back(check_eq("phi1.fix-rank", "3 exact", rank_text(rank(fx.subgroup, fx.generators()))));
  Subgroup r = sub(spec, "a1 c1; b1");
  Subgroup meet = intersect(fx.subgroup, r);
  out.push_back(check_eq("phi1.meet", to_string(sub(spec, "a1 c1; a1^2; b1^2")), to_string(meet)));
  out.push_back(check_eq("phi1.meet-rank", "3 exact", rank_text(rank(meet))));
  out.push_back(check_eq("phi1.R-rank", "2 exact", rank_text(rank(r, parse_subgroup(spec, "a1 c1; b1").generators()))));
  auto idx = index(meet, fx.subgroup);
  out.push_back(check_eq("phi1.index", "2", idx ? idx->str() : "infinite"));
  out.push_back(check_eq("phi1.fix-is-T", "true", yes_no(fx.subgroup == special_subgroup(spec, Special::T))));
  std::vector<std::pair<Subgroup, Subgroup>> injected{{fx.subgroup, r}};
  InertiaReport rep = sample_inertia_property(spec, 0, 3, 4, 1, injected);
  out.push_back(check_eq("phi1.injected-violation", "1", std::to_string(rep.violations)));
  return out;
}

inline std::vector<Check> phi2_checks() {
  std::vector<Check> out;
  GroupSpec spec = parse_group_spec("NS2^2");
  Endomorphism phi = endo_from_words(spec, {"a1", "b1 a1", "a2", "b2^-1"});
  out.push_back(check_eq("phi2.check-auto", "true", yes_no(is_automorphism(phi))));
  FixResult fx = fixed_subgroup(phi);
  out.push_back(check_eq("phi2.fix", to_string(sub(spec, "a1; b1^2; a2")), to_string(fx.subgroup)));
  out.push_back(check_eq("phi2.fix-rank", "3 exact", rank_text(rank(fx.subgroup, fx.generators()))));
  out.push_back(check_eq("phi2.sqrt-closed", "true", yes_no(is_sqrt_closed(fx.subgroup))));
  Subgroup k = sub(spec, "a1 a2; b1");
  Subgroup meet = intersect(fx.subgroup, k);
  out.push_back(check_eq("phi2.named-witness", "3 exact > 2 exact",
                         rank_text(rank(meet)) + " > " + rank_text(rank(k, k.generators()))));
  auto w = search_inertia_counterexample(fx.subgroup, 3, 2);
  std::string actual = "none";
  if (w) {
    // Recompute everything from scratch.
    Subgroup k2 = Subgroup::from_generators(spec, w->words);
    Subgroup m2 = intersect(fx.subgroup, k2);
    RankCertificate kr = rank(k2, w->words), mr = rank(m2);
    bool ok = kr.exact && mr.exact && mr.lower > kr.upper && k2 == w->k && m2 == *w->meet;
    actual = ok ? "witness" : "witness fails revalidation";
  }
  out.push_back(check_eq("phi2.search-inertia", "witness", actual));
  return out;
}

inline std::vector<Check> overgroup_checks() {
  std::vector<Check> out;
  GroupSpec spec = parse_group_spec("NS2 x Z");
  Subgroup r = sub(spec, "a1 c1; b1");
  out.push_back(check_eq("R.a2-member", "true", yes_no(membership(parse_and_normalize(spec, "a1^2"), r))));
  out.push_back(check_eq("R.c2-member", "true", yes_no(membership(parse_and_normalize(spec, "c1^2"), r))));
  Subgroup h = sub(spec, "a1^2; b1^2; c1^2");
  out.push_back(check_eq("R.H-rank", "3 exact", rank_text(rank(h))));
  out.push_back(check_eq("R.H-certificate", "none", check_compressed_certificate(h) ? "certified" : "none"));
  auto w = search_compression_counterexample(h, 3, 2);
  out.push_back(check_eq("R.search-compression", to_string(r) + " rank 2 exact",
                         w ? to_string(w->k) + " rank " + rank_text(w->k_rank) : "none"));
  return out;
}

inline std::vector<Check> inertia_batch_checks() {
  std::vector<Check> out;
  for (std::size_t q = 0; q <= 3; ++q) {
    GroupSpec spec{1, 0, q};
    InertiaReport rep = sample_inertia_property(spec, 500, 3, 4, 1000 + q);
    std::string id = "inert-batch.q" + std::to_string(q);
    out.push_back(check_eq(id + ".violations", "0", std::to_string(rep.violations)));
    bool enough = rep.exact_pairs * 10 >= rep.trials * 9;
    out.push_back({id + ".exact", enough, ">=90%",
                   std::to_string(rep.exact_pairs) + "/" + std::to_string(rep.trials)});
  }
  return out;
}

// Every fixed subgroup must be sqrt-closed, certified and free of
// compression witnesses. Uniformly drawn maps mostly have trivial fixed
// subgroups, so a second sample keeps only fixed subgroups of rank >= 2.
inline std::vector<Check> compression_batch_checks() {
  std::vector<Check> out;
  const GroupSpec specs[] = {{1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}};
  for (const auto& spec : specs) {
    std::string id = "fix-batch." + describe(spec);
    for (auto& ch : id)
      if (ch == ' ')
        ch = '_';
    std::unordered_map<std::string, bool> searched;
    for (int phase = 0; phase < 2; ++phase) {
      const std::uint64_t seed0 = phase == 0 ? 5000 : 70000;
      const std::size_t draw_cap = phase == 0 ? 200 : 100000;
      std::size_t kept = 0, closed = 0, certified = 0, clean = 0, draws = 0;
      std::string first_bad;
      for (std::uint64_t i = 0; kept < 200 && draws < draw_cap; ++i) {
        auto f = random_endo(spec, 3, seed0 + i);
        ++draws;
        if (!f)
          continue;
        FixResult fx = fixed_subgroup(*f);
        auto gens = fx.generators();
        if (phase == 1 && rank(fx.subgroup, gens).lower < 2)
          continue;
        ++kept;
        bool c = is_sqrt_closed(fx.subgroup);
        auto cert = check_compressed_certificate(fx.subgroup, gens);
        closed += c;
        certified += cert.has_value();
        bool none = false;
        if (cert) {
          auto key = canonical_key(fx.subgroup);
          auto it = searched.find(key);
          if (it == searched.end())
            it = searched
                     .emplace(key, !search_compression_counterexample(fx.subgroup, 3, 2, nullptr,
                                                                      cert->rank.generating_set))
                     .first;
          none = it->second;
        }
        clean += none;
        if ((!c || !cert || !none) && first_bad.empty())
          first_bad = " first failure seed " + std::to_string(seed0 + i);
      }
      std::string pid = id + (phase == 0 ? ".uniform" : ".rank2");
      auto frac = [&](std::size_t n) { return std::to_string(n) + "/" + std::to_string(kept); };
      out.push_back(check_eq(pid + ".drawn", "200", std::to_string(kept)));
      out.push_back(check_eq(pid + ".sqrt-closed", "200/200", frac(closed)));
      out.push_back(check_eq(pid + ".certified", "200/200", frac(certified) + first_bad));
      out.push_back(check_eq(pid + ".no-witness", "200/200", frac(clean)));
    }
  }
  return out;
}

inline std::vector<GroupSpec> small_specs(std::size_t max_parity_dim) {
  std::vector<GroupSpec> out;
  for (std::size_t l = 0; 2 * l <= max_parity_dim; ++l)
    for (std::size_t p = 0; 2 * l + p <= max_parity_dim; ++p)
      for (std::size_t q = 0; 2 * l + p + q <= max_parity_dim; ++q)
        if (2 * l + p + q > 0)
          out.push_back({l, p, q});
  return out;
}

inline std::vector<Check> oracle_checks() {
  auto specs = small_specs(4);
  std::size_t discrepancies = 0, endos = 0, elements = 0;
  std::string first;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const GroupSpec& spec = specs[i % specs.size()];
    auto f = random_endo(spec, 3, 9000 + i);
    if (!f)
      continue;
    ++endos;
    Subgroup fix = fixed_subgroup(*f).subgroup;
    testing::for_each_in_box(spec.lattice_dim(), -3, 3, [&](const IntVector& v) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << spec.torsion); ++mask) {
        Element g = element_from_exponents(spec, v, bits_of(mask, spec.torsion));
        ++elements;
        if ((apply(*f, g) == g) != membership(g, fix) && discrepancies++ == 0)
          first = " first at " + to_string(spec, g) + " seed " + std::to_string(9000 + i);
      }
    });
  }
  return {check_eq("oracle.endos", "50", std::to_string(endos)),
          check_eq("oracle.discrepancies", "0", std::to_string(discrepancies) + first),
          {"oracle.elements", elements > 0, ">0", std::to_string(elements)}};
}

inline std::vector<Check> classification_checks() {
  std::size_t bad = 0, total = 0;
  std::string first;
  for (std::size_t l = 0; l <= 3; ++l)
    for (std::size_t p = 0; p <= 3; ++p)
      for (std::size_t q = 0; q <= 3; ++q) {
        ++total;
        Classification c = classify({l, p, q});
        bool comp = l == 0 || (l == 1 && p == 0) || q == 0;
        bool inert = l == 0 || (l == 1 && p == 0);
        if (c.compressed_all != comp || c.inert_all != inert) {
          if (bad++ == 0)
            first = " first at (" + std::to_string(l) + "," + std::to_string(p) + "," + std::to_string(q) + ")";
        }
      }
  return {check_eq("classify.table", "0/" + std::to_string(total) + " mismatches",
                   std::to_string(bad) + "/" + std::to_string(total) + " mismatches" + first),
          check_eq("classify.euc3", "euc3", to_string(classify({1, 1, 1}).kind)),
          check_eq("classify.euc4", "euc4", to_string(classify({2, 0, 0}).kind))};
}

inline std::vector<Check> kernel_checks() {
  auto lat = testing::lattice_properties(77, 1000);
  auto grp = testing::group_properties(78, 1000);
  return {check_eq("kernel.lattice", "1000 cases, 0 failures",
                   std::to_string(lat.cases) + " cases, " + std::to_string(lat.failures) + " failures" +
                       (lat.failures ? " (" + lat.first_failure + ")" : "")),
          check_eq("kernel.group", "1000 cases, 0 failures",
                   std::to_string(grp.cases) + " cases, " + std::to_string(grp.failures) + " failures" +
                       (grp.failures ? " (" + grp.first_failure + ")" : ""))};
}

} // namespace impl

inline std::vector<CheckGroup> check_groups() {
  return {
      {0, "normal form sanity", false, impl::sanity_checks},
      {1, "euc3 automorphism: fixed subgroup not compressed", false, impl::euc3_checks},
      {2, "NS2 x Z automorphism: fixed subgroup not inert", false, impl::phi1_checks},
      {3, "NS2^2 automorphism: fixed subgroup not inert", false, impl::phi2_checks},
      {4, "<a^2, b^2, c^2> is not compressed in NS2 x Z", false, impl::overgroup_checks},
      {5, "inertia in NS2 x Z2^q on random pairs", true, impl::inertia_batch_checks},
      {6, "fixed subgroups of random endomorphisms are compressed", true, impl::compression_batch_checks},
      {7, "fixed subgroup against exhaustive box", true, impl::oracle_checks},
      {8, "classification table", false, impl::classification_checks},
      {9, "lattice and group kernel properties", true, impl::kernel_checks},
  };
}

struct SuiteReport {
  std::vector<Check> checks;

  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      n += c.pass;
    return n;
  }
  bool ok() const { return passed() == checks.size(); }
};

inline std::string format_check(const Check& c) {
  return "CHECK " + c.id + " " + (c.pass ? "PASS" : "FAIL") + " expected=" + c.expected + " actual=" + c.actual;
}

inline std::string to_string(const SuiteReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << format_check(c) << "\n";
  os << "TOTAL " << r.passed() << "/" << r.checks.size() << "\n";
  return os.str();
}

// Quick runs every worked example; full adds the randomized batches.
inline SuiteReport paper_suite(Scale scale) {
  SuiteReport r;
  for (const auto& g : check_groups()) {
    if (g.randomized && scale == Scale::Quick)
      continue;
    for (auto& c : g.run())
      r.checks.push_back(std::move(c));
  }
  return r;
}

} // namespace fixlab

#endif
