#ifndef FIXLAB_TOOLS_CLI_HPP_
#define FIXLAB_TOOLS_CLI_HPP_

// Command-line front end. run() never exits the process: it returns
// 0 on success, 1 when a checked property fails, 2 on bad input.

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fixlab/certify.hpp"
#include "fixlab/morphism.hpp"
#include "fixlab/subgroup.hpp"
#include "fixlab/suite.hpp"
#include "fixlab/word.hpp"

namespace fixlab::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lines `name -> word`; `#` starts a comment.
inline std::vector<Element> parse_map(const GroupSpec& spec, std::istream& in, bool partial_identity,
                                      const std::string& source = "map") {
  std::vector<std::optional<Element>> images(spec.generator_count());
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto where = source + ":" + std::to_string(lineno);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw UsageError(where + ": expected 'name -> word'");
    std::string name = line.substr(0, arrow);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t\r") + 1);
    Word w;
    try {
      w = parse_word(spec, name);
    } catch (const WordError&) {
      throw UsageError(where + ": unknown generator '" + name + "'");
    }
    if (w.tokens.size() != 1 || w.tokens[0].exponent != 1 || name.find('^') != std::string::npos)
      throw UsageError(where + ": left side must be a single generator, got '" + name + "'");
    std::size_t gen = w.tokens[0].generator;
    if (images[gen])
      throw UsageError(where + ": generator '" + name + "' mapped twice");
    try {
      images[gen] = parse_and_normalize(spec, line.substr(arrow + 2));
    } catch (const WordError& e) {
      throw UsageError(where + ": " + e.what());
    }
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i] && !partial_identity)
      throw UsageError(source + ": no image for generator " + spec.generator_name(i) +
                       " (use --partial-identity to keep it fixed)");
    out.push_back(images[i] ? *images[i] : generator_element(spec, i));
  }
  return out;
}

// A generator list; the trivial subgroup is written as 1.
inline std::string list_text(const GroupSpec& spec, const std::vector<Element>& gens) {
  return gens.empty() ? "1" : to_string(spec, gens);
}

inline std::vector<Element> read_map(const GroupSpec& spec, const std::string& path, bool partial_identity) {
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open map file '" + path + "'");
  return parse_map(spec, in, partial_identity, path);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in NS2^l x Z^p x Z2^q", "fixlab"};
  app.require_subcommand(1);

  std::string group_text;
  std::vector<std::string> words, maps, subs;
  std::string exponent = "1";
  std::size_t max_word_len = 3, max_gens = 3, trials = 100;
  std::uint64_t seed = 1;
  std::string scale = "quick";
  bool partial = false;

  auto add_group = [&](CLI::App* c) { c->add_option("-g,--group", group_text, "group, e.g. \"NS2 x Z^2 x Z2\"")->required(); };
  auto add_words = [&](CLI::App* c, bool required) {
    auto o = c->add_option("-w,--word", words, "word such as \"a1^2 b1^-1 c1\"");
    if (required)
      o->required();
  };
  auto add_maps = [&](CLI::App* c, bool required) {
    auto o = c->add_option("-m,--map", maps, "endomorphism map file");
    if (required)
      o->required();
    c->add_flag("--partial-identity", partial, "generators missing from the map are fixed");
  };
  auto add_subs = [&](CLI::App* c) { c->add_option("--sub", subs, "subgroup generators \"w1; w2; ...\""); };
  auto add_search = [&](CLI::App* c) {
    c->add_option("--max-word-len", max_word_len, "longest candidate word")->capture_default_str();
    c->add_option("--max-gens", max_gens, "most candidate words per subgroup")->capture_default_str();
  };

  auto* normalize = app.add_subcommand("normalize", "normal form of a word");
  add_group(normalize);
  add_words(normalize, true);
  auto* mul_cmd = app.add_subcommand("mul", "product of the given words, left to right");
  add_group(mul_cmd);
  add_words(mul_cmd, true);
  auto* inv_cmd = app.add_subcommand("inv", "inverse");
  add_group(inv_cmd);
  add_words(inv_cmd, true);
  auto* pow_cmd = app.add_subcommand("pow", "integer power");
  add_group(pow_cmd);
  add_words(pow_cmd, true);
  pow_cmd->add_option("-k,--exponent", exponent, "exponent")->required();
  auto* member = app.add_subcommand("member", "membership of a word in --sub");
  add_group(member);
  add_words(member, true);
  add_subs(member);
  auto* rank_cmd = app.add_subcommand("rank", "rank bounds of --sub (or of the fixed subgroup of -m)");
  add_group(rank_cmd);
  add_subs(rank_cmd);
  add_maps(rank_cmd, false);
  auto* index_cmd = app.add_subcommand("index", "index of the first --sub in the second");
  add_group(index_cmd);
  add_subs(index_cmd);
  auto* intersect_cmd = app.add_subcommand("intersect", "intersection of the --sub subgroups");
  add_group(intersect_cmd);
  add_subs(intersect_cmd);
  auto* fix = app.add_subcommand("fix", "fixed subgroup of a map");
  add_group(fix);
  add_maps(fix, true);
  auto* fix_family = app.add_subcommand("fix-family", "common fixed subgroup of several maps");
  add_group(fix_family);
  add_maps(fix_family, true);
  auto* check_endo = app.add_subcommand("check-endo", "whether a map respects every relation");
  add_group(check_endo);
  add_maps(check_endo, true);
  auto* check_auto = app.add_subcommand("check-auto", "whether a map is an automorphism");
  add_group(check_auto);
  add_maps(check_auto, true);
  auto* sqrt_cmd = app.add_subcommand("sqrt", "square root in N of an element of G'");
  add_group(sqrt_cmd);
  add_words(sqrt_cmd, true);
  auto* decompose = app.add_subcommand("decompose-euc2", "splitting of a subgroup of NS2 x Z2^q");
  add_group(decompose);
  add_subs(decompose);
  auto* classify_cmd = app.add_subcommand("classify", "which subgroups are guaranteed compressed or inert");
  add_group(classify_cmd);
  auto* certify = app.add_subcommand("certify-compressed", "sufficient certificate of compression");
  add_group(certify);
  add_subs(certify);
  add_maps(certify, false);
  auto* search_c = app.add_subcommand("search-compression", "look for an overgroup of smaller rank");
  add_group(search_c);
  add_subs(search_c);
  add_maps(search_c, false);
  add_search(search_c);
  auto* search_i = app.add_subcommand("search-inertia", "look for K with rank(H n K) > rank(K)");
  add_group(search_i);
  add_subs(search_i);
  add_maps(search_i, false);
  add_search(search_i);
  auto* sample = app.add_subcommand("sample-inertia", "random check of rank(H n K) <= rank(K)");
  add_group(sample);
  sample->add_option("--trials", trials, "number of random pairs")->capture_default_str();
  sample->add_option("--seed", seed, "random seed")->capture_default_str();
  add_search(sample);
  auto* suite = app.add_subcommand("paper-suite", "reproduce the worked examples");
  suite->add_option("--scale", scale, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  std::vector<const char*> argv{"fixlab"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (suite->parsed()) {
      SuiteReport r = paper_suite(scale == "full" ? Scale::Full : Scale::Quick);
      out << to_string(r);
      return r.ok() ? 0 : 1;
    }

    GroupSpec spec;
    try {
      spec = parse_group_spec(group_text);
    } catch (const SpecError& e) {
      throw UsageError(std::string("group: ") + e.what());
    }
    auto element = [&](const std::string& w) {
      try {
        return parse_and_normalize(spec, w);
      } catch (const WordError& e) {
        throw UsageError("word '" + w + "': " + e.what());
      }
    };
    auto subgroup = [&](const std::string& s) {
      try {
        return parse_subgroup(spec, s);
      } catch (const WordError& e) {
        throw UsageError("subgroup '" + s + "': " + e.what());
      }
    };
    auto endo = [&](const std::string& path) { return Endomorphism::create(spec, read_map(spec, path, partial)); };
    auto one_word = [&] {
      if (words.size() != 1)
        throw UsageError("exactly one -w is required");
      return element(words[0]);
    };
    // H from --sub, or the fixed subgroup of -m; hint holds useful generators.
    std::vector<Element> hint;
    auto target = [&]() -> Subgroup {
      if (subs.size() + maps.size() != 1)
        throw UsageError("give exactly one of --sub or -m");
      if (!subs.empty())
        return subgroup(subs[0]);
      FixResult fx = fixed_subgroup(endo(maps[0]));
      hint = fx.generators();
      return fx.subgroup;
    };
    auto gens_text = [&](const Subgroup& h, std::span<const Element> h_hint) {
      RankCertificate rc = rank(h, h_hint);
      return list_text(spec, rc.generating_set);
    };
    auto rank_line = [](const RankCertificate& rc) {
      if (rc.exact)
        return std::to_string(rc.upper) + " (exact)";
      return "between " + std::to_string(rc.lower) + " and " + std::to_string(rc.upper);
    };

    if (normalize->parsed()) {
      out << to_string(spec, one_word()) << "\n";
    } else if (mul_cmd->parsed()) {
      Element g = identity(spec);
      for (const auto& w : words)
        g = mul(g, element(w));
      out << to_string(spec, g) << "\n";
    } else if (inv_cmd->parsed()) {
      out << to_string(spec, inv(one_word())) << "\n";
    } else if (pow_cmd->parsed()) {
      Integer k;
      try {
        std::string e = exponent;
        if (!e.empty() && e[0] == '+')
          e.erase(0, 1);
        if (e.empty() || !impl::all_digits(e[0] == '-' ? e.substr(1) : e))
          throw std::invalid_argument("bad");
        k = Integer(e);
      } catch (const std::exception&) {
        throw UsageError("exponent '" + exponent + "' is not an integer");
      }
      out << to_string(spec, pow(one_word(), k)) << "\n";
    } else if (member->parsed()) {
      if (subs.size() != 1)
        throw UsageError("exactly one --sub is required");
      out << (membership(one_word(), subgroup(subs[0])) ? "true" : "false") << "\n";
    } else if (rank_cmd->parsed()) {
      Subgroup h = target();
      RankCertificate rc = rank(h, hint);
      out << "rank " << rank_line(rc) << "\n";
      out << "generators " << list_text(spec, rc.generating_set) << "\n";
      out << "abelianization " << to_string(rc.abelianization) << "\n";
    } else if (index_cmd->parsed()) {
      if (subs.size() != 2)
        throw UsageError("index needs two --sub options: the subgroup, then the group containing it");
      Subgroup h = subgroup(subs[0]), k = subgroup(subs[1]);
      if (!containment(h, k))
        throw UsageError("the first subgroup is not contained in the second");
      auto idx = index(h, k);
      out << (idx ? idx->str() : "infinite") << "\n";
    } else if (intersect_cmd->parsed()) {
      if (subs.size() < 2)
        throw UsageError("intersect needs at least two --sub options");
      Subgroup acc = subgroup(subs[0]);
      for (std::size_t i = 1; i < subs.size(); ++i)
        acc = intersect(acc, subgroup(subs[i]));
      out << list_text(spec, acc.generators()) << "\n";
    } else if (fix->parsed()) {
      if (maps.size() != 1)
        throw UsageError("fix takes one map; use fix-family for several");
      FixResult fx = fixed_subgroup(endo(maps[0]));
      out << gens_text(fx.subgroup, fx.generators()) << "\n";
    } else if (fix_family->parsed()) {
      std::vector<Endomorphism> fs;
      for (const auto& m : maps)
        fs.push_back(endo(m));
      Subgroup h = fixed_family(fs);
      out << gens_text(h, {}) << "\n";
    } else if (check_endo->parsed()) {
      if (maps.size() != 1)
        throw UsageError("exactly one -m is required");
      auto v = Endomorphism::violation(spec, read_map(spec, maps[0], partial));
      if (v) {
        out << "invalid: " << v->what() << "\n";
        return 1;
      }
      out << "valid\n";
    } else if (check_auto->parsed()) {
      if (maps.size() != 1)
        throw UsageError("exactly one -m is required");
      auto images = read_map(spec, maps[0], partial);
      if (auto v = Endomorphism::violation(spec, images)) {
        out << "false (not an endomorphism: " << v->what() << ")\n";
        return 1;
      }
      bool a = is_automorphism(Endomorphism::create(spec, images));
      out << (a ? "true" : "false") << "\n";
      return a ? 0 : 1;
    } else if (sqrt_cmd->parsed()) {
      try {
        out << to_string(spec, sqrt_in_N(one_word())) << "\n";
      } catch (const NotInCommutator& e) {
        throw UsageError(std::string("not in the commutator subgroup: ") + e.what());
      }
    } else if (decompose->parsed()) {
      if (subs.size() != 1)
        throw UsageError("exactly one --sub is required");
      if (spec.klein != 1 || spec.free != 0)
        throw UsageError("decompose-euc2 needs a group NS2 x Z2^q");
      Euc2Decomposition d = decompose_euc2(subgroup(subs[0]));
      out << "projection " << to_string(d.type) << "\n";
      out << "projection generators " << list_text(spec, d.projection_generators) << "\n";
      out << "splitting " << list_text(spec, d.splitting) << "\n";
      out << "torsion part " << to_string(d.torsion_part) << "\n";
    } else if (classify_cmd->parsed()) {
      Classification c = classify(spec);
      out << "case " << to_string(c.kind) << "\n";
      out << "compressed_all " << (c.compressed_all ? "true" : "false") << "\n";
      out << "inert_all " << (c.inert_all ? "true" : "false") << "\n";
    } else if (certify->parsed()) {
      if (spec.torsion != 0)
        throw UsageError("certify-compressed needs a group without Z2 factors");
      Subgroup h = target();
      auto cert = check_compressed_certificate(h, hint);
      if (!cert) {
        out << "no certificate (this does not show that the subgroup is not compressed)\n";
        return 1;
      }
      out << "certified: sqrt-closed, rank " << cert->rank.upper << " equals the rank of its abelian image\n";
      out << "generators " << list_text(spec, cert->rank.generating_set) << "\n";
    } else if (search_c->parsed()) {
      Subgroup h = target();
      SearchStats st;
      std::optional<Witness> w;
      try {
        w = search_compression_counterexample(h, max_word_len, max_gens, &st, hint);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!w) {
        out << "no witness within word length " << max_word_len << " and " << max_gens << " extra words\n";
      } else {
        out << "witness K = <" << list_text(spec, w->k_rank.generating_set) << ">\n";
        out << "rank(H) = " << rank_line(w->h_rank) << ", rank(K) = " << rank_line(w->k_rank) << "\n";
        out << "added words " << list_text(spec, w->words) << "\n";
      }
      out << "candidates " << st.candidates << ", pruned " << st.pruned << ", inexact " << st.inexact << "\n";
    } else if (search_i->parsed()) {
      Subgroup h = target();
      SearchStats st;
      auto w = search_inertia_counterexample(h, max_word_len, max_gens, &st);
      if (!w) {
        out << "no witness within word length " << max_word_len << " and " << max_gens << " generators\n";
      } else {
        out << "witness K = <" << list_text(spec, w->k_rank.generating_set) << ">\n";
        out << "H n K = <" << list_text(spec, w->meet_rank->generating_set) << ">\n";
        out << "rank(H n K) = " << rank_line(*w->meet_rank) << ", rank(K) = " << rank_line(w->k_rank) << "\n";
      }
      out << "candidates " << st.candidates << ", pruned " << st.pruned << ", inexact " << st.inexact << "\n";
    } else if (sample->parsed()) {
      InertiaReport r = sample_inertia_property(spec, trials, max_gens, max_word_len, seed);
      out << to_string(r);
      return r.violations == 0 ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "fixlab: " << e.what() << "\n";
    return 2;
  } catch (const RelationError& e) {
    err << "fixlab: map is not an endomorphism: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "fixlab: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace fixlab::cli

#endif
