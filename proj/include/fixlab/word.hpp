#ifndef FIXLAB_WORD_HPP_
#define FIXLAB_WORD_HPP_

// Text front-end: words like "a1^2 b1^-3 c1 d2" and group descriptions
// like "NS2 x Z^2 x Z2".

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace fixlab {

struct WordError : std::invalid_argument {
  WordError(const std::string& what, std::size_t token)
    : std::invalid_argument(what), token(token) {}
  std::size_t token;  // 0-based token position
};

struct Token {
  std::size_t generator;
  Integer exponent;
};

struct Word {
  std::vector<Token> tokens;
};

namespace impl {

inline std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty())
        out.push_back(std::move(cur)), cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty())
    out.push_back(std::move(cur));
  return out;
}

inline bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

} // namespace impl

// Tokens are separated by whitespace; a token is `name` or `name^integer`.
// "1" and the empty string denote the identity.
inline Word parse_word(const GroupSpec& spec, std::string_view text) {
  Word w;
  auto tokens = impl::split_ws(text);
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    const std::string& tok = tokens[pos];
    auto where = [&] { return "token " + std::to_string(pos + 1) + " '" + tok + "'"; };
    if (tok == "1")
      continue;
    std::string_view name = tok, exp;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = std::string_view(tok).substr(0, caret);
      exp = std::string_view(tok).substr(caret + 1);
      std::string_view digits = exp;
      if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
        digits.remove_prefix(1);
      if (!impl::all_digits(digits))
        throw WordError(where() + ": malformed exponent", pos);
    }
    if (name.size() < 2 || !impl::all_digits(name.substr(1)) || name[1] == '0')
      throw WordError(where() + ": unknown generator name", pos);
    std::size_t index = std::stoul(std::string(name.substr(1))) - 1;
    Generator g{};
    std::size_t bound = 0;
    switch (name[0]) {
    case 'a': g = {GenKind::A, index}; bound = spec.klein; break;
    case 'b': g = {GenKind::B, index}; bound = spec.klein; break;
    case 'c': g = {GenKind::C, index}; bound = spec.free; break;
    case 'd': g = {GenKind::D, index}; bound = spec.torsion; break;
    default: throw WordError(where() + ": unknown generator name", pos);
    }
    if (index >= bound)
      throw WordError(where() + ": unknown generator name", pos);
    Integer e = 1;
    if (!exp.empty())
      e = Integer(std::string(exp[0] == '+' ? exp.substr(1) : exp));
    if (e != 0)
      w.tokens.push_back({spec.generator_index(g), std::move(e)});
  }
  return w;
}

inline Element evaluate(const GroupSpec& spec, const Word& w) {
  Element g = identity(spec);
  for (const auto& t : w.tokens)
    g = mul(g, pow(generator_element(spec, t.generator), t.exponent));
  return g;
}

inline Element parse_and_normalize(const GroupSpec& spec, std::string_view text) {
  return evaluate(spec, parse_word(spec, text));
}

// Normal form as text; the identity prints as "1".
inline std::string to_string(const GroupSpec& spec, const Element& g) {
  std::string out;
  auto emit = [&](std::size_t gen, const Integer& e) {
    if (e == 0)
      return;
    if (!out.empty())
      out += ' ';
    out += spec.generator_name(gen);
    if (e != 1)
      out += '^' + e.str();
  };
  for (std::size_t i = 0; i < spec.klein; ++i) {
    emit(2 * i, g.klein[i].s);
    emit(2 * i + 1, g.klein[i].t);
  }
  for (std::size_t j = 0; j < spec.free; ++j)
    emit(2 * spec.klein + j, g.free[j]);
  for (std::size_t j = 0; j < spec.torsion; ++j)
    emit(2 * spec.klein + spec.free + j, Integer(g.tor[j]));
  return out.empty() ? "1" : out;
}

inline std::string to_string(const GroupSpec& spec, const std::vector<Element>& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty())
      out += ", ";
    out += to_string(spec, g);
  }
  return out;
}

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Factors separated by `x`: NS2, Z, Z2, T2 (= Z^2), P2 (= Z2) or 1, each with
// an optional ^k repetition.
inline std::vector<EuclideanBlock> parse_blocks(std::string_view text) {
  std::vector<EuclideanBlock> blocks;
  std::vector<std::string> factors;
  {
    std::string cur;
    auto flush = [&] {
      std::size_t b = cur.find_first_not_of(" \t");
      std::size_t e = cur.find_last_not_of(" \t");
      factors.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
      cur.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 'x' || text[i] == '*') {
        flush();
      } else if (text.substr(i, 2) == "\xC3\x97") {  // U+00D7 multiplication sign
        flush();
        ++i;
      } else {
        cur += text[i];
      }
    }
    flush();
  }
  if (factors.size() == 1 && factors[0].empty())
    throw SpecError("empty group description");
  for (const auto& f : factors) {
    std::string name = f;
    std::size_t reps = 1;
    if (auto caret = f.find('^'); caret != std::string::npos) {
      name = f.substr(0, caret);
      std::string count = f.substr(caret + 1);
      if (!impl::all_digits(count))
        throw SpecError("malformed repetition in factor '" + f + "'");
      reps = std::stoul(count);
    }
    EuclideanBlock b;
    if (name == "NS2" || name == "K")
      b = EuclideanBlock::KleinBottle;
    else if (name == "Z")
      b = EuclideanBlock::Z;
    else if (name == "Z2" || name == "P2")
      b = EuclideanBlock::Z2;
    else if (name == "T2")
      b = EuclideanBlock::Z2Torus;
    else if (name == "1")
      b = EuclideanBlock::Trivial;
    else
      throw SpecError("unknown factor '" + f + "'");
    blocks.insert(blocks.end(), reps, b);
  }
  return blocks;
}

inline GroupSpec parse_group_spec(std::string_view text) {
  auto blocks = parse_blocks(text);
  return canonicalize_spec(blocks);
}

inline std::string describe(const GroupSpec& spec) {
  std::vector<std::string> parts;
  auto add = [&](const char* name, std::size_t k) {
    if (k == 1)
      parts.push_back(name);
    else if (k > 1)
      parts.push_back(std::string(name) + "^" + std::to_string(k));
  };
  add("NS2", spec.klein);
  add("Z", spec.free);
  add("Z2", spec.torsion);
  if (parts.empty())
    return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += " x " + parts[i];
  return out;
}

} // namespace fixlab

#endif
