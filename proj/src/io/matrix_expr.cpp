#include "matrix_expr.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "core/constructions.hpp"
#include "core/errors.hpp"

namespace pistr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::size_t number(std::string_view s, std::string_view context) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
    throw InvalidArgument("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return value;
}

Label label(std::string_view s, std::string_view context) {
  const auto v = number(s, context);
  if (v == 0 || v > UINT32_MAX) throw InvalidArgument("label out of range in '" + std::string(context) + "'");
  return static_cast<Label>(v);
}

std::optional<Family> family_of(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    default: return std::nullopt;
  }
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

WeightedAdjacencyMatrix block(std::string_view token) {
  if (token.empty()) throw InvalidArgument("empty block name");
  if (token.front() == '~' && token.size() >= 3 && family_of(token[1]) && all_digits(token.substr(2))) {
    return tilde_matrix(number(token.substr(2), token), *family_of(token[1]));
  }
  if (token.size() >= 2 && family_of(token[0]) && all_digits(token.substr(1))) {
    return named_family(number(token.substr(1), token), *family_of(token[0]));
  }
  if (token.size() >= 3 && token.substr(0, 2) == "Lp" && all_digits(token.substr(2))) {
    return l_prime_matrix(number(token.substr(2), token));
  }
  if (token.size() >= 2 && token[0] == 'L' && all_digits(token.substr(1))) return l_matrix(number(token.substr(1), token));
  if (token.front() == 'M' && token.find(':') != std::string_view::npos) {
    const auto parts = split(token.substr(1), ':');
    if (parts.size() != 4) throw InvalidArgument("expected M<n>:x:y:z, got '" + std::string(token) + "'");
    return m_matrix(number(parts[0], token), label(parts[1], token), label(parts[2], token), label(parts[3], token));
  }
  return fixed_matrix(token);
}

}  // namespace

WeightedAdjacencyMatrix build_matrix_expression(std::string_view expression) {
  const auto at = expression.find('@');
  const auto blocks_text = trim(expression.substr(0, at));
  std::vector<WeightedAdjacencyMatrix> blocks;
  for (auto token : split(blocks_text, '+')) blocks.push_back(block(token));
  auto m = direct_sum(blocks);
  if (at == std::string_view::npos) return m;

  std::vector<InjectionSpec> specs;
  for (auto item : split(expression.substr(at + 1), ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 4) throw InvalidArgument("expected injection P:i:j:w, got '" + std::string(item) + "'");
    BlockPair pair;
    if (parts[0] == "12") pair = BlockPair::P12;
    else if (parts[0] == "13") pair = BlockPair::P13;
    else if (parts[0] == "23") pair = BlockPair::P23;
    else throw InvalidArgument("block pair must be 12, 13 or 23, got '" + std::string(parts[0]) + "'");
    specs.push_back({pair, number(parts[1], item), number(parts[2], item), label(parts[3], item)});
  }
  if (blocks.size() != 3) throw InvalidArgument("injections need exactly three blocks");
  const std::vector<std::size_t> orders{blocks[0].order(), blocks[1].order(), blocks[2].order()};
  return apply_injections(m, orders, specs);
}

}  // namespace pistr
