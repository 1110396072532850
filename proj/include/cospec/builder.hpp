#pragma once

// Builder expressions: sums of named graphs, e.g. "A(3)+2K1" or "P2(1,6)".
//
//   expr  := term ('+' term)*
//   term  := [count] atom
//   atom  := P2(a,b) | A(a) | B(a) | K(m,n) | Kn | path(n) | cycle(n)
//          | star(n) | R

#include "graph.hpp"
#include "graph6.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace cospec {

namespace detail {

class BuilderParser {
public:
  explicit BuilderParser(std::string_view text) : text_(text) {}

  auto parse() -> Graph {
    Graph acc(0);
    bool first = true;
    while (true) {
      skip_space();
      if (!first) {
        if (at_end())
          break;
        expect('+');
        skip_space();
      }
      first = false;
      int copies = 1;
      if (std::isdigit(peek()))
        copies = number();
      Graph atom_graph = atom();
      for (int i = 0; i < copies; ++i)
        acc = disjoint_union(acc, atom_graph);
      skip_space();
      if (at_end())
        break;
    }
    return acc;
  }

private:
  auto atom() -> Graph {
    const std::string name = identifier();
    if (name == "R")
      return gen_R();
    if (name == "K" && peek() != '(') {
      // Kn, complete graph
      if (!std::isdigit(peek()))
        fail("expected order after K");
      return complete_graph(number());
    }
    auto args = arguments();
    auto need = [&](std::size_t count) {
      if (args.size() != count)
        fail(name + " takes " + std::to_string(count) + " argument(s)");
    };
    if (name == "P2") {
      need(2);
      return double_star(args[0], args[1]);
    }
    if (name == "A") {
      need(1);
      return gen_A_construction(args[0]);
    }
    if (name == "B") {
      need(1);
      return gen_B_construction(args[0]);
    }
    if (name == "K") {
      need(2);
      return complete_bipartite(args[0], args[1]);
    }
    if (name == "path") {
      need(1);
      return path_graph(args[0]);
    }
    if (name == "cycle") {
      need(1);
      return cycle_graph(args[0]);
    }
    if (name == "star") {
      need(1);
      return star_graph(args[0]);
    }
    fail("unknown graph name '" + name + "'");
    return {};
  }

  auto identifier() -> std::string {
    std::string out;
    while (!at_end() && std::isalpha(peek()))
      out.push_back(text_[pos_++]);
    // P2 carries a digit in its name
    if (out == "P" && peek() == '2') {
      out.push_back('2');
      ++pos_;
    }
    if (out.empty())
      fail("expected a graph name");
    return out;
  }

  auto arguments() -> std::vector<int> {
    std::vector<int> out;
    skip_space();
    expect('(');
    while (true) {
      skip_space();
      out.push_back(number());
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return out;
    }
  }

  auto number() -> int {
    if (!std::isdigit(peek()))
      fail("expected a number");
    long value = 0;
    while (!at_end() && std::isdigit(peek())) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000000)
        fail("number too large");
    }
    return static_cast<int>(value);
  }

  auto peek() const -> int { return at_end() ? 0 : static_cast<unsigned char>(text_[pos_]); }
  auto at_end() const -> bool { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(peek()))
      ++pos_;
  }

  void expect(char ch) {
    if (peek() != ch)
      fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("builder expression '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline auto parse_builder(std::string_view text) -> Graph {
  try {
    return detail::BuilderParser(text).parse();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Accepts either a builder expression or a graph6 line.
inline auto parse_graph_argument(std::string_view text) -> Graph {
  // graph6 bytes are all >= 63, so digits, parentheses and '+' mark a builder
  bool looks_like_builder = text == "R";
  for (char ch : text)
    if (static_cast<unsigned char>(ch) < 63)
      looks_like_builder = true;
  if (looks_like_builder)
    return parse_builder(text);
  return parse_graph6(text);
}

} // namespace cospec
