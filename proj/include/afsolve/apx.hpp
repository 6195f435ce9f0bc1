// Copyright (c) 2026 afsolve contributors
// SPDX-License-Identifier: MIT

#ifndef AFSOLVE_APX_HPP
#define AFSOLVE_APX_HPP

#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "afsolve/framework.hpp"

namespace afsolve {

class ApxError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UndeclaredArgument, EmptyName };

  ApxError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

namespace detail {

inline bool is_name_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' && c != '.' &&
         c != '%';
}

class ApxReader {
 public:
  explicit ApxReader(std::string_view text) : text_(text) {}

  Framework read() {
    struct PendingAttack {
      std::string from, to;
      std::size_t line;
    };
    std::vector<std::string> names;
    std::unordered_map<std::string, ArgIndex> index;
    std::vector<PendingAttack> pending;

    while (skip_blank(), pos_ < text_.size()) {
      const std::size_t fact_line = line_;
      std::string head = read_word();
      if (head != "arg" && head != "att")
        throw ApxError(ApxError::Kind::Syntax, fact_line,
                       head.empty() ? std::string("expected a fact") : "unknown predicate '" + head + "'");
      expect('(');
      std::string first = read_name();
      if (head == "arg") {
        expect(')');
        expect('.');
        if (index.emplace(first, static_cast<ArgIndex>(names.size())).second) names.push_back(first);
      } else {
        expect(',');
        std::string second = read_name();
        expect(')');
        expect('.');
        pending.push_back({std::move(first), std::move(second), fact_line});
      }
    }

    std::vector<Attack> attacks;
    attacks.reserve(pending.size());
    for (const auto& p : pending) {
      auto from = index.find(p.from);
      auto to = index.find(p.to);
      if (from == index.end() || to == index.end()) {
        const std::string& missing = from == index.end() ? p.from : p.to;
        throw ApxError(ApxError::Kind::UndeclaredArgument, p.line,
                       "attack references undeclared argument '" + missing + "'");
      }
      attacks.emplace_back(from->second, to->second);
    }
    return Framework(std::move(names), std::move(attacks));
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::string read_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_name() {
    skip_blank();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) {
      if (pos_ < text_.size() && (text_[pos_] == ')' || text_[pos_] == ','))
        throw ApxError(ApxError::Kind::EmptyName, line_, "empty argument name");
      throw ApxError(ApxError::Kind::Syntax, line_, "expected an argument name");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_blank();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      std::string got = pos_ >= text_.size() ? std::string("end of input") : "'" + std::string(1, text_[pos_]) + "'";
      throw ApxError(ApxError::Kind::Syntax, line_, std::string("expected '") + c + "', got " + got);
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace detail

/// Parses `arg(x).` / `att(x,y).` facts. Facts may appear in any order; attack
/// endpoints are validated once the whole text has been read.
inline Framework parse_apx(std::string_view text) { return detail::ApxReader(text).read(); }

inline Framework parse_apx(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_apx(std::string_view(text));
}

inline std::string to_apx(const Framework& af) {
  std::ostringstream out;
  for (const auto& name : af.names()) out << "arg(" << name << ").\n";
  for (auto [from, to] : af.attacks()) out << "att(" << af.name(from) << ',' << af.name(to) << ").\n";
  return out.str();
}

}  // namespace afsolve

#endif  // AFSOLVE_APX_HPP
