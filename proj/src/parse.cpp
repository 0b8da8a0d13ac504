#include "dmod/parse.hpp"

#include "dmod/diffring.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace dmod {

namespace {

class OperatorParser {
 public:
  OperatorParser(std::string_view text, const NumericalSemigroup* gamma) : text_(text), gamma_(gamma) {}

  DiffOperator parse() {
    DiffOperator out = expression();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse operator '" + std::string(text_) + "': " + what);
  }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool startsFactor() {
    skipSpace();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 't' || c == 'd' || c == 'E' || c == 'P';
  }

  DiffOperator expression() {
    DiffOperator acc;
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    acc = product();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  DiffOperator product() {
    DiffOperator acc = powered();
    for (;;) {
      if (accept('*'))
        acc = acc * powered();
      else if (startsFactor())
        acc = acc * powered();
      else
        return acc;
    }
  }

  long integer() {
    skipSpace();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
    return std::stol(digits);
  }

  DiffOperator powered() {
    skipSpace();
    const bool isT = pos_ < text_.size() && text_[pos_] == 't';
    DiffOperator base = atom();
    if (!accept('^')) return base;
    const long e = integer();
    if (e < 0) {
      if (!isT) fail("negative exponent is only allowed on t");
      return DiffOperator::t(static_cast<int>(e));
    }
    return power(base, static_cast<int>(e));
  }

  DiffOperator atom() {
    skipSpace();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      DiffOperator inner = expression();
      if (!accept(')')) fail("missing ')'");
      return inner;
    }
    if (c == 't') {
      ++pos_;
      return DiffOperator::t();
    }
    if (c == 'd') {
      ++pos_;
      return DiffOperator::d();
    }
    if (c == 'E') {
      ++pos_;
      return DiffOperator::euler();
    }
    if (c == 'P') {
      ++pos_;
      if (!accept('[')) fail("expected '[' after P");
      const long w = integer();
      if (!accept(']')) fail("expected ']'");
      if (!gamma_) fail("P[w] needs a semigroup");
      return buildPw(*gamma_, static_cast<int>(w));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t denStart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == denStart) fail("missing denominator");
      }
      return DiffOperator(parseRational(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const NumericalSemigroup* gamma_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

DiffOperator parseOperator(std::string_view text, const NumericalSemigroup* gamma) {
  return OperatorParser(text, gamma).parse();
}

std::vector<DiffOperator> parseOperatorList(std::string_view text, const NumericalSemigroup* gamma) {
  std::vector<DiffOperator> out;
  for (const auto& part : split(text, ';')) {
    const auto s = trimmed(part);
    if (s.empty()) continue;
    out.push_back(parseOperator(s, gamma));
  }
  return out;
}

std::vector<int> parseIntList(std::string_view text) {
  std::vector<int> out;
  for (const auto& part : split(text, ',')) {
    const auto s = trimmed(part);
    if (s.empty()) throw std::invalid_argument("empty entry in integer list '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parseRationalList(std::string_view text) {
  std::vector<Rational> out;
  for (const auto& part : split(text, ',')) {
    const auto s = trimmed(part);
    if (s.empty()) continue;
    out.push_back(parseRational(s));
  }
  return out;
}

}  // namespace dmod
