#include "spring/numdiff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace spring::numdiff {

bool Tolerance::valid() const {
  return std::isfinite(absolute) && std::isfinite(relative) && absolute >= 0.0 &&
         relative >= 0.0;
}

std::string_view to_string(MismatchReason reason) {
  switch (reason) {
    case MismatchReason::ValueMismatch: return "value mismatch";
    case MismatchReason::WordMismatch: return "word mismatch";
    case MismatchReason::TokenCountMismatch: return "token count mismatch";
  }
  return "mismatch";
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t skip_digits(std::string_view s, std::size_t i) {
  while (i < s.size() && is_digit(s[i])) ++i;
  return i;
}

// Length in bytes of the whitespace character starting at text[i], or 0 if
// the character there is not whitespace. Covers the Unicode White_Space set.
std::size_t whitespace_length(std::string_view text, std::size_t i) {
  const auto byte = [&](std::size_t k) {
    return i + k < text.size() ? static_cast<unsigned char>(text[i + k]) : 0u;
  };
  const unsigned char c = byte(0);
  if (c == ' ' || (c >= 0x09 && c <= 0x0D)) return 1;
  if (c == 0xC2 && (byte(1) == 0x85 || byte(1) == 0xA0)) return 2;
  if (c == 0xE1 && byte(1) == 0x9A && byte(2) == 0x80) return 3;  // U+1680
  if (c == 0xE2 && byte(1) == 0x80) {
    const unsigned char t = byte(2);
    // U+2000..U+200A, U+2028, U+2029, U+202F
    if ((t >= 0x80 && t <= 0x8A) || t == 0xA8 || t == 0xA9 || t == 0xAF) return 3;
  }
  if (c == 0xE2 && byte(1) == 0x81 && byte(2) == 0x9F) return 3;  // U+205F
  if (c == 0xE3 && byte(1) == 0x80 && byte(2) == 0x80) return 3;  // U+3000
  return 0;
}

bool is_line_break(std::string_view text, std::size_t i, std::size_t len) {
  // \r\n counts once, on the \n.
  const char c = text[i];
  if (c == '\n' || c == '\v' || c == '\f') return true;
  if (c == '\r') return !(i + 1 < text.size() && text[i + 1] == '\n');
  if (len == 2 && static_cast<unsigned char>(text[i + 1]) == 0x85) return true;
  if (len == 3 && static_cast<unsigned char>(text[i]) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x80) {
    const auto t = static_cast<unsigned char>(text[i + 2]);
    return t == 0xA8 || t == 0xA9;
  }
  return false;
}

bool is_continuation_byte(char c) {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

}  // namespace

bool is_number_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;

  const std::size_t int_begin = i;
  i = skip_digits(s, i);
  const bool has_int = i > int_begin;
  bool has_frac = false;
  if (i < s.size() && s[i] == '.') {
    ++i;
    const std::size_t frac_begin = i;
    i = skip_digits(s, i);
    has_frac = i > frac_begin;
  }
  if (!has_int && !has_frac) return false;

  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    const std::size_t exp_begin = i;
    i = skip_digits(s, i);
    if (i == exp_begin) return false;
  }
  return i == s.size();
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  Position pos;
  std::size_t i = 0;
  while (i < text.size()) {
    if (const std::size_t ws = whitespace_length(text, i); ws > 0) {
      if (is_line_break(text, i, ws)) {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
      i += ws;
      continue;
    }

    Token tok;
    tok.position = pos;
    const std::size_t begin = i;
    while (i < text.size() && whitespace_length(text, i) == 0) {
      if (!is_continuation_byte(text[i])) ++pos.column;
      ++i;
    }
    tok.raw = std::string(text.substr(begin, i - begin));
    if (is_number_literal(tok.raw)) {
      tok.kind = TokenKind::Number;
      // strtod handles overflow to +-inf and underflow to 0 the way we want.
      tok.value = std::strtod(tok.raw.c_str(), nullptr);
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

bool numbers_equal(double a, double b, const Tolerance& tol) {
  if (std::isnan(a) || std::isnan(b)) return false;
  if (std::isinf(a) || std::isinf(b)) return a == b;
  const double diff = std::abs(a - b);
  return diff <= tol.absolute || diff <= tol.relative * std::min(std::abs(a), std::abs(b));
}

ComparisonReport compare(std::string_view reference, std::string_view candidate,
                         const Tolerance& tol) {
  const auto ref = tokenize(reference);
  const auto out = tokenize(candidate);

  ComparisonReport report;
  const std::size_t shared = std::min(ref.size(), out.size());
  for (std::size_t i = 0; i < shared; ++i) {
    const Token& r = ref[i];
    const Token& o = out[i];
    if (r.is_number() && o.is_number()) {
      if (!numbers_equal(r.value, o.value, tol)) {
        report.mismatches.push_back({r, o, MismatchReason::ValueMismatch});
      }
    } else if (r.raw != o.raw) {
      report.mismatches.push_back({r, o, MismatchReason::WordMismatch});
    }
  }
  if (ref.size() != out.size()) {
    Mismatch m;
    m.reason = MismatchReason::TokenCountMismatch;
    if (shared < ref.size()) m.reference = ref[shared];
    if (shared < out.size()) m.candidate = out[shared];
    report.mismatches.push_back(std::move(m));
  }
  return report;
}

std::string render(const ComparisonReport& report) {
  if (report.equal()) return {};
  std::string out;
  for (const auto& m : report.mismatches) {
    const int line = m.reference ? m.reference->position.line
                                 : m.candidate->position.line;
    out += "line " + std::to_string(line) + ": expected '" +
           (m.reference ? m.reference->raw : std::string("<end of input>")) + "' got '" +
           (m.candidate ? m.candidate->raw : std::string("<end of input>")) + "'\n";
  }
  out += std::to_string(report.mismatches.size()) + " differences\n";
  return out;
}

}  // namespace spring::numdiff
