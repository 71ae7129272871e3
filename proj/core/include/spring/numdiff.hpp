#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spring::numdiff {

struct Position {
  int line = 1;    // 1-based
  int column = 1;  // 1-based, counted in code points

  friend bool operator==(const Position&, const Position&) = default;
};

enum class TokenKind { Number, Word };

struct Token {
  TokenKind kind = TokenKind::Word;
  std::string raw;
  double value = 0.0;  // meaningful only for Number tokens
  Position position;

  bool is_number() const { return kind == TokenKind::Number; }
};

/// Absolute/relative tolerance pair. Both must be finite and non-negative.
struct Tolerance {
  double absolute = 0.0;
  double relative = 0.0;

  bool valid() const;
};

enum class MismatchReason { ValueMismatch, WordMismatch, TokenCountMismatch };

std::string_view to_string(MismatchReason reason);

struct Mismatch {
  std::optional<Token> reference;
  std::optional<Token> candidate;
  MismatchReason reason = MismatchReason::ValueMismatch;
};

struct ComparisonReport {
  std::vector<Mismatch> mismatches;

  bool equal() const { return mismatches.empty(); }
};

/// True iff `raw` in its entirety matches
///   [+-]? ( digits ( '.' digits? )? | '.' digits ) ( [eE] [+-]? digits )?
bool is_number_literal(std::string_view raw);

/// Splits on Unicode whitespace into maximal non-whitespace runs and
/// classifies each run as a Number or a Word.
std::vector<Token> tokenize(std::string_view text);

/// |a-b| <= A  or  |a-b| <= R * min(|a|, |b|). NaN never compares equal;
/// infinities compare equal only to an infinity of the same sign.
bool numbers_equal(double a, double b, const Tolerance& tol);

ComparisonReport compare(std::string_view reference, std::string_view candidate,
                         const Tolerance& tol);

/// One `line L: expected '<ref>' got '<out>'` line per mismatch followed by
/// `N differences`. Empty when the report is equal.
std::string render(const ComparisonReport& report);

}  // namespace spring::numdiff
