#pragma once

// Textual forms shared by the expression language, the CLI flags and the
// configuration files.
//
//   rational      n | n/d                  (optional leading '-')
//   quaternion    (w,x,y,z)                components are rationals;
//                 a bare rational is the real quaternion (r,0,0,0)
//   prime field   n mod p | n              p must equal the active modulus
//   point         (x, y)
//   line          {base=(x,y), dir=(dx,dy)}
//   backend       rational | quaternion | gfp(p)
//
// A literal of one backend's shape used under another backend is a
// BackendMismatch; malformed text is a ParseError carrying its offset.

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "desargues/constructions.hpp"
#include "desargues/error.hpp"
#include "desargues/field.hpp"
#include "desargues/plane.hpp"

namespace desargues {

/// Position-tracking reader over a string. Offsets are byte offsets into the
/// original text.
class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), pos_(offset) {}

  std::size_t pos() const noexcept { return pos_; }
  void reset(std::size_t pos) noexcept { pos_ = pos; }
  std::string_view text() const noexcept { return text_; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  /// Next non-space character, or '\0' at the end.
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  /// Character immediately after the next non-space one, '\0' if none.
  char peek_second() {
    skip_ws();
    return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  /// Accepts an alphabetic keyword only when not followed by more letters.
  bool accept_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, what + " at end of input");
    throw ParseError(pos_, what + ", found '" + std::string(1, text_[pos_]) + "'");
  }

  /// Unsigned decimal digits, as a string.
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

namespace detail {

inline bool starts_number(Cursor& cur) {
  const char c = cur.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return true;
  return c == '-' && std::isdigit(static_cast<unsigned char>(cur.peek_second()));
}

struct IntegerLiteral {
  BigInt value;
  std::size_t offset;
};

inline IntegerLiteral parse_signed_integer(Cursor& cur) {
  cur.skip_ws();
  const std::size_t at = cur.pos();
  const bool negative = cur.accept('-');
  // No space between sign and digits.
  if (negative && cur.pos() < cur.text().size() &&
      !std::isdigit(static_cast<unsigned char>(cur.text()[cur.pos()]))) {
    cur.fail("expected digits after '-'");
  }
  BigInt v(cur.digits());
  return {negative ? BigInt(-v) : v, at};
}

inline Rational parse_rational_number(Cursor& cur) {
  const auto num = parse_signed_integer(cur);
  const std::size_t save = cur.pos();
  if (cur.accept('/')) {
    if (!std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      cur.reset(save);
      cur.fail("expected denominator");
    }
    const std::size_t den_at = cur.pos();
    BigInt den(cur.digits());
    if (den == 0) throw ParseError(den_at, "zero denominator");
    return Rational(num.value, den);
  }
  return Rational(num.value);
}

/// `( r , r , r , r )` with rational components; restores the cursor and
/// returns nullopt when the text at the cursor is not of that shape.
inline std::optional<std::array<Rational, 4>> try_parse_tuple4(Cursor& cur) {
  const std::size_t save = cur.pos();
  try {
    if (!cur.accept('(')) return std::nullopt;
    std::array<Rational, 4> parts;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i > 0 && !cur.accept(',')) throw ParseError(cur.pos(), "not a tuple");
      if (!starts_number(cur)) throw ParseError(cur.pos(), "not a tuple");
      parts[i] = parse_rational_number(cur);
    }
    if (!cur.accept(')')) throw ParseError(cur.pos(), "not a tuple");
    return parts;
  } catch (const ParseError&) {
    cur.reset(save);
    return std::nullopt;
  }
}

inline void reject_mod_suffix(Cursor& cur, const std::string& backend) {
  const std::size_t save = cur.pos();
  if (cur.accept_keyword("mod")) {
    throw Error(ErrorKind::BackendMismatch,
                "prime-field literal at offset " + std::to_string(save) + " in " + backend + " backend");
  }
}

}  // namespace detail

/// True when a scalar literal (not merely an expression) starts at the cursor.
template <SkewField F>
bool starts_literal(const F&, Cursor& cur) {
  if (detail::starts_number(cur)) return true;
  if (cur.peek() != '(') return false;
  const std::size_t save = cur.pos();
  const bool tuple = detail::try_parse_tuple4(cur).has_value();
  cur.reset(save);
  return tuple;
}

inline Rational parse_literal(const RationalField& field, Cursor& cur) {
  cur.skip_ws();
  const std::size_t at = cur.pos();
  if (detail::try_parse_tuple4(cur)) {
    throw Error(ErrorKind::BackendMismatch,
                "quaternion literal at offset " + std::to_string(at) + " in " + field.name() + " backend");
  }
  Rational r = detail::parse_rational_number(cur);
  detail::reject_mod_suffix(cur, field.name());
  return r;
}

inline Quaternion parse_literal(const QuaternionField& field, Cursor& cur) {
  if (auto t = detail::try_parse_tuple4(cur)) return {(*t)[0], (*t)[1], (*t)[2], (*t)[3]};
  Rational r = detail::parse_rational_number(cur);
  detail::reject_mod_suffix(cur, field.name());
  return Quaternion(std::move(r));
}

inline PrimeFieldElement parse_literal(const PrimeField& field, Cursor& cur) {
  cur.skip_ws();
  const std::size_t at = cur.pos();
  if (detail::try_parse_tuple4(cur)) {
    throw Error(ErrorKind::BackendMismatch,
                "quaternion literal at offset " + std::to_string(at) + " in " + field.name() + " backend");
  }
  const auto n = detail::parse_signed_integer(cur);
  if (cur.peek() == '/' ) {
    throw Error(ErrorKind::BackendMismatch,
                "rational literal at offset " + std::to_string(at) + " in " + field.name() + " backend");
  }
  if (cur.accept_keyword("mod")) {
    const std::size_t p_at = cur.pos();
    const BigInt p(cur.digits());
    if (p != BigInt(field.modulus())) {
      throw Error(ErrorKind::BackendMismatch, "literal modulus " + p.str() + " at offset " +
                                                  std::to_string(p_at) + " in " + field.name() + " backend");
    }
  }
  const BigInt m(field.modulus());
  BigInt r = n.value % m;
  if (r < 0) r += m;
  return field.from_int(r.convert_to<long long>());
}

/// Parses a complete scalar literal; trailing text is a ParseError.
template <SkewField F>
scalar_t<F> parse_scalar(const F& field, std::string_view text) {
  Cursor cur(text);
  auto v = parse_literal(field, cur);
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return v;
}

template <SkewField F>
Point<scalar_t<F>> parse_point(const F& field, Cursor& cur) {
  cur.expect('(');
  auto x = parse_literal(field, cur);
  cur.expect(',');
  auto y = parse_literal(field, cur);
  cur.expect(')');
  return {std::move(x), std::move(y)};
}

template <SkewField F>
Point<scalar_t<F>> parse_point(const F& field, std::string_view text) {
  Cursor cur(text);
  auto p = parse_point(field, cur);
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return p;
}

/// `{base=(x,y), dir=(dx,dy)}`
template <SkewField F>
Line<scalar_t<F>> parse_line(const F& field, std::string_view text) {
  Cursor cur(text);
  cur.expect('{');
  if (!cur.accept("base")) cur.fail("expected 'base'");
  cur.expect('=');
  auto base = parse_point(field, cur);
  cur.expect(',');
  if (!cur.accept("dir")) cur.fail("expected 'dir'");
  cur.expect('=');
  const std::size_t dir_at = cur.pos();
  auto dir = parse_point(field, cur);
  cur.expect('}');
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  try {
    return Line<scalar_t<F>>::through_direction(std::move(base), dir.x, dir.y);
  } catch (const Error&) {
    throw ParseError(dir_at, "zero direction");
  }
}

/// Comma-separated list of exactly `n` scalar literals.
template <SkewField F>
std::vector<scalar_t<F>> parse_scalar_list(const F& field, std::string_view text, std::size_t n) {
  Cursor cur(text);
  std::vector<scalar_t<F>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) cur.expect(',');
    out.push_back(parse_literal(field, cur));
  }
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return out;
}

// ---------------------------------------------------------------------------
// Backends

using Backend = std::variant<RationalField, QuaternionField, PrimeField>;

inline Backend parse_backend(std::string_view text) {
  Cursor cur(text);
  Backend backend = RationalField{};
  if (cur.accept_keyword("rational")) {
    backend = RationalField{};
  } else if (cur.accept_keyword("quaternion")) {
    backend = QuaternionField{};
  } else if (cur.accept("gfp")) {
    cur.expect('(');
    const std::size_t at = cur.pos();
    const std::string digits = cur.digits();
    cur.expect(')');
    if (digits.size() > 12) throw ParseError(at, "modulus too large");
    backend = PrimeField(std::stoull(digits));
  } else {
    cur.fail("expected rational, quaternion or gfp(p)");
  }
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return backend;
}

inline std::string backend_name(const Backend& b) {
  return std::visit([](const auto& f) { return f.name(); }, b);
}

// ---------------------------------------------------------------------------
// Desargues configuration files
//
//   # comment
//   A=(x,y)   B=(x,y)   C=(x,y)   A'=(x,y)   B'=(x,y)   C'=(x,y)
//   variant=parallel | variant=concurrent P=(x,y)
//
// One record per line, every key exactly once.

template <SkewField F>
DesarguesConfig<scalar_t<F>> parse_desargues_config(const F& field, std::string_view text) {
  using S = scalar_t<F>;
  static constexpr std::array<std::string_view, 6> keys{"A'", "B'", "C'", "A", "B", "C"};
  std::array<std::optional<Point<S>>, 6> pts;
  std::optional<DesarguesVariant<S>> variant;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(0, line_end);
    Cursor cur(line, line_start);
    line_start = line_end + 1;
    if (cur.at_end() || cur.peek() == '#') continue;

    const std::size_t key_at = cur.pos();
    if (cur.accept_keyword("variant")) {
      if (variant) throw ParseError(key_at, "duplicate variant");
      cur.expect('=');
      if (cur.accept_keyword("parallel")) {
        variant = ParallelAxes{};
      } else if (cur.accept_keyword("concurrent")) {
        if (!cur.accept('P')) cur.fail("expected 'P=' after concurrent");
        cur.expect('=');
        variant = ConcurrentAxes<S>{parse_point(field, cur)};
      } else {
        cur.fail("expected parallel or concurrent");
      }
    } else {
      std::size_t k = 0;
      while (k < keys.size() && !cur.accept(keys[k])) ++k;
      if (k == keys.size()) cur.fail("expected a point label or 'variant'");
      if (pts[k]) throw ParseError(key_at, "duplicate point " + std::string(keys[k]));
      cur.expect('=');
      pts[k] = parse_point(field, cur);
    }
    if (!cur.at_end()) cur.fail("unexpected trailing text");
  }
  for (std::size_t k = 0; k < keys.size(); ++k) {
    if (!pts[k]) throw ParseError(text.size(), "missing point " + std::string(keys[k]));
  }
  if (!variant) throw ParseError(text.size(), "missing variant");
  return {*pts[3], *pts[4], *pts[5], *pts[0], *pts[1], *pts[2], *variant};
}

template <SkewScalar S>
std::string format_desargues_config(const DesarguesConfig<S>& cfg) {
  std::string out;
  out += "A=" + to_string(cfg.a) + "\n";
  out += "B=" + to_string(cfg.b) + "\n";
  out += "C=" + to_string(cfg.c) + "\n";
  out += "A'=" + to_string(cfg.a2) + "\n";
  out += "B'=" + to_string(cfg.b2) + "\n";
  out += "C'=" + to_string(cfg.c2) + "\n";
  if (std::holds_alternative<ParallelAxes>(cfg.variant)) {
    out += "variant=parallel\n";
  } else {
    out += "variant=concurrent P=" + to_string(std::get<ConcurrentAxes<S>>(cfg.variant).center) + "\n";
  }
  return out;
}

}  // namespace desargues
