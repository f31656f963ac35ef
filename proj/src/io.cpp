#include "typecalc/io.hpp"

#include <cctype>
#include <charconv>

namespace typecalc {

std::string frac_str(FracQZ x) {
  return std::to_string(x.num) + "/" + std::to_string(x.den);
}

std::string type_str(const AutType& t) {
  std::string out;
  for (const auto& e : t.entries()) {
    if (!out.empty()) out += ", ";
    out += frac_str(e);
  }
  return out;
}

namespace {

i64 parse_int(std::string_view text, std::size_t offset_in_literal) {
  i64 value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("expected an integer, got \"" + std::string(text) + "\"", offset_in_literal);
  return value;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

FracQZ parse_fraction_token(std::string_view token, std::size_t offset) {
  token = trim(token, offset);
  if (token.empty()) throw ParseError("empty fraction", offset);
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return frac_canon(parse_int(token, offset), 1);
  const i64 num = parse_int(token.substr(0, slash), offset);
  const std::string_view den_text = token.substr(slash + 1);
  if (den_text.empty()) throw ParseError("missing denominator", offset + slash + 1);
  const i64 den = parse_int(den_text, offset + slash + 1);
  if (den <= 0) throw ParseError("denominator must be positive", offset + slash + 1);
  return frac_canon(num, den);
}

}  // namespace

AutType parse_type(std::string_view lit) {
  std::vector<FracQZ> entries;
  std::size_t ws = 0;
  if (trim(lit, ws).empty()) return AutType{};
  std::size_t pos = 0;
  while (true) {
    const auto comma = lit.find(',', pos);
    const auto token =
        comma == std::string_view::npos ? lit.substr(pos) : lit.substr(pos, comma - pos);
    entries.push_back(parse_fraction_token(token, pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return AutType::validated(std::move(entries));
}

Rational parse_rational(std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty rational", offset);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, offset));
  const i64 num = parse_int(text.substr(0, slash), offset);
  const i64 den = parse_int(text.substr(slash + 1), offset + slash + 1);
  if (den == 0) throw ParseError("denominator must be non-zero", offset + slash + 1);
  return {num, den};
}

}  // namespace typecalc
