#include "typecalc/graded_series.hpp"

#include <charconv>

namespace typecalc {

Monomial Monomial::parse(std::string_view text) {
  const auto parse_int = [&](std::string_view s, std::size_t off) {
    int v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
      throw ParseError("monomial: expected an integer in \"" + std::string(s) + "\"", off);
    return v;
  };
  Monomial m;
  if (text == "1") return m;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto star = text.find('*', pos);
    if (star == std::string_view::npos) star = text.size();
    std::string_view factor = text.substr(pos, star - pos);
    if (factor.empty() || factor.front() != 'a')
      throw ParseError("monomial: factor must look like aN or aN^M", pos);
    factor.remove_prefix(1);
    const auto caret = factor.find('^');
    int index = 0;
    int mult = 1;
    if (caret == std::string_view::npos) {
      index = parse_int(factor, pos + 1);
    } else {
      index = parse_int(factor.substr(0, caret), pos + 1);
      mult = parse_int(factor.substr(caret + 1), pos + 2 + caret);
    }
    if (mult < 1) throw ParseError("monomial: multiplicity must be positive", pos);
    m.multiply(index, mult);
    if (star == text.size()) break;
    pos = star + 1;
  }
  return m;
}

Monomial& Monomial::multiply(int index, int mult) {
  auto& e = exps_[index];
  e += mult;
  if (e < 0) {
    exps_.erase(index);
    throw InvalidInput("monomial: negative multiplicity");
  }
  if (e == 0) exps_.erase(index);
  return *this;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [i, m] : exps_) d += m;
  return d;
}

std::string Monomial::str() const {
  if (exps_.empty()) return "1";
  std::string out;
  for (const auto& [i, m] : exps_) {
    if (!out.empty()) out += "*";
    out += "a" + std::to_string(i);
    if (m > 1) out += "^" + std::to_string(m);
  }
  return out;
}

GradedSeries::GradedSeries(const PrimitiveCatalogue& catalogue) : catalogue_(catalogue) {
  scaled_.reserve(catalogue.rows.size());
  for (const auto& row : catalogue.rows) {
    if ((kGradeScale * row.wt.num) % row.wt.den != 0)
      throw ConsistencyError("grade scale " + std::to_string(kGradeScale) +
                             " does not clear the weight " + row.wt.str());
    scaled_.push_back(kGradeScale / row.wt.den * row.wt.num);
    weight_lcm_ = checked_lcm(weight_lcm_, row.wt.den);
  }
  if (kGradeScale % weight_lcm_ != 0)
    throw ConsistencyError("grade scale is not a multiple of the weight denominator lcm " +
                           std::to_string(weight_lcm_));
}

i64 GradedSeries::scaled_weight(int index) const {
  if (index < 1 || index > static_cast<int>(scaled_.size()))
    throw InvalidInput("series: unknown catalogue index a" + std::to_string(index));
  return scaled_[static_cast<std::size_t>(index) - 1];
}

i64 GradedSeries::grade_of(const Monomial& m) const {
  i64 g = 0;
  for (const auto& [index, mult] : m.exponents())
    g = checked_add(g, checked_mul(scaled_weight(index), mult));
  return g;
}

std::vector<GradedSlice> GradedSeries::series_table(i64 max_grade) const {
  if (max_grade < 0) throw InvalidInput("series: grade must be non-negative");
  std::vector<std::map<Monomial, i64>> table(static_cast<std::size_t>(max_grade) + 1);
  table[0][Monomial::unit()] = 1;
  // Unbounded-multiplicity graded product: after factor i the slice at g holds
  // the product over factors 1..i, via new[g] += a_i * new[g - s_i].
  for (int index = 1; index <= static_cast<int>(scaled_.size()); ++index) {
    const i64 s = scaled_weight(index);
    for (i64 g = s; g <= max_grade; ++g) {
      for (const auto& [mono, coeff] : table[static_cast<std::size_t>(g - s)]) {
        Monomial grown = mono;
        grown.multiply(index);
        table[static_cast<std::size_t>(g)][grown] += coeff;
      }
    }
  }
  std::vector<GradedSlice> out(static_cast<std::size_t>(max_grade) + 1);
  for (i64 g = 0; g <= max_grade; ++g) {
    out[static_cast<std::size_t>(g)].grade = g;
    out[static_cast<std::size_t>(g)].terms = std::move(table[static_cast<std::size_t>(g)]);
  }
  return out;
}

GradedSlice GradedSeries::series_slice(i64 target_grade) const {
  auto table = series_table(target_grade);
  return std::move(table[static_cast<std::size_t>(target_grade)]);
}

namespace {

void knapsack_dfs(const std::vector<i64>& scaled, int index, i64 grade, i64 max_grade,
                  Monomial& current, std::vector<GradedSlice>& out) {
  if (index == 0) {
    out[static_cast<std::size_t>(grade)].terms[current] += 1;
    return;
  }
  const i64 s = scaled[static_cast<std::size_t>(index) - 1];
  knapsack_dfs(scaled, index - 1, grade, max_grade, current, out);
  int used = 0;
  for (i64 g = grade + s; g <= max_grade; g += s) {
    current.multiply(index);
    ++used;
    knapsack_dfs(scaled, index - 1, g, max_grade, current, out);
  }
  if (used > 0) current.multiply(index, -used);
}

}  // namespace

std::vector<GradedSlice> GradedSeries::knapsack_table(i64 max_grade) const {
  if (max_grade < 0) throw InvalidInput("series: grade must be non-negative");
  std::vector<GradedSlice> out(static_cast<std::size_t>(max_grade) + 1);
  for (i64 g = 0; g <= max_grade; ++g) out[static_cast<std::size_t>(g)].grade = g;
  Monomial current;
  knapsack_dfs(scaled_, static_cast<int>(scaled_.size()), 0, max_grade, current, out);
  return out;
}

GradedSlice GradedSeries::knapsack_slice(i64 target_grade) const {
  auto table = knapsack_table(target_grade);
  return std::move(table[static_cast<std::size_t>(target_grade)]);
}

AutType GradedSeries::monomial_to_type(const Monomial& m) const {
  AutType acc;
  for (const auto& [index, mult] : m.exponents()) {
    const auto& row = catalogue_.row(index);  // throws on unknown index
    for (int c = 0; c < mult; ++c) acc = sum(acc, row.prim.base);
  }
  return acc;
}

}  // namespace typecalc
