#include "rankcrank/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rankcrank/errors.hpp"

namespace rankcrank {

LaurentPoly::LaurentPoly(int lo, std::vector<Integer> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  return LaurentPoly(exponent, {c});
}

LaurentPoly LaurentPoly::geometric(int length) {
  return LaurentPoly(0, std::vector<Integer>(static_cast<std::size_t>(std::max(length, 0)), Integer(1)));
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Integer& c) { return sgn(c) != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  const auto skip = first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + skip);
  lo_ += static_cast<int>(skip);
}

const Integer* LaurentPoly::find(int m) const {
  if (m < lo_ || m > hi()) return nullptr;
  return &coeffs_[static_cast<std::size_t>(m - lo_)];
}

Integer LaurentPoly::coefficient(int m) const {
  const Integer* c = find(m);
  return c ? *c : Integer(0);
}

Integer LaurentPoly::sum() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.lo_ += k;
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int t) const {
  if (t < 1) throw std::invalid_argument("substitute_power requires t >= 1");
  if (is_zero() || t == 1) return *this;
  std::vector<Integer> out(static_cast<std::size_t>(hi() - lo_) * t + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * t] = coeffs_[i];
  return LaurentPoly(lo_ * t, std::move(out));
}

LaurentPoly LaurentPoly::negate_variable() const {
  LaurentPoly out = *this;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if ((out.lo_ + static_cast<int>(i)) % 2 != 0) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return *this;
  std::vector<Integer> out(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-hi(), std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void LaurentPoly::accumulate(const LaurentPoly& g, int sign) {
  if (g.is_zero()) return;
  if (is_zero()) {
    *this = sign > 0 ? g : -g;
    return;
  }
  const int new_lo = std::min(lo_, g.lo_);
  const int new_hi = std::max(hi(), g.hi());
  if (new_lo < lo_ || new_hi > hi()) {
    std::vector<Integer> grown(static_cast<std::size_t>(new_hi - new_lo + 1));
    std::move(coeffs_.begin(), coeffs_.end(), grown.begin() + (lo_ - new_lo));
    coeffs_ = std::move(grown);
    lo_ = new_lo;
  }
  const std::size_t offset = static_cast<std::size_t>(g.lo_ - lo_);
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) {
    if (sign > 0) {
      coeffs_[offset + i] += g.coeffs_[i];
    } else {
      coeffs_[offset + i] -= g.coeffs_[i];
    }
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  accumulate(g, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  accumulate(g, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> out(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (sgn(f.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(f.lo_ + g.lo_, std::move(out));
}

bool is_symmetric(const LaurentPoly& f) {
  if (f.is_zero()) return true;
  if (f.lo() != -f.hi()) return false;
  const auto& c = f.coeffs();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

bool is_unimodal(const LaurentPoly& f) {
  const auto& c = f.coeffs();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

bool is_nonnegative(const LaurentPoly& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Integer& c) { return sgn(c) >= 0; });
}

bool has_interior_zeros(const LaurentPoly& f) {
  return std::any_of(f.coeffs().begin(), f.coeffs().end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Integer& c = f.coeffs()[i];
    if (sgn(c) == 0) continue;
    const int e = f.lo() + static_cast<int>(i);
    const Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    std::map<int, Integer> terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coef, exponent] = term();
      if (sign < 0) coef = -coef;
      terms[exponent] += coef;
      skip_space();
    }
    LaurentPoly out;
    for (const auto& [e, c] : terms) out += LaurentPoly::monomial(c, e);
    return out;
  }

 private:
  std::pair<Integer, int> term() {
    Integer coef = 1;
    bool has_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = Integer(digits());
      has_coef = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        take();
        skip_space();
        if (at_end() || !is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (at_end() || !is_var(peek())) {
      if (!has_coef) fail("expected coefficient or variable");
      return {coef, 0};
    }
    take();
    skip_space();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      take();
      skip_space();
      char close = 0;
      if (peek() == '(') close = ')';
      if (peek() == '{') close = '}';
      if (close) {
        take();
        skip_space();
      }
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = take() == '-' ? -1 : 1;
        skip_space();
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      exponent = sign * std::stoi(digits());
      skip_space();
      if (close) {
        if (peek() != close) fail("unbalanced exponent bracket");
        take();
      }
    }
    return {coef, exponent};
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(take());
    return out;
  }

  static bool is_var(char c) { return c == 'z' || c == 'x'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return TermParser(text).parse(); }

void to_json(nlohmann::json& j, const LaurentPoly& f) {
  auto coeffs = nlohmann::json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  j = nlohmann::json{{"lo", f.lo()}, {"coeffs", std::move(coeffs)}};
}

void from_json(const nlohmann::json& j, LaurentPoly& f) {
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>());
    } else {
      coeffs.emplace_back(c.get<long>());
    }
  }
  f = LaurentPoly(j.at("lo").get<int>(), std::move(coeffs));
}

}  // namespace rankcrank
