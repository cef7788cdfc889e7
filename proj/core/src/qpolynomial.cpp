#include "qpart/qpolynomial.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "qpart/error.hpp"

namespace qpart {

QPolynomial::QPolynomial(BigInt constant) : coefficients_{std::move(constant)} { trim(); }

QPolynomial QPolynomial::monomial(int exponent, BigInt coefficient) {
  if (exponent < 0) throw std::invalid_argument("negative exponent " + std::to_string(exponent));
  QPolynomial p;
  p.coefficients_.assign(static_cast<std::size_t>(exponent) + 1, BigInt(0));
  p.coefficients_.back() = std::move(coefficient);
  p.trim();
  return p;
}

QPolynomial QPolynomial::from_dense(std::vector<BigInt> coefficients) {
  QPolynomial p;
  p.coefficients_ = std::move(coefficients);
  p.trim();
  return p;
}

QPolynomial QPolynomial::from_terms(const std::map<int, BigInt>& terms) {
  QPolynomial p;
  for (const auto& [e, c] : terms) p += monomial(e, c);
  return p;
}

void QPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

int QPolynomial::min_degree() const noexcept {
  for (std::size_t e = 0; e < coefficients_.size(); ++e) {
    if (coefficients_[e] != 0) return static_cast<int>(e);
  }
  return -1;
}

BigInt QPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(exponent)];
}

std::map<int, BigInt> QPolynomial::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t e = 0; e < coefficients_.size(); ++e) {
    if (coefficients_[e] != 0) out.emplace(static_cast<int>(e), coefficients_[e]);
  }
  return out;
}

BigInt QPolynomial::at_one() const {
  BigInt total = 0;
  for (const auto& c : coefficients_) total += c;
  return total;
}

QPolynomial QPolynomial::shifted(int shift) const {
  if (is_zero()) return {};
  if (shift < 0 && min_degree() + shift < 0) {
    throw std::domain_error("shift by q^" + std::to_string(shift) +
                            " leaves a negative exponent");
  }
  QPolynomial p;
  if (shift >= 0) {
    p.coefficients_.assign(static_cast<std::size_t>(shift), BigInt(0));
    p.coefficients_.insert(p.coefficients_.end(), coefficients_.begin(), coefficients_.end());
  } else {
    p.coefficients_.assign(coefficients_.begin() + (-shift), coefficients_.end());
  }
  return p;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t e = 0; e < rhs.coefficients_.size(); ++e) coefficients_[e] += rhs.coefficients_[e];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
  for (std::size_t e = 0; e < rhs.coefficients_.size(); ++e) coefficients_[e] -= rhs.coefficients_[e];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigInt> out(coefficients_.size() + rhs.coefficients_.size() - 1, BigInt(0));
  for (std::size_t a = 0; a < coefficients_.size(); ++a) {
    if (coefficients_[a] == 0) continue;
    for (std::size_t b = 0; b < rhs.coefficients_.size(); ++b) {
      out[a + b] += coefficients_[a] * rhs.coefficients_[b];
    }
  }
  coefficients_ = std::move(out);
  trim();
  return *this;
}

std::string to_string(const QPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto dense = p.dense();
  for (std::size_t e = 0; e < dense.size(); ++e) {
    const BigInt& c = dense[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += 'q';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_string(p); }

QPolynomial parse_polynomial(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto digits = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };

  std::map<int, BigInt> terms;
  skip();
  if (pos == text.size()) throw ParseError("empty polynomial", pos);
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", pos);
    }
    first = false;

    BigInt coefficient = 1;
    const std::string number = digits();
    bool has_q = false;
    if (!number.empty()) {
      coefficient = BigInt(number);
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
        if (pos >= text.size() || text[pos] != 'q') throw ParseError("expected 'q' after '*'", pos);
      }
    }
    if (pos < text.size() && text[pos] == 'q') {
      has_q = true;
      ++pos;
    }
    if (number.empty() && !has_q) throw ParseError("expected a coefficient or 'q'", pos);

    int exponent = 0;
    if (has_q) {
      exponent = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        const std::size_t at = pos;
        const std::string e = digits();
        if (e.empty()) throw ParseError("expected an exponent", pos);
        if (e.size() > 7) throw ParseError("exponent too large", at);
        exponent = std::stoi(e);
      }
    }
    terms[exponent] += sign * coefficient;
  }
  return QPolynomial::from_terms(terms);
}

std::string to_json(const QPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
      coeffs[std::to_string(e)] = static_cast<std::int64_t>(c);
    } else {
      coeffs[std::to_string(e)] = c.str();
    }
  }
  return nlohmann::json{{"coeffs", coeffs}}.dump();
}

QPolynomial polynomial_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw ValidationError("polynomial JSON needs a \"coeffs\" object");
  }
  std::map<int, BigInt> terms;
  for (const auto& [key, value] : j["coeffs"].items()) {
    if (key.empty() || key.size() > 7 ||
        key.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("bad exponent key \"" + key + "\"");
    }
    BigInt c;
    if (value.is_number_integer()) {
      c = value.get<std::int64_t>();
    } else if (value.is_string()) {
      const auto s = value.get<std::string>();
      const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
        throw ValidationError("bad coefficient \"" + s + "\"");
      }
      c = BigInt(s);
    } else {
      throw ValidationError("coefficient of q^" + key + " must be an integer");
    }
    terms[std::stoi(key)] += c;
  }
  return QPolynomial::from_terms(terms);
}

}  // namespace qpart
