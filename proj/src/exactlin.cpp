#include "pathco/exactlin.hpp"

#include <cctype>
#include <charconv>

namespace pathco {

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = v_, e = modulus() - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return raw(result);
}

ModulusGuard::ModulusGuard(std::uint64_t p) : saved_(Zp::modulus_ref()) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus too large");
  Zp::modulus_ref() = p;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return {Kind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "Q" || t == "QQ") return rationals();
  if (t.size() >= 2 && (t[0] == 'F' || t[0] == 'f')) {
    std::string digits = t.substr(1);
    if (!digits.empty() && digits.front() == '<' && digits.back() == '>')
      digits = digits.substr(1, digits.size() - 2);
    if (!digits.empty() && digits.front() == '_') digits = digits.substr(1);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw std::invalid_argument("unrecognised field '" + text + "' (expected Q or F<p>)");
}

std::string FieldSpec::name() const {
  return kind == Kind::Rationals ? "Q" : "F" + std::to_string(characteristic);
}

template <>
Rational parse_scalar<Rational>(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed scalar '" + text + "'");
  }
}

template <>
Zp parse_scalar<Zp>(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    long long v = 0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) throw std::invalid_argument("malformed scalar '" + text + "'");
    return Zp(v);
  };
  if (slash == std::string::npos) return parse_int(text);
  return parse_int(text.substr(0, slash)) / parse_int(text.substr(slash + 1));
}

template <>
std::string scalar_to_string<Rational>(const Rational& s) {
  return s.str();
}

template <>
std::string scalar_to_string<Zp>(const Zp& s) {
  return std::to_string(s.value());
}

template Echelon<Rational> row_echelon<Rational>(Matrix<Rational>);
template Echelon<Zp> row_echelon<Zp>(Matrix<Zp>);
template Matrix<Rational> kernel_basis<Rational>(const Matrix<Rational>&);
template Matrix<Zp> kernel_basis<Zp>(const Matrix<Zp>&);
template Cokernel<Rational> cokernel_data<Rational>(const Matrix<Rational>&);
template Cokernel<Zp> cokernel_data<Zp>(const Matrix<Zp>&);

}  // namespace pathco
