#include "strathom/algebra/coefficients.hpp"

#include <charconv>

namespace strathom {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)),
      violations_(std::move(violations)) {}

ValidationError::ValidationError(const std::string& violation)
    : ValidationError(std::vector<std::string>{violation}) {}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Coefficients Coefficients::prime_field(long p) {
  if (!is_prime(p))
    throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return Coefficients(Kind::PrimeField, p);
}

Coefficients Coefficients::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  std::string_view digits;
  if (text.size() > 2 && text.substr(0, 2) == "Fp")
    digits = text.substr(2);
  else if (text.size() > 1 && text[0] == 'F')
    digits = text.substr(1);
  else
    throw ValidationError("unknown coefficient ring '" + std::string(text) + "'");
  long p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ValidationError("unknown coefficient ring '" + std::string(text) + "'");
  return prime_field(p);
}

std::string Coefficients::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F" + std::to_string(p_);
  }
  return "?";
}

void Coefficients::normalize(Integer& x) const {
  if (kind_ != Kind::PrimeField) return;
  mpz_fdiv_r_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p_));
}

Integer Coefficients::inverse(const Integer& x) const {
  Integer r;
  if (kind_ == Kind::PrimeField) {
    Integer m(p_);
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
      throw std::domain_error("element is not invertible");
    return r;
  }
  if (x == 1 || x == -1) return x;
  throw std::domain_error("element is not a unit");
}

}  // namespace strathom
