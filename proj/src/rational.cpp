#include "wedgedeg/rational.hpp"

#include "wedgedeg/error.hpp"

namespace wedgedeg {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = Value(num, den);
}

BigInt BigRational::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt BigRational::denominator() const {
  return boost::multiprecision::denominator(value_);
}

std::string BigRational::to_string() const {
  return numerator().str() + "/" + denominator().str();
}

BigRational BigRational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den))
    throw ParseError("not a rational: " + std::string(text));
  const BigInt d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator: " + std::string(text));
  return BigRational(BigInt{std::string(num)}, d);
}

BigRational BigRational::pow(const BigRational& base, unsigned e) {
  BigRational r(1);
  for (unsigned i = 0; i < e; ++i) r = r * base;
  return r;
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.value_ == 0) throw InputError("division by zero");
  return BigRational(a.value_ / b.value_);
}

}  // namespace wedgedeg
