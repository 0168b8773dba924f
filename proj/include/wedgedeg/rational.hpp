#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wedgedeg {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n) : value_(n) {}  // NOLINT(implicit)
  BigRational(const BigInt& num, const BigInt& den);

  BigInt numerator() const;
  BigInt denominator() const;

  // "num/den", always with the slash: "1/1", "7/16", "-3/4".
  std::string to_string() const;
  // Accepts "num/den" or a bare integer. Throws ParseError.
  static BigRational parse(std::string_view text);

  static BigRational pow(const BigRational& base, unsigned e);

  friend BigRational operator+(const BigRational& a, const BigRational& b) {
    return BigRational(a.value_ + b.value_);
  }
  friend BigRational operator-(const BigRational& a, const BigRational& b) {
    return BigRational(a.value_ - b.value_);
  }
  friend BigRational operator*(const BigRational& a, const BigRational& b) {
    return BigRational(a.value_ * b.value_);
  }
  // Throws InputError on division by zero.
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit BigRational(Value v) : value_(std::move(v)) {}
  Value value_;
};

}  // namespace wedgedeg
