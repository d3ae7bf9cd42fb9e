#ifndef LDPC_BIGINT_HPP
#define LDPC_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ldpc {

// Unsigned big integer, just large enough for exact factorial/binomial
// products (hundreds of bits). Little-endian 32-bit limbs, no trailing zeros.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t value);

    static BigUint factorial(std::int64_t k);
    // Exact binomial coefficient; every intermediate division is exact.
    static BigUint binomial(std::int64_t k, std::int64_t r);
    static BigUint pow(const BigUint& base, int exponent);

    BigUint& mul_u32(std::uint32_t factor);
    BigUint operator*(const BigUint& other) const;
    // Divides in place; the remainder must be zero.
    BigUint& div_u32_exact(std::uint32_t divisor);
    BigUint shifted_right(std::int64_t bits) const;

    // -1, 0, +1 for <, ==, >.
    int compare(const BigUint& other) const;
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    bool is_zero() const { return limbs_.empty(); }
    std::int64_t bit_length() const;
    // Natural log; requires a nonzero value.
    double log_e() const;
    // Requires bit_length() <= 64.
    std::uint64_t to_u64() const;
    std::string to_string() const;

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

}  // namespace ldpc

#endif
