#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdaree {

using BigUint = boost::multiprecision::cpp_int;

class InvalidKeyError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The pass-key, taken as raw bytes with no normalization.
struct KeyMaterial {
    std::vector<std::uint8_t> bytes;

    static KeyMaterial from_string(std::string_view text) {
        return {{text.begin(), text.end()}};
    }
    static KeyMaterial from_bytes(std::span<const std::uint8_t> data) {
        return {{data.begin(), data.end()}};
    }
    std::size_t length() const { return bytes.size(); }
};

/// Weighted key checksum: sum of byte_i * key_length * 2^i over all key
/// positions i. Exact arithmetic; 2^i grows with the key, so fixed-width
/// accumulation would silently wrap and change every derived constant.
inline BigUint derive_csum(const KeyMaterial& key) {
    if (key.bytes.empty()) throw InvalidKeyError("derive_csum: key must not be empty");
    BigUint sum = 0;
    BigUint weight = key.length();  // key_length * 2^i, doubled each step
    for (std::uint8_t b : key.bytes) {
        sum += weight * b;
        weight <<= 1;
    }
    return sum;
}

/// Sum of decimal digits, one pass (not iterated down to a single digit).
inline std::uint64_t digit_sum(const BigUint& n) {
    if (n < 0) throw std::invalid_argument("digit_sum: negative input");
    std::uint64_t sum = 0;
    for (char c : n.str()) sum += static_cast<std::uint64_t>(c - '0');
    return sum;
}

/// Largest prime index served; keeps the sieve below ~200 MB. Realistic keys
/// derive indices in the low tens of thousands.
inline constexpr std::uint64_t kMaxPrimeIndex = 10'000'000;

namespace detail {

inline const std::vector<std::uint64_t>& primes_with_count(std::size_t count) {
    thread_local std::vector<std::uint64_t> cache;
    if (cache.size() >= count) return cache;

    // Rosser's bound p_n < n(ln n + ln ln n) for n >= 6.
    const double nd = static_cast<double>(count);
    const std::size_t limit =
        count < 6 ? 16
                  : static_cast<std::size_t>(nd * (std::log(nd) + std::log(std::log(nd)))) + 16;

    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::size_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    cache = std::move(primes);
    return cache;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Square-and-multiply; constant memory regardless of the exponent.
inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

}  // namespace detail

/// The nth prime, with 2 as the 1st.
inline std::uint64_t nth_prime(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("nth_prime: index starts at 1");
    if (n > kMaxPrimeIndex) throw std::length_error("nth_prime: index too large");
    return detail::primes_with_count(static_cast<std::size_t>(n))[n - 1];
}

/// All key-derived constants driving both cipher stages.
///
/// Derivation: pseudo_code is the decimal digit sum of csum; code is
/// pseudo_code mod 16, falling back to pseudo_code itself when that residue
/// is zero; power_ex is pseudo_code mod key_length, falling back to code when
/// the residue is 0 or 1. The Caesar offsets are reduced modulo the nth
/// prime, n = power_ex * code * 10.
struct KeySchedule {
    BigUint csum;
    std::uint64_t pseudo_code = 0;
    std::uint64_t code = 0;       // Caesar constant and matrix cycle count
    std::uint64_t power_ex = 0;   // base of the positional offset
    std::uint64_t prime_index = 0;
    std::uint64_t modulus = 0;    // nth_prime(prime_index)

    bool operator==(const KeySchedule&) const = default;
};

inline KeySchedule derive_schedule(const KeyMaterial& key) {
    KeySchedule s;
    s.csum = derive_csum(key);
    s.pseudo_code = digit_sum(s.csum);

    s.code = s.pseudo_code % 16;
    if (s.code == 0) s.code = s.pseudo_code;
    if (s.code == 0) {
        // csum == 0 is possible only when every key byte is zero; no rule
        // yields a usable code from that.
        throw InvalidKeyError("derive_schedule: key bytes are all zero");
    }

    s.power_ex = s.pseudo_code % key.length();
    if (s.power_ex <= 1) s.power_ex = s.code;

    const auto index = static_cast<unsigned __int128>(s.power_ex) * s.code * 10;
    if (index > kMaxPrimeIndex) throw std::length_error("derive_schedule: prime index too large");
    s.prime_index = static_cast<std::uint64_t>(index);
    s.modulus = nth_prime(s.prime_index);
    return s;
}

/// Additive Caesar offset for position i: 0 at position 0, otherwise
/// power_ex^i mod modulus.
inline std::uint64_t offset_at(const KeySchedule& s, std::uint64_t i) {
    if (i == 0) return 0;
    return detail::pow_mod(s.power_ex, i, s.modulus);
}

/// Position-indexed view over the offsets of one schedule.
class OffsetStream {
public:
    explicit OffsetStream(KeySchedule schedule) : schedule_(std::move(schedule)) {}

    std::uint64_t at(std::uint64_t i) const { return offset_at(schedule_, i); }
    const KeySchedule& schedule() const { return schedule_; }

private:
    KeySchedule schedule_;
};

inline std::uint64_t offset_at(const OffsetStream& stream, std::uint64_t i) {
    return stream.at(i);
}

}  // namespace sdaree
