#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "sdaree/key_schedule.hpp"

using namespace sdaree;

namespace {

// Independent sieve, kept separate from the library's prime machinery.
std::vector<std::uint64_t> sieve_oracle(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return primes;
}

bool is_prime_trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

KeyMaterial random_key(std::mt19937_64& rng, std::size_t max_len = 64) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    std::uniform_int_distribution<int> byte_dist(0, 255);
    KeyMaterial key;
    key.bytes.resize(len_dist(rng));
    for (auto& b : key.bytes) b = static_cast<std::uint8_t>(byte_dist(rng));
    if (std::all_of(key.bytes.begin(), key.bytes.end(), [](auto b) { return b == 0; })) {
        key.bytes[0] = 1;  // all-zero keys derive no schedule
    }
    return key;
}

}  // namespace

TEST_CASE("derive_csum weights each byte by key length and 2^i") {
    CHECK(derive_csum(KeyMaterial::from_string("hello world")) == 2344166);
    CHECK(derive_csum(KeyMaterial::from_string("a")) == 97);
    CHECK_THROWS_AS(derive_csum(KeyMaterial{}), InvalidKeyError);
}

TEST_CASE("derive_csum is exact for long keys") {
    // 2^i overflows any fixed width well before i = 200
    KeyMaterial key;
    key.bytes.assign(200, 0xff);
    const BigUint expected = 255 * 200 * ((BigUint(1) << 200) - 1);
    CHECK(derive_csum(key) == expected);
}

TEST_CASE("digit_sum sums decimal digits in one pass") {
    CHECK(digit_sum(2344166) == 26);
    CHECK(digit_sum(0) == 0);
    CHECK(digit_sum(999) == 27);
    CHECK_THROWS_AS(digit_sum(BigUint(-1)), std::invalid_argument);
}

TEST_CASE("digit_sum is congruent to its argument mod 9") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        BigUint n = rng();
        n = n * rng() + rng();  // spill past 64 bits
        CHECK(digit_sum(n) % 9 == static_cast<std::uint64_t>(n % 9));
    }
}

TEST_CASE("nth_prime indexes from 2 as the first prime") {
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(100) == 541);
    CHECK(nth_prime(400) == 2741);
    CHECK_THROWS_AS(nth_prime(0), std::invalid_argument);
}

TEST_CASE("nth_prime matches a sieve oracle and is strictly increasing") {
    const auto primes = sieve_oracle(10'000);
    REQUIRE(primes.size() >= 1000);
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        const std::uint64_t p = nth_prime(n);
        CHECK(p == primes[n - 1]);
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("nth_prime outputs are prime by trial division") {
    for (std::uint64_t n : {1ull, 7ull, 100ull, 400ull, 2560ull}) {
        CHECK(is_prime_trial_division(nth_prime(n)));
    }
}

TEST_CASE("derive_schedule reproduces the reference key") {
    const auto s = derive_schedule(KeyMaterial::from_string("hello world"));
    CHECK(s.csum == 2344166);
    CHECK(s.pseudo_code == 26);
    CHECK(s.code == 10);
    CHECK(s.power_ex == 4);
    CHECK(s.prime_index == 400);
    CHECK(s.modulus == 2741);
}

TEST_CASE("derive_schedule applies both fallbacks for a single-byte key") {
    // 'a': pseudo_code 16 -> residue mod 16 is 0 -> code = 16;
    // 16 mod 1 = 0 -> power_ex falls back to code.
    const auto s = derive_schedule(KeyMaterial::from_string("a"));
    CHECK(s.pseudo_code == 16);
    CHECK(s.code == 16);
    CHECK(s.power_ex == 16);
    CHECK(s.prime_index == 2560);
    CHECK(s.modulus == 22943);
}

TEST_CASE("derive_schedule rejects empty and all-zero keys") {
    CHECK_THROWS_AS(derive_schedule(KeyMaterial{}), InvalidKeyError);
    KeyMaterial zeros;
    zeros.bytes.assign(4, 0);
    CHECK_THROWS_AS(derive_schedule(zeros), InvalidKeyError);
}

TEST_CASE("derive_schedule is a pure function of the key bytes") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto key = random_key(rng);
        CHECK(derive_schedule(key) == derive_schedule(key));
    }
}

TEST_CASE("code stays within its derived range") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = derive_schedule(random_key(rng));
        CHECK(s.code >= 1);
        CHECK(s.code <= s.pseudo_code);
        if (s.pseudo_code % 16 != 0) {
            CHECK(s.code <= 15);
        }
        CHECK(s.power_ex >= 1);
        CHECK(s.prime_index == s.power_ex * s.code * 10);
        CHECK(is_prime_trial_division(s.modulus));
    }
}

TEST_CASE("offset_at pins the reference offsets") {
    const auto s = derive_schedule(KeyMaterial::from_string("hello world"));
    CHECK(offset_at(s, 0) == 0);
    CHECK(offset_at(s, 1) == 4);
    CHECK(offset_at(s, 3) == 64);
    CHECK(offset_at(s, 100) == 478);
}

TEST_CASE("offset_at matches the naive repeated-multiplication oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto s = derive_schedule(random_key(rng));
        const OffsetStream stream(s);
        BigUint naive = 1;
        for (std::uint64_t i = 1; i <= 30; ++i) {
            naive *= s.power_ex;
            const auto expected = static_cast<std::uint64_t>(naive % s.modulus);
            CHECK(offset_at(s, i) == expected);
            CHECK(offset_at(stream, i) == expected);
        }
        CHECK(stream.at(0) == 0);
    }
}

TEST_CASE("offsets stay below the modulus") {
    std::mt19937_64 rng(17);
    const auto s = derive_schedule(random_key(rng));
    for (std::uint64_t i = 0; i < 500; ++i) {
        CHECK(offset_at(s, i) < s.modulus);
    }
}
