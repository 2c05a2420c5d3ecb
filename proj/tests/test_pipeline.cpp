#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "sdaree/codec.hpp"
#include "sdaree/pipeline.hpp"

using namespace sdaree;

namespace {

const KeyMaterial& reference_key() {
    static const KeyMaterial key = KeyMaterial::from_string("hello world");
    return key;
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<std::uint8_t> out(len);
    for (auto& b : out) b = static_cast<std::uint8_t>(dist(rng));
    return out;
}

KeyMaterial random_key(std::mt19937_64& rng, std::size_t max_len = 32) {
    std::uniform_int_distribution<std::size_t> len_dist(1, max_len);
    auto bytes = random_bytes(rng, len_dist(rng));
    bool all_zero = true;
    for (auto b : bytes) all_zero = all_zero && b == 0;
    if (all_zero) bytes[0] = 1;
    return KeyMaterial{bytes};
}

}  // namespace

TEST_CASE("frozen pipeline vectors") {
    const auto& key = reference_key();

    CHECK(sd_aree_encrypt({}, key).empty());
    CHECK(sd_aree_decrypt({}, key).empty());

    // 'a' packs to one 1x8 row; code 10 rotates it right by 2 -> 0x58;
    // the Caesar layer then adds code at position 0 -> 0x62
    const std::vector<std::uint8_t> one = {'a'};
    CHECK(hex_encode(sd_aree_encrypt(one, key)) == "62");

    const std::vector<std::uint8_t> aaaa = {'a', 'a', 'a', 'a'};
    CHECK(hex_encode(sd_aree_encrypt(aaaa, key)) == "90069ad0");
    CHECK(hex_encode(sd_aree_encrypt(aaaa, key, WrapMode::Paper255)) == "90079ad0");
    CHECK(sd_aree_decrypt(hex_decode("90069ad0"), key) == aaaa);
}

TEST_CASE("empty keys are rejected") {
    const std::vector<std::uint8_t> msg = {1, 2, 3};
    CHECK_THROWS_AS(sd_aree_encrypt(msg, KeyMaterial{}), InvalidKeyError);
    CHECK_THROWS_AS(sd_aree_decrypt(msg, KeyMaterial{}), InvalidKeyError);
}

TEST_CASE("round trip over random messages and keys") {
    std::mt19937_64 rng(73);
    std::uniform_int_distribution<std::size_t> len_dist(0, 300);
    for (int trial = 0; trial < 200; ++trial) {
        const auto key = random_key(rng);
        const auto msg = random_bytes(rng, len_dist(rng));
        const auto ct = sd_aree_encrypt(msg, key);
        CHECK(ct.size() == msg.size());
        CHECK(sd_aree_decrypt(ct, key) == msg);
    }
}

TEST_CASE("round trip covers every partial block shape") {
    std::mt19937_64 rng(79);
    const auto key = random_key(rng);
    for (std::size_t len = 0; len <= 64; ++len) {
        const auto msg = random_bytes(rng, len);
        CHECK(sd_aree_decrypt(sd_aree_encrypt(msg, key), key) == msg);
    }
}

TEST_CASE("run_pipeline with the standard stages equals sd_aree_encrypt") {
    std::mt19937_64 rng(83);
    const auto cfg = PipelineConfig::standard(reference_key());
    for (int trial = 0; trial < 20; ++trial) {
        const auto msg = random_bytes(rng, trial * 7);
        CHECK(run_pipeline(cfg, msg, Direction::Forward) ==
              sd_aree_encrypt(msg, reference_key()));
        CHECK(run_pipeline(cfg, sd_aree_encrypt(msg, reference_key()), Direction::Inverse) ==
              msg);
    }
}

TEST_CASE("a single Caesar stage reproduces the stream cipher") {
    PipelineConfig cfg{reference_key(), WrapMode::ByteMod256, {poly_caesar_stage(WrapMode::ByteMod256)}};
    const std::vector<std::uint8_t> aaaa = {'a', 'a', 'a', 'a'};
    CHECK(run_pipeline(cfg, aaaa, Direction::Forward) ==
          std::vector<std::uint8_t>{107, 111, 123, 171});
}

TEST_CASE("forward then inverse is the identity for stage subsets") {
    std::mt19937_64 rng(89);
    const std::vector<std::vector<CipherStage>> stage_sets = {
        {bit_cycle_stage()},
        {poly_caesar_stage(WrapMode::ByteMod256)},
        {bit_cycle_stage(), poly_caesar_stage(WrapMode::ByteMod256)},
        {poly_caesar_stage(WrapMode::ByteMod256), bit_cycle_stage()},
        {bit_cycle_stage(), bit_cycle_stage(), poly_caesar_stage(WrapMode::ByteMod256)},
    };
    for (const auto& stages : stage_sets) {
        PipelineConfig cfg{random_key(rng), WrapMode::ByteMod256, stages};
        const auto msg = random_bytes(rng, 100);
        const auto ct = run_pipeline(cfg, msg, Direction::Forward);
        CHECK(run_pipeline(cfg, ct, Direction::Inverse) == msg);
    }
}

TEST_CASE("run_pipeline validates its stage list") {
    PipelineConfig cfg{reference_key(), WrapMode::ByteMod256, {}};
    CHECK_THROWS_AS(run_pipeline(cfg, {}, Direction::Forward), std::invalid_argument);
}

TEST_CASE("a failing stage reports its name") {
    CipherStage broken{
        "broken",
        [](std::span<const std::uint8_t>, const KeySchedule&) -> std::vector<std::uint8_t> {
            throw std::runtime_error("boom");
        },
        [](std::span<const std::uint8_t>, const KeySchedule&) -> std::vector<std::uint8_t> {
            throw std::runtime_error("boom");
        },
    };
    PipelineConfig cfg{reference_key(), WrapMode::ByteMod256, {broken}};
    try {
        run_pipeline(cfg, {}, Direction::Forward);
        FAIL("expected StageError");
    } catch (const StageError& e) {
        CHECK(e.stage() == "broken");
    }
}

TEST_CASE("changing one plaintext byte only disturbs its own block") {
    std::mt19937_64 rng(97);
    const auto key = random_key(rng);
    const auto msg = random_bytes(rng, 128);
    const auto base = sd_aree_encrypt(msg, key);
    std::uniform_int_distribution<std::size_t> pos_dist(0, msg.size() - 1);
    std::uniform_int_distribution<int> bit_dist(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        auto mutated = msg;
        const std::size_t i = pos_dist(rng);
        mutated[i] ^= static_cast<std::uint8_t>(1 << bit_dist(rng));
        const auto ct = sd_aree_encrypt(mutated, key);
        for (std::size_t j = 0; j < ct.size(); ++j) {
            if (j / 8 != i / 8) REQUIRE(ct[j] == base[j]);
        }
    }
}
