#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frqa/audio.hpp"

using namespace frqa::audio;

TEST_CASE("two's-complement encode, q=3 table rows") {
    CHECK(encode_twos_complement(3, 3).str() == "011");
    CHECK(encode_twos_complement(0, 3).str() == "000");
    CHECK(encode_twos_complement(-4, 3).str() == "100");
    CHECK_THROWS_AS(encode_twos_complement(4, 3), frqa::RangeError);
    CHECK_THROWS_AS(encode_twos_complement(-5, 3), frqa::RangeError);
}

TEST_CASE("two's-complement decode") {
    CHECK(decode_twos_complement(BitString("101")) == -3);
    CHECK(decode_twos_complement(BitString("000")) == 0);
    CHECK(decode_twos_complement(BitString("1000")) == -8);
    CHECK_THROWS(decode_twos_complement(BitString("")));
}

TEST_CASE("round trip over the full range, q = 1..8") {
    for (int q = 1; q <= 8; ++q) {
        const std::int64_t lo = -(std::int64_t{1} << (q - 1));
        const std::int64_t hi = (std::int64_t{1} << (q - 1)) - 1;
        for (std::int64_t v = lo; v <= hi; ++v) {
            CHECK(decode_twos_complement(encode_twos_complement(v, q)) == v);
        }
    }
}

TEST_CASE("resolution value to signed amplitude") {
    CHECK(resolution_to_amplitude(6, 3) == 2);
    CHECK(resolution_to_amplitude(4, 3) == 0);
    CHECK(resolution_to_amplitude(0, 4) == -8);
    CHECK_THROWS_AS(resolution_to_amplitude(8, 3), frqa::RangeError);
}

TEST_CASE("MSB-flip law: amplitude encoding is the binary form with bit 0 complemented") {
    for (int q = 1; q <= 8; ++q) {
        for (std::uint64_t r = 0; r < (std::uint64_t{1} << q); ++r) {
            BitString plain = sample_to_resolution_bits(resolution_to_amplitude(r, q), q);
            // plain is the binary form of r again; flipping its MSB must give
            // the signed encoding.
            BitString flipped = plain;
            flipped.bits[0] ^= 1;
            CHECK(flipped == encode_twos_complement(resolution_to_amplitude(r, q), q));
        }
    }
}

TEST_CASE("padding to a power of two") {
    std::vector<std::int64_t> thirteen(13, 1);
    const AudioSignal sig(thirteen, 3);
    const AudioSignal padded = pad_to_power_of_two(sig);
    CHECK(padded.length() == 16);
    CHECK(padded.time_bits() == 4);
    for (int t = 13; t < 16; ++t) {
        CHECK(padded.samples[static_cast<std::size_t>(t)] == 0);
    }
    for (int t = 0; t < 13; ++t) {
        CHECK(padded.samples[static_cast<std::size_t>(t)] == 1);
    }

    const AudioSignal eight(std::vector<std::int64_t>(8, -1), 2);
    CHECK(pad_to_power_of_two(eight) == eight);
    CHECK(eight.time_bits() == 3);

    const AudioSignal one(std::vector<std::int64_t>{2}, 3);
    const AudioSignal one_padded = pad_to_power_of_two(one);
    CHECK(one_padded.length() == 2);
    CHECK(one_padded.time_bits() == 1);
    CHECK(one_padded.samples == std::vector<std::int64_t>{2, 0});
}

TEST_CASE("sample range validation names the offending index") {
    CHECK_THROWS_WITH_AS(AudioSignal({0, 9}, 3), doctest::Contains("sample 1"), frqa::RangeError);
}

TEST_CASE("inferred resolution is the smallest fitting q") {
    CHECK(infer_resolution({0}) == 1);
    CHECK(infer_resolution({-1, 0}) == 1);
    CHECK(infer_resolution({1}) == 2);
    CHECK(infer_resolution({3, -4}) == 3);
    CHECK(infer_resolution({127}) == 8);
    CHECK(infer_resolution({-128}) == 8);
}

TEST_CASE("addition oracle") {
    const AudioSignal a({3}, 3);
    const AudioSignal b({-2}, 3);
    const AudioSignal sum = oracle_add(a, b);
    CHECK(sum.q == 4);
    CHECK(sum.samples == std::vector<std::int64_t>{1});

    const AudioSignal zeros({0, 0}, 3);
    const AudioSignal x({3, -3}, 3);
    const AudioSignal widened = oracle_add(zeros, x);
    CHECK(widened.q == 4);
    CHECK(widened.samples == x.samples);

    const AudioSignal extreme = oracle_add(AudioSignal({-4}, 3), AudioSignal({-4}, 3));
    CHECK(extreme.q == 4);
    CHECK(extreme.samples == std::vector<std::int64_t>{-8});

    CHECK(oracle_add(a, b) == oracle_add(b, a));
    CHECK_THROWS_AS(oracle_add(AudioSignal({1}, 2), AudioSignal({1}, 3)), frqa::ShapeError);
    CHECK_THROWS_AS(oracle_add(AudioSignal({1, 1}, 3), AudioSignal({1}, 3)), frqa::ShapeError);
}

TEST_CASE("inversion oracle") {
    CHECK(oracle_invert(AudioSignal({3, -1, 0}, 3)).samples == std::vector<std::int64_t>{-3, 1, 0});
    CHECK(oracle_invert(AudioSignal({0, 0, 0, 0}, 3)).samples == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(oracle_invert(AudioSignal({-4}, 3)).samples == std::vector<std::int64_t>{-4});

    // Involution over every sample value, fixed point included.
    for (int q = 1; q <= 6; ++q) {
        for (std::int64_t v = -(std::int64_t{1} << (q - 1)); v < (std::int64_t{1} << (q - 1)); ++v) {
            const AudioSignal s({v}, q);
            CHECK(oracle_invert(oracle_invert(s)) == s);
        }
    }
}

TEST_CASE("delay oracle") {
    const AudioSignal x({1, 2, 3, 4, 5, 6, 7, -8}, 4);
    CHECK(oracle_delay(x, 2).samples == std::vector<std::int64_t>{0, 0, 1, 2, 3, 4, 5, 6});
    CHECK(oracle_delay(x, 0) == x);
    CHECK(oracle_delay(AudioSignal({1, 2, 3, 4}, 4), 3).samples ==
          std::vector<std::int64_t>{0, 0, 0, 1});
    CHECK_THROWS_AS(oracle_delay(x, 8), frqa::RangeError);
    CHECK_THROWS_AS(oracle_delay(x, -1), frqa::RangeError);
}

TEST_CASE("reversal oracle") {
    CHECK(oracle_reverse(AudioSignal({1, 2, 3, 4}, 4)).samples == std::vector<std::int64_t>{4, 3, 2, 1});
    const AudioSignal palindrome({1, 2, 2, 1}, 3);
    CHECK(oracle_reverse(palindrome) == palindrome);
    const AudioSignal x({5, -3, 0, 7}, 4);
    CHECK(oracle_reverse(oracle_reverse(x)) == x);
}

TEST_CASE("restricted reversal oracle") {
    const AudioSignal x({10, 11, 12, 13, 14, 15, 16, 17}, 6);
    // Fixing the time MSB to 1 reverses only the last half.
    CHECK(oracle_reverse_restricted(x, {{0, true}}).samples ==
          std::vector<std::int64_t>{10, 11, 12, 13, 17, 16, 15, 14});
    CHECK(oracle_reverse_restricted(x, {}) == oracle_reverse(x));
    // All bits fixed: a single index matches and no bits are left to flip.
    CHECK(oracle_reverse_restricted(x, {{0, true}, {1, false}, {2, true}}) == x);
    CHECK_THROWS_AS(oracle_reverse_restricted(x, {{3, true}}), frqa::RangeError);
}

TEST_CASE("random oracle sanity: delay then reverse distributes as expected") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::int64_t> samples(8);
        for (auto &s : samples) {
            s = static_cast<std::int64_t>(rng() % 16) - 8;
        }
        const AudioSignal x(samples, 4);
        const AudioSignal lhs = oracle_reverse(oracle_delay(x, 2));
        for (int t = 0; t < 6; ++t) {
            CHECK(lhs.samples[static_cast<std::size_t>(t)] == x.samples[static_cast<std::size_t>(5 - t)]);
        }
        CHECK(lhs.samples[6] == 0);
        CHECK(lhs.samples[7] == 0);
    }
}
