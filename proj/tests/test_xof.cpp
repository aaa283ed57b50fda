#include <doctest.h>

#include <random>
#include <stdexcept>

#include "frodo/bytes.hpp"
#include "frodo/xof.hpp"

using namespace frodo;

TEST_CASE("keccak permutation of the zero state matches the reference state") {
    std::array<uint64_t, 25> lanes{};
    keccak_f1600(lanes);
    CHECK(lanes[0] == 0xF1258F7940E1DDE7ULL);
    CHECK(lanes[1] == 0x84D5CCF933C0478AULL);
    CHECK(lanes[24] == 0xEAF1FF7B5CECA249ULL);
}

TEST_CASE("keccak permutation is not an involution and stays injective") {
    std::mt19937_64 rng(7);
    std::array<uint64_t, 25> a{}, b{};
    for (auto& l : a) l = rng();
    b = a;
    b[3] ^= 1;  // distinct inputs

    auto a1 = a, b1 = b;
    keccak_f1600(a1);
    keccak_f1600(b1);
    CHECK(a1 != a);
    CHECK(a1 != b1);

    auto a2 = a1;
    keccak_f1600(a2);
    CHECK(a2 != a);
}

TEST_CASE("SHAKE digests of the empty string match FIPS 202 vectors") {
    auto s128 = Shake::hash(ShakeVariant::Shake128, {}, 32);
    CHECK(to_hex(s128) == "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26");

    auto s256 = Shake::hash(ShakeVariant::Shake256, {}, 32);
    CHECK(to_hex(s256) ==
          "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");

    CHECK(Shake::hash(ShakeVariant::Shake128, {}, 0).empty());
}

TEST_CASE("incremental absorb/squeeze equals the one-shot digest") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; trial++) {
        const size_t in_len = rng() % 700;
        const size_t out_len = 1 + rng() % 700;
        Bytes input(in_len);
        for (auto& b : input) b = static_cast<uint8_t>(rng());

        for (auto v : {ShakeVariant::Shake128, ShakeVariant::Shake256}) {
            Bytes oneshot = Shake::hash(v, input, out_len);

            Shake inc(v);
            size_t off = 0;
            while (off < in_len) {
                const size_t chunk = std::min<size_t>(1 + rng() % 97, in_len - off);
                inc.absorb(std::span(input).subspan(off, chunk));
                off += chunk;
            }
            Bytes out(out_len);
            size_t produced = 0;
            while (produced < out_len) {
                const size_t chunk = std::min<size_t>(1 + rng() % 91, out_len - produced);
                inc.squeeze(std::span(out).subspan(produced, chunk));
                produced += chunk;
            }
            CHECK(out == oneshot);
        }
    }
}

TEST_CASE("shorter digests are prefixes of longer ones") {
    Bytes input = from_hex("00010203aabbccdd");
    for (auto v : {ShakeVariant::Shake128, ShakeVariant::Shake256}) {
        auto longer = Shake::hash(v, input, 500);
        for (size_t len : {size_t{1}, size_t{17}, size_t{168}, size_t{499}}) {
            auto shorter = Shake::hash(v, input, len);
            CHECK(std::equal(shorter.begin(), shorter.end(), longer.begin()));
        }
    }
}

TEST_CASE("absorbing after squeezing is rejected") {
    Shake s(ShakeVariant::Shake128);
    Bytes out(4);
    s.squeeze(out);
    uint8_t byte = 0;
    CHECK_THROWS_AS(s.absorb({&byte, 1}), std::logic_error);
}
