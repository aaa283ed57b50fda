#include <doctest.h>

#include "frodo/params.hpp"
#include "frodo/sampling.hpp"

using namespace frodo;

TEST_CASE("parameter sets match the level table") {
    const auto& p640 = params_for(SecurityLevel::Frodo640);
    CHECK(p640.d_bits == 15);
    CHECK(p640.q == 32768);
    CHECK(p640.n == 640);
    CHECK(p640.nbar == 8);
    CHECK(p640.b_bits == 2);
    CHECK(p640.d_max == 12);
    CHECK(p640.shake == ShakeVariant::Shake128);

    const auto& p976 = params_for(SecurityLevel::Frodo976);
    CHECK(p976.d_bits == 16);
    CHECK(p976.q == 65536);
    CHECK(p976.n == 976);
    CHECK(p976.b_bits == 3);
    CHECK(p976.d_max == 10);
    CHECK(p976.shake == ShakeVariant::Shake256);
    CHECK(p976.cdf_table.size() == 11);

    const auto& p1344 = params_for(SecurityLevel::Frodo1344);
    CHECK(p1344.d_bits == 16);
    CHECK(p1344.q == 65536);
    CHECK(p1344.n == 1344);
    CHECK(p1344.b_bits == 4);
    CHECK(p1344.d_max == 6);
    CHECK(p1344.shake == ShakeVariant::Shake256);
}

TEST_CASE("structural invariants hold for every level") {
    for (auto level : all_levels) {
        const auto& p = params_for(level);
        CAPTURE(p.name);

        CHECK(p.q == (1u << p.d_bits));
        CHECK((p.d_bits == 15 || p.d_bits == 16));
        CHECK(p.nbar == 8);

        // CDF table: strictly increasing, ends at 2^15-1, length d+1.
        CHECK(p.cdf_table.size() == p.d_max + 1);
        CHECK(p.cdf_table.back() == 32767);
        for (size_t i = 1; i < p.cdf_table.size(); i++)
            CHECK(p.cdf_table[i] > p.cdf_table[i - 1]);

        CHECK(p.len_u == p.nbar * p.nbar * p.b_bits / 8);
        CHECK(p.len_u == 8 * p.b_bits);
        CHECK((p.shake == ShakeVariant::Shake128) == (level == SecurityLevel::Frodo640));
    }
}

TEST_CASE("derived byte lengths reproduce the published object sizes") {
    const auto& p640 = params_for(SecurityLevel::Frodo640);
    CHECK(p640.len_pk == 9616);
    CHECK(p640.len_sk == 19888);
    CHECK(p640.len_ct == 9752);
    CHECK(p640.len_ss == 16);

    const auto& p976 = params_for(SecurityLevel::Frodo976);
    CHECK(p976.len_pk == 15632);
    CHECK(p976.len_sk == 31296);
    CHECK(p976.len_ct == 15792);
    CHECK(p976.len_ss == 24);

    const auto& p1344 = params_for(SecurityLevel::Frodo1344);
    CHECK(p1344.len_pk == 21520);
    CHECK(p1344.len_sk == 43088);
    CHECK(p1344.len_ct == 21696);
    CHECK(p1344.len_ss == 32);
}

TEST_CASE("every 16-bit input samples within the magnitude bound") {
    for (auto level : all_levels) {
        const auto& p = params_for(level);
        CAPTURE(p.name);
        int max_mag = 0;
        for (uint32_t r = 0; r <= 0xFFFF; r++) {
            const int e = sample_cdf(static_cast<uint16_t>(r), p);
            const int mag = e < 0 ? -e : e;
            if (mag > max_mag) max_mag = mag;
        }
        CHECK(max_mag == static_cast<int>(p.d_max));
    }
}

TEST_CASE("repeated params_for calls return the same constants") {
    const auto& a = params_for(SecurityLevel::Frodo976);
    const auto& b = params_for(SecurityLevel::Frodo976);
    CHECK(&a == &b);
}
