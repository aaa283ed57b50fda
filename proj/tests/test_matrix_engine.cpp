#include <doctest.h>

#include <random>

#include "frodo/matrix_engine.hpp"

using namespace frodo;

namespace {

MatrixZq random_zq(uint32_t rows, uint32_t cols, const ParameterSet& p, std::mt19937& rng) {
    MatrixZq m(rows, cols);
    for (auto& v : m.data()) v = static_cast<uint16_t>(rng() & p.q_mask());
    return m;
}

SignedMatrix random_signed(uint32_t rows, uint32_t cols, const ParameterSet& p,
                           std::mt19937& rng) {
    SignedMatrix m(rows, cols);
    const int d = static_cast<int>(p.d_max);
    for (auto& v : m.data()) v = static_cast<int8_t>(int(rng() % (2 * d + 1)) - d);
    return m;
}

}  // namespace

TEST_CASE("mul_sign_extract spot values") {
    const auto& p = params_for(SecurityLevel::Frodo640);
    CHECK(mul_sign_extract(7, -3, p) == 32747);  // -21 mod 2^15
    CHECK(mul_sign_extract(12345, 0, p) == 0);
    CHECK(mul_sign_extract(0, 15, p) == 0);
    CHECK_THROWS_AS(mul_sign_extract(1, 16, p), std::invalid_argument);
}

TEST_CASE("mul_sign_extract equals direct signed multiplication (sampled)") {
    // The full exhaustive sweep runs in the acceptance suite; this samples
    // densely enough to catch regressions quickly.
    std::mt19937 rng(2024);
    for (auto level : {SecurityLevel::Frodo640, SecurityLevel::Frodo976}) {
        const auto& p = params_for(level);
        for (int i = 0; i < 50000; i++) {
            const uint16_t x = static_cast<uint16_t>(rng());
            const int s = int(rng() % 31) - 15;
            const int64_t direct = ((int64_t{x} * s) % p.q + p.q) % p.q;
            CHECK(mul_sign_extract(x, s, p) == static_cast<uint16_t>(direct));
        }
    }
}

TEST_CASE("mac_block_product basics") {
    const auto& p = params_for(SecurityLevel::Frodo640);

    SUBCASE("zero streams return the addend") {
        std::vector<Block2x4> as(4);
        std::vector<SBlock4x4> ss(4);
        Block2x4 e;
        for (size_t i = 0; i < e.e.size(); i++) e.e[i] = static_cast<uint16_t>(100 + i);
        auto out = mac_block_product(as, ss, e, p);
        CHECK(out.e == e.e);
    }

    SUBCASE("identity-patterned signed block selects left rows") {
        Block2x4 a;
        for (size_t i = 0; i < 8; i++) a.e[i] = static_cast<uint16_t>(i + 1);
        SBlock4x4 s;
        for (int i = 0; i < 4; i++) s.e[i * 4 + i] = 1;
        Block2x4 e{};
        auto out = mac_block_product({&a, 1}, {&s, 1}, e, p);
        CHECK(out.e == a.e);
    }

    SUBCASE("stream length mismatch throws") {
        std::vector<Block2x4> as(2);
        std::vector<SBlock4x4> ss(3);
        CHECK_THROWS_AS(mac_block_product(as, ss, Block2x4{}, p), std::invalid_argument);
    }
}

TEST_CASE("matmul_mac equals the naive oracle on toy instances") {
    std::mt19937 rng(42);
    for (auto level : all_levels) {
        const auto& p = params_for(level);
        CAPTURE(p.name);
        for (uint32_t n : {8u, 16u}) {
            MatrixZq a = random_zq(n, n, p, rng);
            SignedMatrix s = random_signed(n, p.nbar, p, rng);
            MatrixZq e = random_zq(n, p.nbar, p, rng);

            MaterializedRows rows(a);
            WriteStats stats;
            MatrixZq got = matmul_mac(rows, s, e, p, false, &stats);
            CHECK(got == naive_mul_add(a, s, e, p));

            // Every result element written exactly once in MAC mode.
            for (uint32_t w : stats.writes) CHECK(w == 1);
        }
    }
}

TEST_CASE("trivial matmul_mac cases") {
    const auto& p = params_for(SecurityLevel::Frodo640);
    MatrixZq a(8, 8);
    SignedMatrix s(8, p.nbar);
    MatrixZq e(8, p.nbar);
    MaterializedRows rows(a);
    auto out = matmul_mac(rows, s, e, p);
    for (uint16_t v : out.data()) CHECK(v == 0);
}

TEST_CASE("matmul_ma matches transposed MAC and the oracle, with partial-sum trace") {
    std::mt19937 rng(77);
    for (auto level : all_levels) {
        const auto& p = params_for(level);
        CAPTURE(p.name);
        const uint32_t n = 8;

        MatrixZq a = random_zq(n, n, p, rng);
        SignedMatrix sp = random_signed(p.nbar, n, p, rng);  // S' is nbar x n
        MatrixZq ep(p.nbar, n);
        for (auto& v : ep.data()) v = static_cast<uint16_t>(rng() & p.q_mask());

        // (S' A + E')^T via MA mode.
        SignedMatrix sp_t = sp.transposed();
        MatrixZq ep_t = ep.transposed();
        MaterializedRows rows_ma(a);
        WriteStats stats;
        MatrixZq ma = matmul_ma(rows_ma, sp_t, ep_t, p, &stats);

        // Same value through MAC on the transposed expression A^T (S')^T + E'^T.
        MatrixZq a_t = a.transposed();
        MaterializedRows rows_mac(a_t);
        MatrixZq mac = matmul_mac(rows_mac, sp_t, ep_t, p);
        CHECK(ma == mac);

        // And against the naive oracle on the original orientation.
        MatrixZq widened_sp(p.nbar, n);
        MatrixZq direct(p.nbar, n);
        for (uint32_t i = 0; i < p.nbar; i++)
            for (uint32_t j = 0; j < n; j++) {
                int64_t acc = ep.at(i, j);
                for (uint32_t k = 0; k < n; k++) acc += int64_t{sp.at(i, k)} * a.at(k, j);
                acc %= p.q;
                if (acc < 0) acc += p.q;
                direct.at(i, j) = static_cast<uint16_t>(acc);
            }
        CHECK(ma == direct.transposed());

        // MA mode writes each result element once per phase, n/4 phases total.
        for (uint32_t w : stats.writes) CHECK(w == n / 4);

        // Phase-by-phase: after phase k the accumulator holds
        // E^T + sum_{j<=k} contributions.
        MatrixZq acc = ep_t;
        std::vector<uint16_t> rows4(size_t{4} * n);
        for (uint32_t k = 0; k < n / 4; k++) {
            for (uint32_t t = 0; t < 4; t++) {
                auto r = a.row(4 * k + t);
                std::copy(r.begin(), r.end(), rows4.begin() + size_t{t} * n);
            }
            ma_phase(rows4, k, sp_t, acc, p);

            MatrixZq partial(p.nbar, n);
            for (uint32_t i = 0; i < p.nbar; i++)
                for (uint32_t j = 0; j < n; j++) {
                    int64_t sum = ep.at(i, j);
                    for (uint32_t kk = 0; kk < 4 * (k + 1); kk++)
                        sum += int64_t{sp.at(i, kk)} * a.at(kk, j);
                    sum %= p.q;
                    if (sum < 0) sum += p.q;
                    partial.at(i, j) = static_cast<uint16_t>(sum);
                }
            CHECK(acc == partial.transposed());
        }
        CHECK(acc == ma);
    }
}

TEST_CASE("zero inputs through MA mode") {
    const auto& p = params_for(SecurityLevel::Frodo976);
    MatrixZq a(8, 8);
    SignedMatrix s_t(8, p.nbar);
    MatrixZq e_t(8, p.nbar);
    MaterializedRows rows(a);
    auto out = matmul_ma(rows, s_t, e_t, p);
    for (uint16_t v : out.data()) CHECK(v == 0);
}

TEST_CASE("mat_sub_mul computes C - B'S and round-trips the protocol identity") {
    std::mt19937 rng(11);
    const auto& p = params_for(SecurityLevel::Frodo640);
    const uint32_t n = 16;

    MatrixZq bp = random_zq(p.nbar, n, p, rng);
    SignedMatrix s = random_signed(n, p.nbar, p, rng);
    MatrixZq c = random_zq(p.nbar, p.nbar, p, rng);

    MatrixZq got = mat_sub_mul(c, bp, s, p);
    MatrixZq expect = naive_mul_add(bp, s, c, p, /*subtract=*/true);
    CHECK(got == expect);

    SUBCASE("S = 0 leaves C unchanged") {
        SignedMatrix zero(n, p.nbar);
        CHECK(mat_sub_mul(c, bp, zero, p) == c);
    }

    SUBCASE("C = B'S + X recovers X") {
        MatrixZq x = random_zq(p.nbar, p.nbar, p, rng);
        MatrixZq bps = naive_mul_add(bp, s, x, p);
        CHECK(mat_sub_mul(bps, bp, s, p) == x);
    }
}

TEST_CASE("mat_add_blocks adds elementwise mod q") {
    std::mt19937 rng(13);
    const auto& p = params_for(SecurityLevel::Frodo1344);
    MatrixZq x = random_zq(p.nbar, p.nbar, p, rng);
    MatrixZq y = random_zq(p.nbar, p.nbar, p, rng);

    MatrixZq sum = mat_add_blocks(x, y, p);
    for (uint32_t r = 0; r < p.nbar; r++)
        for (uint32_t c = 0; c < p.nbar; c++)
            CHECK(sum.at(r, c) == ((x.at(r, c) + y.at(r, c)) & p.q_mask()));

    CHECK(mat_add_blocks(x, y, p) == mat_add_blocks(y, x, p));

    MatrixZq zero(p.nbar, p.nbar);
    CHECK(mat_add_blocks(x, zero, p) == x);
}

TEST_CASE("all engine outputs stay below q") {
    std::mt19937 rng(21);
    const auto& p = params_for(SecurityLevel::Frodo640);
    const uint32_t n = 64;
    MatrixZq a = random_zq(n, n, p, rng);
    SignedMatrix s = random_signed(n, p.nbar, p, rng);
    MatrixZq e = random_zq(n, p.nbar, p, rng);
    MaterializedRows rows(a);
    MatrixZq out = matmul_mac(rows, s, e, p);
    for (uint16_t v : out.data()) CHECK(v < p.q);
}
