#include "frodo/kem.hpp"

#include <stdexcept>

#include "frodo/codec.hpp"
#include "frodo/matrix_engine.hpp"
#include "frodo/sampling.hpp"
#include "frodo/xof.hpp"

namespace frodo {
namespace {

// Streams rows of A without materializing the full matrix.
class GeneratedRows final : public RowBlockProvider {
  public:
    GeneratedRows(std::span<const uint8_t> seed_a, const ParameterSet& p)
        : m_stream(seed_a, p), m_p(p) {}
    uint32_t rows() const override { return m_p.n; }
    uint32_t cols() const override { return m_p.n; }
    std::span<const uint16_t> row(uint32_t r) override {
        if (r != m_stream.next_index())
            throw std::logic_error("GeneratedRows: rows must be consumed in order");
        m_buf = m_stream.next_row();
        return m_buf;
    }

  private:
    RowStream m_stream;
    const ParameterSet& m_p;
    std::vector<uint16_t> m_buf;
};

// Sample expansion slices. KeyGen order is S^T then E; Encaps order is
// S', E', E''.
struct KeyGenSamples {
    SignedMatrix s_t;  // nbar x n
    SignedMatrix e;    // n x nbar
};

KeyGenSamples split_keygen_samples(const SignedMatrix& flat, const ParameterSet& p) {
    KeyGenSamples out{SignedMatrix(p.nbar, p.n), SignedMatrix(p.n, p.nbar)};
    auto src = flat.data();
    std::copy(src.begin(), src.begin() + p.n * p.nbar, out.s_t.data().begin());
    std::copy(src.begin() + p.n * p.nbar, src.end(), out.e.data().begin());
    return out;
}

struct EncapsSamples {
    SignedMatrix s_prime;   // nbar x n
    SignedMatrix e_prime;   // nbar x n
    SignedMatrix e_dprime;  // nbar x nbar
};

EncapsSamples split_encaps_samples(const SignedMatrix& flat, const ParameterSet& p) {
    EncapsSamples out{SignedMatrix(p.nbar, p.n), SignedMatrix(p.nbar, p.n),
                      SignedMatrix(p.nbar, p.nbar)};
    auto src = flat.data();
    const size_t nn = size_t{p.n} * p.nbar;
    std::copy(src.begin(), src.begin() + nn, out.s_prime.data().begin());
    std::copy(src.begin() + nn, src.begin() + 2 * nn, out.e_prime.data().begin());
    std::copy(src.begin() + 2 * nn, src.end(), out.e_dprime.data().begin());
    return out;
}

// Sign extension of a sampled matrix into Z_q, used where samples serve as
// 16-bit addends.
MatrixZq widen(const SignedMatrix& s, const ParameterSet& p) {
    MatrixZq out(s.rows(), s.cols());
    auto src = s.data();
    auto dst = out.data();
    for (size_t i = 0; i < src.size(); i++)
        dst[i] = static_cast<uint16_t>(static_cast<int16_t>(src[i])) & p.q_mask();
    return out;
}

Bytes shake(const ParameterSet& p, std::span<const uint8_t> in, size_t out_len) {
    return Shake::hash(p.shake, in, out_len);
}

// B' and the re-encryption B'' share this: (S' A + E')^T via MA phases with
// (S')^T as the fixed right operand.
MatrixZq compute_bprime_t(std::span<const uint8_t> seed_a, const SignedMatrix& s_prime,
                          const SignedMatrix& e_prime, const ParameterSet& p) {
    GeneratedRows a(seed_a, p);
    SignedMatrix s_t = s_prime.transposed();           // n x nbar
    MatrixZq e_t = widen(e_prime, p).transposed();     // n x nbar
    return matmul_ma(a, s_t, e_t, p);
}

// C = S' B + E'' + Encode(u), evaluated transposed so the signed operand is
// on the right: C^T = B^T (S')^T + (E'' + U)^T.
MatrixZq compute_c(const MatrixZq& b, const SignedMatrix& s_prime,
                   const SignedMatrix& e_dprime, std::span<const uint8_t> u,
                   const ParameterSet& p) {
    MatrixZq e_u = mat_add_blocks(widen(e_dprime, p), encode(u, p), p);
    MatrixZq b_t = b.transposed();
    MaterializedRows left(b_t);
    SignedMatrix sp_t = s_prime.transposed();
    MatrixZq c_t = matmul_mac(left, sp_t, e_u.transposed(), p);
    return c_t.transposed();
}

}  // namespace

SecretKeyView parse_sk(std::span<const uint8_t> sk, const ParameterSet& p) {
    if (sk.size() != p.len_sk) throw std::invalid_argument("secret key length mismatch");
    SecretKeyView v;
    size_t off = 0;
    v.s = sk.subspan(off, p.len_s);
    off += p.len_s;
    v.seed_a = sk.subspan(off, p.len_seed_a);
    off += p.len_seed_a;
    v.packed_b = sk.subspan(off, p.packed_b_bytes());
    off += p.packed_b_bytes();
    v.s_transposed = sk.subspan(off, 2 * size_t{p.n} * p.nbar);
    off += 2 * size_t{p.n} * p.nbar;
    v.pkh = sk.subspan(off, p.len_pkh);
    return v;
}

CiphertextView parse_ct(std::span<const uint8_t> ct, const ParameterSet& p) {
    if (ct.size() != p.len_ct) throw std::invalid_argument("ciphertext length mismatch");
    CiphertextView v;
    v.c1 = ct.subspan(0, p.packed_b_bytes());
    v.c2 = ct.subspan(p.packed_b_bytes(), p.packed_c_bytes());
    v.salt = ct.subspan(p.packed_b_bytes() + p.packed_c_bytes(), p.len_salt);
    return v;
}

SignedMatrix decode_sk_s_transposed(std::span<const uint8_t> bytes, const ParameterSet& p) {
    if (bytes.size() != 2 * size_t{p.n} * p.nbar)
        throw std::invalid_argument("bad S^T length");
    SignedMatrix s_t(p.nbar, p.n);
    auto dst = s_t.data();
    for (size_t i = 0; i < dst.size(); i++)
        dst[i] = static_cast<int8_t>(static_cast<int16_t>(load_le16(&bytes[2 * i])));
    return s_t;
}

Bytes derive_seed_a(std::span<const uint8_t> z, const ParameterSet& p) {
    return shake(p, z, p.len_seed_a);
}

KeyPair keygen(const KeyGenRandomness& rand, SecurityLevel level) {
    const ParameterSet& p = params_for(level);
    if (rand.s.size() != p.len_s || rand.seed_se.size() != p.len_seed_se ||
        rand.z.size() != p.len_z)
        throw std::invalid_argument("keygen: randomness length mismatch");

    Bytes seed_a = derive_seed_a(rand.z, p);

    auto samples = split_keygen_samples(
        sample_matrix(rand.seed_se, sep_keygen, 2 * p.n * p.nbar, p), p);
    SignedMatrix s = samples.s_t.transposed();  // n x nbar

    GeneratedRows a(seed_a, p);
    MatrixZq b = matmul_mac(a, s, widen(samples.e, p), p);

    KeyPair kp;
    kp.pk = concat({seed_a, pack(b, p)});
    Bytes pkh = shake(p, kp.pk, p.len_pkh);

    kp.sk.reserve(p.len_sk);
    append(kp.sk, rand.s);
    append(kp.sk, kp.pk);
    for (int8_t v : samples.s_t.data()) {
        uint8_t le[2];
        store_le16(le, static_cast<uint16_t>(static_cast<int16_t>(v)));
        kp.sk.insert(kp.sk.end(), le, le + 2);
    }
    append(kp.sk, pkh);
    return kp;
}

EncapsResult encaps(std::span<const uint8_t> pk, const EncapsRandomness& rand,
                    SecurityLevel level) {
    const ParameterSet& p = params_for(level);
    if (pk.size() != p.len_pk) throw std::invalid_argument("encaps: public key length mismatch");
    if (rand.u.size() != p.len_u || rand.salt.size() != p.len_salt)
        throw std::invalid_argument("encaps: randomness length mismatch");

    auto seed_a = pk.subspan(0, p.len_seed_a);
    MatrixZq b = unpack(pk.subspan(p.len_seed_a), p.n, p.nbar, p);

    Bytes pkh = shake(p, pk, p.len_pkh);
    Bytes seed_material = shake(p, concat({pkh, rand.u, rand.salt}), p.len_seed_se + p.len_k);
    std::span<const uint8_t> seed_se{seed_material.data(), p.len_seed_se};
    std::span<const uint8_t> k{seed_material.data() + p.len_seed_se, p.len_k};

    auto samples = split_encaps_samples(
        sample_matrix(seed_se, sep_encaps, 2 * p.n * p.nbar + p.nbar * p.nbar, p), p);

    MatrixZq bprime_t = compute_bprime_t(seed_a, samples.s_prime, samples.e_prime, p);
    MatrixZq c = compute_c(b, samples.s_prime, samples.e_dprime, rand.u, p);

    EncapsResult out;
    Bytes c1 = pack(bprime_t.transposed(), p);
    Bytes c2 = pack(c, p);
    out.ct = concat({c1, c2, rand.salt});
    out.ss = shake(p, concat({c1, c2, rand.salt, k}), p.len_ss);
    return out;
}

Bytes decaps(std::span<const uint8_t> sk, std::span<const uint8_t> ct,
             SecurityLevel level) {
    const ParameterSet& p = params_for(level);
    auto skv = parse_sk(sk, p);
    auto ctv = parse_ct(ct, p);

    MatrixZq bprime = unpack(ctv.c1, p.nbar, p.n, p);
    MatrixZq c = unpack(ctv.c2, p.nbar, p.nbar, p);
    SignedMatrix s_t = decode_sk_s_transposed(skv.s_transposed, p);

    MatrixZq m = mat_sub_mul(c, bprime, s_t.transposed(), p);
    Bytes u_prime = decode(m, p);

    Bytes seed_material =
        shake(p, concat({skv.pkh, u_prime, ctv.salt}), p.len_seed_se + p.len_k);
    std::span<const uint8_t> seed_se{seed_material.data(), p.len_seed_se};
    std::span<const uint8_t> k_prime{seed_material.data() + p.len_seed_se, p.len_k};

    auto samples = split_encaps_samples(
        sample_matrix(seed_se, sep_encaps, 2 * p.n * p.nbar + p.nbar * p.nbar, p), p);

    // Re-encryption. The functional result does not depend on the order of
    // these two products; the processor model schedules C' first for memory
    // reuse, which is honored in its instruction programs.
    MatrixZq b = unpack(skv.packed_b, p.n, p.nbar, p);
    MatrixZq c_check = compute_c(b, samples.s_prime, samples.e_dprime, u_prime, p);
    MatrixZq bdprime_t = compute_bprime_t(skv.seed_a, samples.s_prime, samples.e_prime, p);

    Bytes c1_check = pack(bdprime_t.transposed(), p);
    Bytes c2_check = pack(c_check, p);

    // Hash-packed verification: all three candidate secrets are always
    // computed, then one is selected by a constant-shape comparison.
    Bytes ss0 = shake(p, concat({ctv.c1, ctv.c2, ctv.salt, k_prime}), p.len_ss);
    Bytes ss1 = shake(p, concat({ctv.c1, ctv.c2, ctv.salt, skv.s}), p.len_ss);
    Bytes ss2 = shake(p, concat({c1_check, c2_check, ctv.salt, k_prime}), p.len_ss);
    return verify_select(ss0, ss1, ss2);
}

Bytes verify_select(std::span<const uint8_t> ss0, std::span<const uint8_t> ss1,
                    std::span<const uint8_t> ss2) {
    if (ss0.size() != ss1.size() || ss0.size() != ss2.size())
        throw std::invalid_argument("verify_select: length mismatch");
    uint8_t diff = 0;
    for (size_t i = 0; i < ss0.size(); i++) diff |= ss0[i] ^ ss2[i];
    // Fold diff into one bit and spread it: 0x00 when equal, 0xFF otherwise.
    uint32_t x = diff;
    x |= x >> 4;
    x |= x >> 2;
    x |= x >> 1;
    const uint8_t mask = static_cast<uint8_t>(0u - (x & 1));
    Bytes out(ss0.size());
    for (size_t i = 0; i < ss0.size(); i++)
        out[i] = static_cast<uint8_t>((ss0[i] & ~mask) | (ss1[i] & mask));
    return out;
}

}  // namespace frodo
