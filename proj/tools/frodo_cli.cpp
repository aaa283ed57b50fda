// Command-line surface: KEM phases on files, KAT generation and replay, and
// the processor model with cycle reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

#include "frodo/bytes.hpp"
#include "frodo/kat/drbg.hpp"
#include "frodo/kat/rsp.hpp"
#include "frodo/kem.hpp"
#include "frodo/params.hpp"
#include "frodo/xof.hpp"

namespace {

using namespace frodo;

// Exit codes: 0 success / checks passed, 2 usage (CLI11), 3 I/O failure,
// 4 malformed input length, 5 parse error, 1 check failure.
constexpr int exit_check_failed = 1;
constexpr int exit_io = 3;
constexpr int exit_length = 4;
constexpr int exit_parse = 5;

Bytes read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, std::span<const uint8_t> data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

SecurityLevel parse_level(const std::string& s) {
    SecurityLevel level;
    if (!level_from_string(s, level))
        throw CLI::ValidationError("--level", "expected 640, 976 or 1344");
    return level;
}

// Deterministic randomness expansion from a --seed hex string via the KAT
// DRBG convention; without a seed, the platform entropy source is used.
class RandomSource {
  public:
    explicit RandomSource(const std::string& seed_hex) {
        if (!seed_hex.empty()) {
            Bytes seed = from_hex(seed_hex);
            if (seed.size() != 48)
                throw std::invalid_argument("--seed must be 48 bytes (96 hex digits)");
            m_drbg.emplace(seed);
        }
    }

    Bytes draw(size_t n) {
        if (m_drbg) return m_drbg->random_bytes(n);
        Bytes out(n);
        std::random_device rd;
        for (auto& b : out) b = static_cast<uint8_t>(rd());
        return out;
    }

  private:
    std::optional<kat::CtrDrbg> m_drbg;
};

int cmd_keygen(SecurityLevel level, const std::string& seed_hex, const std::string& pk_path,
               const std::string& sk_path) {
    const auto& p = params_for(level);
    RandomSource rand(seed_hex);
    Bytes blob = rand.draw(p.len_s + p.len_seed_se + p.len_z);

    KeyGenRandomness kr;
    kr.s = Bytes(blob.begin(), blob.begin() + p.len_s);
    kr.seed_se = Bytes(blob.begin() + p.len_s, blob.begin() + p.len_s + p.len_seed_se);
    kr.z = Bytes(blob.begin() + p.len_s + p.len_seed_se, blob.end());

    KeyPair kp = keygen(kr, level);
    write_file(pk_path, kp.pk);
    write_file(sk_path, kp.sk);

    std::cout << "pk " << kp.pk.size() << " bytes  shake256/16 "
              << to_hex(Shake::hash(ShakeVariant::Shake256, kp.pk, 16)) << "\n";
    std::cout << "sk " << kp.sk.size() << " bytes  shake256/16 "
              << to_hex(Shake::hash(ShakeVariant::Shake256, kp.sk, 16)) << "\n";
    return 0;
}

int cmd_encaps(SecurityLevel level, const std::string& seed_hex, const std::string& pk_path,
               const std::string& ct_path, const std::string& ss_path) {
    const auto& p = params_for(level);
    Bytes pk = read_file(pk_path);
    if (pk.size() != p.len_pk) {
        std::cerr << "error: public key is " << pk.size() << " bytes, expected " << p.len_pk
                  << "\n";
        return exit_length;
    }

    RandomSource rand(seed_hex);
    Bytes blob = rand.draw(p.len_u + p.len_salt);
    EncapsRandomness er;
    er.u = Bytes(blob.begin(), blob.begin() + p.len_u);
    er.salt = Bytes(blob.begin() + p.len_u, blob.end());

    EncapsResult res = encaps(pk, er, level);
    write_file(ct_path, res.ct);
    if (!ss_path.empty()) write_file(ss_path, res.ss);

    std::cout << "ct " << res.ct.size() << " bytes  shake256/16 "
              << to_hex(Shake::hash(ShakeVariant::Shake256, res.ct, 16)) << "\n";
    std::cout << "ss " << to_hex(res.ss) << "\n";
    return 0;
}

int cmd_decaps(SecurityLevel level, const std::string& sk_path, const std::string& ct_path,
               const std::string& ss_path) {
    const auto& p = params_for(level);
    Bytes sk = read_file(sk_path);
    Bytes ct = read_file(ct_path);
    if (sk.size() != p.len_sk) {
        std::cerr << "error: secret key is " << sk.size() << " bytes, expected " << p.len_sk
                  << "\n";
        return exit_length;
    }
    if (ct.size() != p.len_ct) {
        std::cerr << "error: ciphertext is " << ct.size() << " bytes, expected " << p.len_ct
                  << "\n";
        return exit_length;
    }

    Bytes ss = decaps(sk, ct, level);
    if (!ss_path.empty()) write_file(ss_path, ss);
    std::cout << "ss " << to_hex(ss) << "\n";
    return 0;
}

int cmd_kat(SecurityLevel level, const std::string& rsp_path) {
    std::vector<kat::RspVector> vectors;
    try {
        vectors = kat::parse_rsp_file(rsp_path);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    }

    auto result = kat::check_vectors(level, vectors);
    for (uint32_t c : result.failed_counts)
        std::cout << "vector " << c << ": FAIL\n";
    std::cout << result.passed << "/" << result.total << " vectors passed\n";
    return result.passed == result.total ? 0 : exit_check_failed;
}

int cmd_kat_gen(SecurityLevel level, size_t count, const std::string& out_path) {
    const auto& p = params_for(level);
    auto vectors = kat::generate_kat(level, count);

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << "\n";
        return exit_io;
    }
    kat::write_rsp(out, p.name, vectors);
    std::cout << "wrote " << vectors.size() << " vectors to " << out_path << "\n";
    return 0;
}

// Utility XOF access, used by the cross-check harness.
int cmd_xof(const std::string& variant, const std::string& hex_in, size_t out_len) {
    ShakeVariant v;
    if (variant == "shake128")
        v = ShakeVariant::Shake128;
    else if (variant == "shake256")
        v = ShakeVariant::Shake256;
    else
        throw CLI::ValidationError("--variant", "expected shake128 or shake256");
    Bytes in = from_hex(hex_in);
    std::cout << to_hex(Shake::hash(v, in, out_len)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FrodoKEM implementation and processor model"};
    app.require_subcommand(1);

    std::string level_str = "640";
    std::string seed_hex;
    std::string pk_path = "pk.bin", sk_path = "sk.bin", ct_path = "ct.bin", ss_path;
    std::string rsp_path, report_path;
    size_t count = 100;
    size_t out_len = 32;
    std::string variant = "shake128";
    std::string hex_in;

    auto add_level = [&](CLI::App* cmd) {
        cmd->add_option("--level", level_str, "security level: 640, 976 or 1344")
            ->capture_default_str();
    };

    auto* kem_cmd = app.add_subcommand("kem", "run a KEM phase");
    kem_cmd->require_subcommand(1);

    auto* kg = kem_cmd->add_subcommand("keygen", "generate a key pair");
    add_level(kg);
    kg->add_option("--seed", seed_hex, "48-byte hex seed for deterministic randomness");
    kg->add_option("--pk", pk_path, "public key output path")->capture_default_str();
    kg->add_option("--sk", sk_path, "secret key output path")->capture_default_str();

    auto* enc = kem_cmd->add_subcommand("encaps", "encapsulate against a public key");
    add_level(enc);
    enc->add_option("--seed", seed_hex, "48-byte hex seed for deterministic randomness");
    enc->add_option("--pk", pk_path, "public key input path")->required();
    enc->add_option("--ct", ct_path, "ciphertext output path")->capture_default_str();
    enc->add_option("--ss", ss_path, "shared secret output path");

    auto* dec = kem_cmd->add_subcommand("decaps", "decapsulate a ciphertext");
    add_level(dec);
    dec->add_option("--sk", sk_path, "secret key input path")->required();
    dec->add_option("--ct", ct_path, "ciphertext input path")->required();
    dec->add_option("--ss", ss_path, "shared secret output path");

    auto* kat_cmd = app.add_subcommand("kat", "replay a .rsp response file");
    add_level(kat_cmd);
    kat_cmd->add_option("--rsp", rsp_path, "response file path")->required();

    auto* gen_cmd = app.add_subcommand("kat-gen", "generate a .rsp response file");
    add_level(gen_cmd);
    gen_cmd->add_option("--count", count, "number of vectors")->capture_default_str();
    gen_cmd->add_option("--out", rsp_path, "output path")->required();

    auto* xof_cmd = app.add_subcommand("xof", "hex-to-hex SHAKE digest");
    xof_cmd->add_option("--variant", variant, "shake128 or shake256")->capture_default_str();
    xof_cmd->add_option("--in", hex_in, "input bytes as hex (may be empty)");
    xof_cmd->add_option("--out-len", out_len, "output length in bytes")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        SecurityLevel level = parse_level(level_str);
        if (kg->parsed()) return cmd_keygen(level, seed_hex, pk_path, sk_path);
        if (enc->parsed()) return cmd_encaps(level, seed_hex, pk_path, ct_path, ss_path);
        if (dec->parsed()) return cmd_decaps(level, sk_path, ct_path, ss_path);
        if (kat_cmd->parsed()) return cmd_kat(level, rsp_path);
        if (gen_cmd->parsed()) return cmd_kat_gen(level, count, rsp_path);
        if (xof_cmd->parsed()) return cmd_xof(variant, hex_in, out_len);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_length;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return 0;
}
