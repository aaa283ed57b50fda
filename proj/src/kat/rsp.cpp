#include "frodo/kat/rsp.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "frodo/kat/drbg.hpp"
#include "frodo/kem.hpp"

namespace frodo::kat {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(size_t line, const std::string& msg) {
    std::ostringstream os;
    os << "rsp parse error at line " << line << ": " << msg;
    throw std::runtime_error(os.str());
}

}  // namespace

std::vector<RspVector> parse_rsp(std::istream& in) {
    std::vector<RspVector> vectors;
    std::optional<RspVector> current;
    std::string raw;
    size_t lineno = 0;
    bool saw_any_field = false;

    auto flush = [&] {
        if (current) {
            vectors.push_back(std::move(*current));
            current.reset();
        }
    };

    while (std::getline(in, raw)) {
        lineno++;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        if (key == "count") {
            flush();
            current.emplace();
            try {
                current->count = static_cast<uint32_t>(std::stoul(value));
            } catch (const std::exception&) {
                fail(lineno, "bad count value");
            }
            saw_any_field = true;
            continue;
        }
        if (!current) fail(lineno, "field before first count");

        Bytes bytes;
        try {
            bytes = from_hex(value);
        } catch (const std::exception& e) {
            fail(lineno, std::string("bad hex for ") + key + ": " + e.what());
        }
        if (key == "seed")
            current->seed = std::move(bytes);
        else if (key == "pk")
            current->pk = std::move(bytes);
        else if (key == "sk")
            current->sk = std::move(bytes);
        else if (key == "ct")
            current->ct = std::move(bytes);
        else if (key == "ss")
            current->ss = std::move(bytes);
        else
            fail(lineno, "unknown key `" + key + "`");
        saw_any_field = true;
    }
    flush();
    if (!saw_any_field) fail(lineno ? lineno : 1, "no vectors found");
    return vectors;
}

std::vector<RspVector> parse_rsp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_rsp(in);
}

void write_rsp(std::ostream& out, std::string_view algorithm_name,
               const std::vector<RspVector>& vectors) {
    out << "# " << algorithm_name << "\n\n";
    for (const auto& v : vectors) {
        out << "count = " << v.count << "\n";
        out << "seed = " << to_hex(v.seed) << "\n";
        out << "pk = " << to_hex(v.pk) << "\n";
        out << "sk = " << to_hex(v.sk) << "\n";
        out << "ct = " << to_hex(v.ct) << "\n";
        out << "ss = " << to_hex(v.ss) << "\n\n";
    }
}

RspVector expand_vector(SecurityLevel level, uint32_t count,
                        std::span<const uint8_t> seed) {
    const ParameterSet& p = params_for(level);
    CtrDrbg drbg(seed);

    // Key generation draws s || seed_SE || z in one request, encapsulation
    // draws u || salt in one request, matching the reference KAT harness.
    Bytes kg = drbg.random_bytes(p.len_s + p.len_seed_se + p.len_z);
    KeyGenRandomness kr;
    kr.s = Bytes(kg.begin(), kg.begin() + p.len_s);
    kr.seed_se = Bytes(kg.begin() + p.len_s, kg.begin() + p.len_s + p.len_seed_se);
    kr.z = Bytes(kg.begin() + p.len_s + p.len_seed_se, kg.end());
    KeyPair kp = keygen(kr, level);

    Bytes er = drbg.random_bytes(p.len_u + p.len_salt);
    EncapsRandomness enc;
    enc.u = Bytes(er.begin(), er.begin() + p.len_u);
    enc.salt = Bytes(er.begin() + p.len_u, er.end());
    EncapsResult res = encaps(kp.pk, enc, level);

    Bytes ss_dec = decaps(kp.sk, res.ct, level);
    if (ss_dec != res.ss) throw std::runtime_error("KAT expansion: decaps mismatch");

    RspVector v;
    v.count = count;
    v.seed.assign(seed.begin(), seed.end());
    v.pk = std::move(kp.pk);
    v.sk = std::move(kp.sk);
    v.ct = std::move(res.ct);
    v.ss = std::move(res.ss);
    return v;
}

std::vector<Bytes> kat_seed_schedule(size_t count) {
    Bytes entropy(48);
    for (size_t i = 0; i < entropy.size(); i++) entropy[i] = static_cast<uint8_t>(i);
    CtrDrbg drbg(entropy);
    std::vector<Bytes> seeds(count);
    for (auto& s : seeds) s = drbg.random_bytes(48);
    return seeds;
}

std::vector<RspVector> generate_kat(SecurityLevel level, size_t count) {
    auto seeds = kat_seed_schedule(count);
    std::vector<RspVector> out;
    out.reserve(count);
    for (size_t i = 0; i < count; i++)
        out.push_back(expand_vector(level, static_cast<uint32_t>(i), seeds[i]));
    return out;
}

KatCheckResult check_vectors(SecurityLevel level, const std::vector<RspVector>& vectors) {
    KatCheckResult r;
    r.total = vectors.size();
    for (const auto& v : vectors) {
        if (v.seed.size() != 48) {
            r.failed_counts.push_back(v.count);
            continue;
        }
        RspVector expanded = expand_vector(level, v.count, v.seed);
        const bool ok = expanded.pk == v.pk && expanded.sk == v.sk &&
                        expanded.ct == v.ct && expanded.ss == v.ss;
        if (ok)
            r.passed++;
        else
            r.failed_counts.push_back(v.count);
    }
    return r;
}

}  // namespace frodo::kat
