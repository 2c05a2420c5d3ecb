// File-oriented front end for the SD-AREE cipher: derive, encrypt, decrypt,
// analyze, kat. Exit codes: 0 success, 1 usage/parse, 2 KAT mismatch, 3 I/O.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sdaree/sdaree.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitKatMismatch = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KeyOptions {
    std::string text;
    std::string file;
    bool has_text = false;
};

void add_key_options(CLI::App* cmd, KeyOptions& opts) {
    auto* key = cmd->add_option("--key", opts.text, "Pass-key as literal text (raw bytes)");
    auto* key_file = cmd->add_option("--key-file", opts.file, "Read the pass-key bytes from a file");
    key->excludes(key_file);
    cmd->callback([&opts, key] { opts.has_text = key->count() > 0; });
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
    if (in.bad()) throw IoError("read failed: " + path);
    return data;
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open output file: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed: " + path);
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
    write_file(path, std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

sdaree::KeyMaterial load_key(const KeyOptions& opts) {
    sdaree::KeyMaterial key;
    if (opts.has_text) {
        key = sdaree::KeyMaterial::from_string(opts.text);
    } else if (!opts.file.empty()) {
        key = sdaree::KeyMaterial{read_file(opts.file)};
    } else {
        throw UsageError("a key is required (--key or --key-file)");
    }
    if (key.bytes.empty()) throw UsageError("key must not be empty");
    return key;
}

sdaree::WrapMode parse_wrap(const std::string& name) {
    if (name == "byte") return sdaree::WrapMode::ByteMod256;
    if (name == "paper") return sdaree::WrapMode::Paper255;
    throw UsageError("--wrap must be 'byte' or 'paper'");
}

nlohmann::json report_to_json(const sdaree::AnalysisReport& r) {
    nlohmann::json j;
    j["histogram"]["counts"] = r.histogram.counts;
    j["histogram"]["total"] = r.histogram.total;
    j["index_of_coincidence"] = r.index_of_coincidence;
    j["chi_square"] = r.chi_square;
    j["distinct_count"] = r.distinct_count;
    j["max_count"] = r.max_count;
    j["longest_run"] = r.longest_run;
    return j;
}

void emit_json(const nlohmann::json& j, const std::string& path) {
    const std::string text = j.dump(2) + "\n";
    if (path.empty()) {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

int cmd_derive(const KeyOptions& key_opts) {
    const auto key = load_key(key_opts);
    const auto s = sdaree::derive_schedule(key);
    nlohmann::json j;
    j["key_length"] = key.length();
    j["csum"] = s.csum.str();
    j["pseudo_code"] = s.pseudo_code;
    j["code"] = s.code;
    j["power_ex"] = s.power_ex;
    j["prime_index"] = s.prime_index;
    j["modulus"] = s.modulus;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_encrypt(const KeyOptions& key_opts, const std::string& in_path,
                const std::string& out_path, const std::string& wrap,
                const std::string& format) {
    const auto key = load_key(key_opts);
    const auto plaintext = read_file(in_path);
    const auto ciphertext = sdaree::sd_aree_encrypt(plaintext, key, parse_wrap(wrap));

    if (format == "raw") {
        write_file(out_path, ciphertext);
    } else if (format == "hex") {
        write_file(out_path, sdaree::hex_encode(ciphertext) + "\n");
    } else if (format == "base64") {
        write_file(out_path, sdaree::base64_encode(ciphertext) + "\n");
    } else {
        throw UsageError("--format must be raw, hex, or base64");
    }
    return kExitOk;
}

int cmd_decrypt(const KeyOptions& key_opts, const std::string& in_path,
                const std::string& out_path, const std::string& wrap,
                const std::string& format) {
    const auto key = load_key(key_opts);
    const auto raw = read_file(in_path);

    std::vector<std::uint8_t> ciphertext;
    if (format == "raw") {
        ciphertext = raw;
    } else if (format == "hex" || format == "base64") {
        const std::string_view text(reinterpret_cast<const char*>(raw.data()), raw.size());
        try {
            ciphertext = format == "hex" ? sdaree::hex_decode(text) : sdaree::base64_decode(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        throw UsageError("--format must be raw, hex, or base64");
    }
    write_file(out_path, sdaree::sd_aree_decrypt(ciphertext, key, parse_wrap(wrap)));
    return kExitOk;
}

int cmd_analyze(const std::string& in_path, const std::string& plain_path,
                const std::string& cipher_path, const std::string& csv_path,
                const std::string& plain_csv, const std::string& cipher_csv,
                const std::string& json_path) {
    if (!in_path.empty()) {
        const auto report = sdaree::analyze(read_file(in_path));
        if (!csv_path.empty()) write_file(csv_path, sdaree::spectrum_csv(report.histogram));
        if (!json_path.empty() || csv_path.empty()) emit_json(report_to_json(report), json_path);
        return kExitOk;
    }

    const auto [plain, cipher] =
        sdaree::leakage_report(read_file(plain_path), read_file(cipher_path));
    if (!plain_csv.empty()) write_file(plain_csv, sdaree::spectrum_csv(plain.histogram));
    if (!cipher_csv.empty()) write_file(cipher_csv, sdaree::spectrum_csv(cipher.histogram));
    nlohmann::json j;
    j["plain"] = report_to_json(plain);
    j["cipher"] = report_to_json(cipher);
    if (!json_path.empty() || (plain_csv.empty() && cipher_csv.empty())) emit_json(j, json_path);
    return kExitOk;
}

int cmd_kat(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open KAT file: " + path);

    std::vector<sdaree::KatCase> cases;
    try {
        cases = sdaree::parse_kat(in);
    } catch (const sdaree::KatParseError& e) {
        std::cerr << path << ": " << e.what() << "\n";
        return kExitUsage;
    }

    const auto result = sdaree::run_kat_cases(cases);
    if (result.all_passed()) {
        std::cout << "ok: " << result.total << " cases\n";
        return kExitOk;
    }
    for (std::uint64_t count : result.failed_counts) {
        std::cout << "FAIL: COUNT " << count << "\n";
    }
    std::cout << result.failed_counts.size() << " of " << result.total << " cases failed\n";
    return kExitKatMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SD-AREE cipher tool"};
    app.require_subcommand(1);

    KeyOptions key_opts;
    std::string in_path, out_path, kat_path;
    std::string wrap = "byte";
    std::string format = "raw";
    std::string plain_path, cipher_path, csv_path, plain_csv, cipher_csv, json_path;

    auto* derive = app.add_subcommand("derive", "Print the key schedule as JSON");
    add_key_options(derive, key_opts);

    auto* encrypt = app.add_subcommand("encrypt", "Encrypt a file");
    add_key_options(encrypt, key_opts);
    encrypt->add_option("--in", in_path, "Input file")->required();
    encrypt->add_option("--out", out_path, "Output file")->required();
    encrypt->add_option("--wrap", wrap, "Wrap rule: byte (default) or paper");
    encrypt->add_option("--format", format, "Output format: raw (default), hex, base64");

    auto* decrypt = app.add_subcommand("decrypt", "Decrypt a file");
    add_key_options(decrypt, key_opts);
    decrypt->add_option("--in", in_path, "Input file (in --format encoding)")->required();
    decrypt->add_option("--out", out_path, "Output file (raw bytes)")->required();
    decrypt->add_option("--wrap", wrap, "Wrap rule: byte (default) or paper");
    decrypt->add_option("--format", format, "Input format: raw (default), hex, base64");

    auto* analyze = app.add_subcommand("analyze", "Byte-frequency spectra and leakage statistics");
    auto* opt_in = analyze->add_option("--in", in_path, "Single input file");
    auto* opt_plain = analyze->add_option("--plain", plain_path, "Plaintext file (paired mode)");
    auto* opt_cipher = analyze->add_option("--cipher", cipher_path, "Ciphertext file (paired mode)");
    analyze->add_option("--csv", csv_path, "Spectrum CSV output (single mode)");
    analyze->add_option("--plain-csv", plain_csv, "Plaintext spectrum CSV (paired mode)");
    analyze->add_option("--cipher-csv", cipher_csv, "Ciphertext spectrum CSV (paired mode)");
    analyze->add_option("--json", json_path, "Report JSON output (default: stdout)");
    opt_in->excludes(opt_plain)->excludes(opt_cipher);
    opt_plain->needs(opt_cipher);
    opt_cipher->needs(opt_plain);

    auto* kat = app.add_subcommand("kat", "Run a known-answer test file");
    kat->add_option("file", kat_path, "KAT vector file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (derive->parsed()) return cmd_derive(key_opts);
        if (encrypt->parsed()) return cmd_encrypt(key_opts, in_path, out_path, wrap, format);
        if (decrypt->parsed()) return cmd_decrypt(key_opts, in_path, out_path, wrap, format);
        if (kat->parsed()) return cmd_kat(kat_path);
        if (analyze->parsed()) {
            if (in_path.empty() && plain_path.empty()) {
                throw UsageError("analyze needs --in, or --plain with --cipher");
            }
            return cmd_analyze(in_path, plain_path, cipher_path, csv_path, plain_csv,
                               cipher_csv, json_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sdaree::InvalidKeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
