// pobss - split secrets under a monotone access policy and combine them.
//
// Exit codes: 0 success, 1 reconstruction failed (missing primitive
// shares), 2 input/format error, 3 policy error, 4 internal error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pob/analysis.hpp"
#include "pob/container.hpp"
#include "pob/dealer.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitMissingShares = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPolicyError = 3;
constexpr int kExitInternalError = 4;

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pob::MalformedInputError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    return data;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw pob::MalformedInputError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) {
        throw pob::MalformedInputError("write to " + path.string() + " failed");
    }
}

pob::ParsedPolicy load_policy(const fs::path& path) {
    const std::vector<std::uint8_t> raw = read_file(path);
    return pob::parse_policy(std::string_view(reinterpret_cast<const char*>(raw.data()),
                                              raw.size()));
}

std::unique_ptr<pob::RandomSource> make_rng(const std::optional<std::string>& seed_hex) {
    if (!seed_hex) {
        return std::make_unique<pob::SystemRandomSource>();
    }
    std::cerr << "WARNING: --seed makes the output deterministic; use for tests only\n";
    std::uint64_t seed = 0;
    const std::string& text = *seed_hex;
    if (text.empty() || text.size() > 16) {
        throw pob::MalformedInputError("--seed wants 1..16 hex digits");
    }
    for (char c : text) {
        seed <<= 4;
        if (c >= '0' && c <= '9') {
            seed |= static_cast<std::uint64_t>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            seed |= static_cast<std::uint64_t>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            seed |= static_cast<std::uint64_t>(c - 'A' + 10);
        } else {
            throw pob::MalformedInputError("--seed wants hex digits only");
        }
    }
    return std::make_unique<pob::SeededRandomSource>(seed);
}

std::vector<std::string> split_names(const std::string& list) {
    std::vector<std::string> names;
    std::stringstream stream(list);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            names.push_back(item);
        }
    }
    return names;
}

void print_policy_summary(std::ostream& out, const pob::ParsedPolicy& policy) {
    out << "participants (" << policy.roster.size() << "):";
    for (const std::string& name : policy.roster.names()) {
        out << " " << name;
    }
    out << "\nminimal authorized sets:";
    for (pob::SubsetMask mask : policy.structure.family()) {
        out << " " << policy.roster.describe(mask);
    }
    out << "\n";
}

int cmd_split(const fs::path& policy_path, const fs::path& secret_path, const fs::path& out_dir,
              const std::optional<std::string>& seed_hex) {
    const pob::ParsedPolicy policy = load_policy(policy_path);
    for (const std::string& warning : policy.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
    for (const std::string& name : policy.roster.names()) {
        if (name.find('/') != std::string::npos || name.find('\\') != std::string::npos ||
            name == "." || name == "..") {
            throw pob::PolicyError("participant name '" + name +
                                   "' is not usable as a file name");
        }
    }
    const std::vector<std::uint8_t> secret = read_file(secret_path);
    if (secret.empty()) {
        throw pob::MalformedInputError("secret file " + secret_path.string() + " is empty");
    }

    const auto rng = make_rng(seed_hex);
    const pob::DealResult dealt = pob::deal(secret, policy.structure, *rng);

    fs::create_directories(out_dir);
    print_policy_summary(std::cout, policy);
    std::cout << "scheme id: " << pob::scheme_id_hex(dealt.meta.scheme_id) << "\n"
              << "secret length: " << dealt.meta.secret_length << " byte(s)\n"
              << "primitive shares: " << dealt.meta.m << " (" << dealt.meta.padding_count
              << " padding)\n"
              << "columns:";
    for (pob::SubsetMask label : dealt.meta.column_labels) {
        std::cout << " " << policy.roster.describe(label);
    }
    std::cout << "\n";
    for (const pob::ParticipantBundle& bundle : dealt.bundles) {
        const fs::path file = out_dir / (bundle.participant + ".pobs");
        write_file(file, pob::encode_bundle(bundle, dealt.meta));
        std::cout << bundle.participant << ": indices";
        for (const pob::ShareVector& record : bundle.records) {
            std::cout << " " << record.index;
        }
        std::cout << " -> " << file.string() << "\n";
    }
    return kExitOk;
}

int cmd_combine(const std::vector<fs::path>& share_paths, const fs::path& out_path) {
    std::vector<pob::ParticipantBundle> bundles;
    std::optional<pob::SchemeMetadata> meta;
    for (const fs::path& path : share_paths) {
        pob::DecodedBundle decoded = pob::decode_bundle(read_file(path));
        if (!meta) {
            meta = decoded.meta;
        } else if (meta->scheme_id != decoded.meta.scheme_id) {
            throw pob::MalformedInputError("share files come from different splits (" +
                                           path.string() + " does not match)");
        }
        bundles.push_back(std::move(decoded.bundle));
    }

    const pob::CombineReport report = pob::combine(bundles, *meta);
    if (!report.success) {
        std::cerr << "reconstruction failed; missing primitive share";
        if (report.missing.size() > 1) {
            std::cerr << "s";
        }
        for (std::uint32_t index : report.missing) {
            std::cerr << " " << index;
        }
        std::cerr << "\n";
        return kExitMissingShares;
    }
    if (report.parity_warnings > 0) {
        std::cerr << "warning: " << report.parity_warnings
                  << " byte(s) recovered with inconsistent parity\n";
    }
    write_file(out_path, report.secret);
    std::cout << "recovered " << report.secret.size() << " byte(s) into " << out_path.string()
              << "\n";
    return kExitOk;
}

int cmd_inspect(const fs::path& share_path) {
    const pob::DecodedBundle decoded = pob::decode_bundle(read_file(share_path));
    std::cout << "file: " << share_path.string() << "\n"
              << "scheme id: " << pob::scheme_id_hex(decoded.meta.scheme_id) << "\n"
              << "participant: " << decoded.bundle.participant << "\n"
              << "secret length: " << decoded.meta.secret_length << " byte(s)\n"
              << "primitive shares: " << decoded.meta.m << " (" << decoded.meta.padding_count
              << " padding)\n"
              << "held indices:";
    for (const pob::ShareVector& record : decoded.bundle.records) {
        std::cout << " " << record.index;
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_policy_check(const fs::path& policy_path) {
    const pob::ParsedPolicy policy = load_policy(policy_path);
    for (const std::string& warning : policy.warnings) {
        std::cout << "warning: " << warning << "\n";
    }
    print_policy_summary(std::cout, policy);

    const pob::MaximalForbiddenFamily forbidden =
        pob::maximal_unauthorized(policy.structure);
    std::cout << "maximal unauthorized sets (m=" << forbidden.m() << "):";
    for (pob::SubsetMask mask : forbidden.members) {
        std::cout << " " << policy.roster.describe(mask);
    }
    std::cout << "\n";

    const pob::BitMatrix incidence = pob::incidence_array(policy.structure);
    std::cout << "incidence array (" << incidence.rows() << "x" << incidence.cols() << "):\n";
    for (std::size_t i = 0; i < incidence.rows(); ++i) {
        std::cout << "  " << incidence.row_string(i) << "\n";
    }

    const pob::CumulativeArray cumulative = pob::cumulative_array(forbidden);
    std::cout << "cumulative array (" << cumulative.participants() << "x" << cumulative.m()
              << "):\n";
    for (std::size_t i = 0; i < cumulative.matrix.rows(); ++i) {
        std::cout << "  " << policy.roster.name(static_cast<unsigned>(i)) << " "
                  << cumulative.matrix.row_string(i) << "\n";
    }

    if (policy.roster.size() <= 5) {
        const pob::SubsetMask full = policy.roster.full_mask();
        std::uint32_t checked = 0;
        std::uint32_t mismatches = 0;
        for (pob::SubsetMask subset = 0; subset <= full; ++subset) {
            ++checked;
            if (pob::covers_all(cumulative, subset) !=
                pob::is_authorized(subset, policy.structure)) {
                ++mismatches;
                std::cout << "coverage mismatch on " << policy.roster.describe(subset) << "\n";
            }
        }
        std::cout << "coverage check: " << (mismatches == 0 ? "consistent" : "INCONSISTENT")
                  << " over all " << checked << " subsets\n";
        if (mismatches != 0) {
            return kExitInternalError;
        }
    } else {
        std::cout << "coverage check: skipped (more than 5 participants)\n";
    }
    return kExitOk;
}

int cmd_audit(const fs::path& policy_path, const std::string& coalition_list,
              const std::optional<fs::path>& secret_path,
              const std::optional<std::string>& seed_hex) {
    const pob::ParsedPolicy policy = load_policy(policy_path);
    pob::SubsetMask coalition = 0;
    for (const std::string& name : split_names(coalition_list)) {
        coalition |= pob::SubsetMask{1} << policy.roster.index_of(name);
    }

    const auto rng = make_rng(seed_hex);
    std::vector<std::uint8_t> secret;
    if (secret_path) {
        secret = read_file(*secret_path);
        if (secret.empty()) {
            throw pob::MalformedInputError("secret file is empty");
        }
    } else {
        secret.push_back(rng->byte());
        std::cout << "no --secret given; auditing one random byte\n";
    }

    const pob::LeakageReport report =
        pob::leakage_audit(policy.structure, coalition, secret, *rng);
    std::cout << "coalition: " << report.coalition << "\n"
              << "known primitive indices:";
    for (std::uint32_t index : report.known_indices) {
        std::cout << " " << index;
    }
    std::cout << "\nmissing primitive indices:";
    for (std::uint32_t index : report.missing_indices) {
        std::cout << " " << index;
    }
    std::cout << "\ncompletions swept per byte: " << report.enumeration_size << "\n"
              << "candidate secrets per byte: min " << report.min_count << ", max "
              << report.max_count << ", mean " << report.mean_count << " (of 256)\n"
              << "true secret always a candidate: "
              << (report.true_secret_always_candidate ? "yes" : "NO") << "\n";
    std::cout << "byte_index,candidate_count\n";
    for (std::size_t b = 0; b < report.candidate_counts.size(); ++b) {
        std::cout << b << "," << report.candidate_counts[b] << "\n";
    }
    return kExitOk;
}

int classify_and_report(const std::exception& e) {
    if (dynamic_cast<const pob::PolicyError*>(&e) != nullptr) {
        std::cerr << "policy error: " << e.what() << "\n";
        return kExitPolicyError;
    }
    if (dynamic_cast<const pob::Error*>(&e) != nullptr) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"POB secret sharing: split a secret under a monotone access policy"};
    app.require_subcommand(1);

    std::string policy_file;
    std::string in_file;
    std::string out_dir;
    std::string out_file;
    std::string share_file;
    std::string coalition;
    std::vector<std::string> share_files;
    std::optional<std::string> seed_hex;
    std::optional<std::string> audit_secret;

    CLI::App* split = app.add_subcommand("split", "deal a secret into share bundles");
    split->add_option("--policy", policy_file, "policy JSON file")->required();
    split->add_option("--in", in_file, "secret input file")->required();
    split->add_option("--out-dir", out_dir, "directory for <participant>.pobs files")
        ->required();
    split->add_option("--seed", seed_hex,
                      "hex seed for deterministic output (INSECURE, tests only)");

    CLI::App* combine = app.add_subcommand("combine", "reconstruct a secret from bundles");
    combine->add_option("--shares", share_files, "bundle files to pool")->required();
    combine->add_option("--out", out_file, "where to write the recovered secret")->required();

    CLI::App* inspect = app.add_subcommand("inspect", "print bundle header fields");
    inspect->add_option("--share", share_file, "bundle file")->required();

    CLI::App* policy_check =
        app.add_subcommand("policy-check", "print the derived arrays for a policy");
    policy_check->add_option("--policy", policy_file, "policy JSON file")->required();

    CLI::App* audit = app.add_subcommand("audit", "leakage audit for a forbidden coalition");
    audit->add_option("--policy", policy_file, "policy JSON file")->required();
    audit->add_option("--coalition", coalition, "comma-separated participant names")
        ->required();
    audit->add_option("--secret", audit_secret, "secret file (default: one random byte)");
    audit->add_option("--seed", seed_hex,
                      "hex seed for deterministic output (INSECURE, tests only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (split->parsed()) {
            return cmd_split(policy_file, in_file, out_dir, seed_hex);
        }
        if (combine->parsed()) {
            std::vector<fs::path> paths(share_files.begin(), share_files.end());
            return cmd_combine(paths, out_file);
        }
        if (inspect->parsed()) {
            return cmd_inspect(share_file);
        }
        if (policy_check->parsed()) {
            return cmd_policy_check(policy_file);
        }
        if (audit->parsed()) {
            std::optional<fs::path> secret_path;
            if (audit_secret) {
                secret_path = fs::path(*audit_secret);
            }
            return cmd_audit(policy_file, coalition, secret_path, seed_hex);
        }
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
    return kExitInternalError;
}
