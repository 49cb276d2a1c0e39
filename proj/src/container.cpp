#include "pob/container.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

namespace pob {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'P', 'O', 'B', 'S'};
constexpr std::uint8_t kVersion = 1;

std::size_t packed_length(std::size_t count) { return (count * 7 + 7) / 8; }

const std::array<std::uint32_t, 256>& crc_table() {
    static const std::array<std::uint32_t, 256> table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int bit = 0; bit < 8; ++bit) {
                c = (c & 1u) ? (0xEDB88320u ^ (c >> 1)) : (c >> 1);
            }
            t[i] = c;
        }
        return t;
    }();
    return table;
}

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v) {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v) {
        u16(static_cast<std::uint16_t>(v >> 16));
        u16(static_cast<std::uint16_t>(v));
    }
    void bytes(std::span<const std::uint8_t> data) {
        out_.insert(out_.end(), data.begin(), data.end());
    }

    std::vector<std::uint8_t> take() { return std::move(out_); }
    std::span<const std::uint8_t> view() const { return out_; }

private:
    std::vector<std::uint8_t> out_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() { return *take(1).data(); }
    std::uint16_t u16() {
        const auto b = take(2);
        return static_cast<std::uint16_t>((b[0] << 8) | b[1]);
    }
    std::uint32_t u32() {
        const std::uint32_t hi = u16();
        return (hi << 16) | u16();
    }
    std::span<const std::uint8_t> take(std::size_t count) {
        if (count > data_.size() - pos_) {
            throw TruncationError("bundle file truncated");
        }
        const auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    std::size_t remaining() const { return data_.size() - pos_; }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> data) {
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::uint8_t byte : data) {
        crc = crc_table()[(crc ^ byte) & 0xFFu] ^ (crc >> 8);
    }
    return crc ^ 0xFFFFFFFFu;
}

std::vector<std::uint8_t> pack_7bit(std::span<const std::uint8_t> values) {
    std::vector<std::uint8_t> out(packed_length(values.size()), 0);
    std::size_t bit = 0;
    for (std::uint8_t value : values) {
        if (value >= 128) {
            throw RangeError("packed values must fit in 7 bits");
        }
        for (int k = 6; k >= 0; --k, ++bit) {
            if ((value >> k) & 1u) {
                out[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> unpack_7bit(std::span<const std::uint8_t> bytes, std::size_t count) {
    if (bytes.size() != packed_length(count)) {
        throw RangeError("packed payload has the wrong length");
    }
    std::vector<std::uint8_t> values(count, 0);
    std::size_t bit = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (int k = 6; k >= 0; --k, ++bit) {
            if (bytes[bit / 8] & (0x80u >> (bit % 8))) {
                values[i] |= static_cast<std::uint8_t>(1u << k);
            }
        }
    }
    for (; bit < bytes.size() * 8; ++bit) {
        if (bytes[bit / 8] & (0x80u >> (bit % 8))) {
            throw PadBitError("nonzero pad bits in packed payload");
        }
    }
    return values;
}

std::vector<std::uint8_t> encode_bundle(const ParticipantBundle& bundle,
                                        const SchemeMetadata& meta) {
    if (meta.secret_length > 0xFFFFFFFFull) {
        throw RangeError("secret length does not fit the 4-byte field");
    }
    if (meta.m > 0xFFFF || bundle.records.size() > 0xFFFF) {
        throw RangeError("m or record count does not fit the 2-byte field");
    }
    if (bundle.participant.size() > 0xFFFF) {
        throw RangeError("participant name longer than 65535 bytes");
    }
    std::vector<const ShareVector*> records;
    records.reserve(bundle.records.size());
    for (const ShareVector& record : bundle.records) {
        records.push_back(&record);
    }
    std::sort(records.begin(), records.end(),
              [](const ShareVector* a, const ShareVector* b) { return a->index < b->index; });

    ByteWriter w;
    w.bytes(kMagic);
    w.u8(kVersion);
    w.bytes(bundle.scheme_id);
    w.u32(static_cast<std::uint32_t>(meta.secret_length));
    w.u16(static_cast<std::uint16_t>(meta.m));
    w.u8(static_cast<std::uint8_t>(meta.padding_count));
    w.u16(static_cast<std::uint16_t>(bundle.participant.size()));
    w.bytes(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(bundle.participant.data()),
        bundle.participant.size()));
    w.u16(static_cast<std::uint16_t>(records.size()));
    for (const ShareVector* record : records) {
        if (record->values.size() != meta.secret_length) {
            throw MalformedInputError("record length does not match the secret length");
        }
        w.u16(static_cast<std::uint16_t>(record->index));
        w.bytes(pack_7bit(record->values));
    }
    const std::uint32_t crc = crc32(w.view());
    w.u32(crc);
    return w.take();
}

DecodedBundle decode_bundle(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kMagic.size() + 1) {
        throw TruncationError("bundle file shorter than its magic and version");
    }
    if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
        throw MagicError("not a bundle file (bad magic)");
    }
    if (bytes[4] != kVersion) {
        throw VersionError("unsupported bundle format version " + std::to_string(bytes[4]));
    }
    if (bytes.size() < kMagic.size() + 1 + 4) {
        throw TruncationError("bundle file too short to carry a checksum");
    }
    const std::span<const std::uint8_t> body = bytes.first(bytes.size() - 4);
    const std::uint32_t stored = (static_cast<std::uint32_t>(bytes[bytes.size() - 4]) << 24) |
                                 (static_cast<std::uint32_t>(bytes[bytes.size() - 3]) << 16) |
                                 (static_cast<std::uint32_t>(bytes[bytes.size() - 2]) << 8) |
                                 static_cast<std::uint32_t>(bytes[bytes.size() - 1]);
    if (crc32(body) != stored) {
        throw CrcError("bundle CRC mismatch");
    }

    ByteReader r(body);
    r.take(kMagic.size() + 1);  // magic and version, already checked
    DecodedBundle out;
    const auto id = r.take(out.meta.scheme_id.size());
    std::copy(id.begin(), id.end(), out.meta.scheme_id.begin());
    out.meta.secret_length = r.u32();
    out.meta.m = r.u16();
    out.meta.padding_count = r.u8();
    if (out.meta.m < 3) {
        throw FormatError("bundle declares m < 3");
    }
    if (out.meta.secret_length == 0) {
        throw FormatError("bundle declares an empty secret");
    }
    if (out.meta.padding_count > out.meta.m) {
        throw FormatError("bundle declares more padding columns than columns");
    }
    const std::uint16_t name_length = r.u16();
    const auto name = r.take(name_length);
    out.bundle.participant.assign(reinterpret_cast<const char*>(name.data()), name.size());
    out.bundle.scheme_id = out.meta.scheme_id;
    const std::uint16_t record_count = r.u16();
    const std::size_t payload = packed_length(out.meta.secret_length);
    std::vector<bool> seen(out.meta.m + 1, false);
    for (std::uint16_t k = 0; k < record_count; ++k) {
        ShareVector record;
        record.index = r.u16();
        if (record.index < 1 || record.index > out.meta.m) {
            throw FormatError("record index " + std::to_string(record.index) +
                              " out of range 1.." + std::to_string(out.meta.m));
        }
        if (seen[record.index]) {
            throw FormatError("duplicate record index " + std::to_string(record.index));
        }
        seen[record.index] = true;
        record.values = unpack_7bit(r.take(payload), out.meta.secret_length);
        out.bundle.records.push_back(std::move(record));
    }
    if (r.remaining() != 0) {
        throw FormatError("trailing bytes after the last record");
    }
    return out;
}

ParsedPolicy parse_policy(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw PolicyError(std::string("policy is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw PolicyError("policy document must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "participants" && key != "minimal_authorized") {
            throw PolicyError("unknown policy field: " + key);
        }
    }
    if (!doc.contains("participants") || !doc["participants"].is_array()) {
        throw PolicyError("policy needs a \"participants\" array");
    }
    if (!doc.contains("minimal_authorized") || !doc["minimal_authorized"].is_array()) {
        throw PolicyError("policy needs a \"minimal_authorized\" array");
    }

    std::vector<std::string> names;
    for (const auto& entry : doc["participants"]) {
        if (!entry.is_string()) {
            throw PolicyError("participant entries must be strings");
        }
        names.push_back(entry.get<std::string>());
    }
    ParticipantRoster roster(std::move(names));

    std::vector<SubsetMask> family;
    for (const auto& group : doc["minimal_authorized"]) {
        if (!group.is_array()) {
            throw PolicyError("authorized sets must be arrays of participant names");
        }
        SubsetMask mask = 0;
        for (const auto& entry : group) {
            if (!entry.is_string()) {
                throw PolicyError("authorized-set entries must be participant names");
            }
            mask |= SubsetMask{1} << roster.index_of(entry.get<std::string>());
        }
        family.push_back(mask);
    }

    MinimalAccessStructure structure(roster, std::move(family));
    ParsedPolicy out{std::move(roster), std::move(structure), {}};
    if (out.structure.was_reduced()) {
        out.warnings.push_back(
            "redundant authorized sets were removed; the minimal structure has " +
            std::to_string(out.structure.family().size()) + " member(s)");
    }
    return out;
}

}  // namespace pob
