#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pob/access.hpp"
#include "pob/dealer.hpp"

namespace pob {

/// CRC-32 (reflected, polynomial 0x04C11DB7, standard parameters). Used
/// for transport integrity only; not a secrecy or authenticity mechanism.
std::uint32_t crc32(std::span<const std::uint8_t> data);

/// Concatenate 7-bit values most-significant-bit first; the final byte is
/// zero-padded. Output length is ceil(7L/8). Values must be below 128.
std::vector<std::uint8_t> pack_7bit(std::span<const std::uint8_t> values);

/// Inverse of pack_7bit for a known value count. Nonzero pad bits are a
/// corruption error.
std::vector<std::uint8_t> unpack_7bit(std::span<const std::uint8_t> bytes, std::size_t count);

/// Bundle file layout (all multi-byte integers big-endian):
///
///   "POBS"                magic, 4 bytes
///   version               1 byte, currently 1
///   scheme id             16 bytes
///   secret length         4 bytes
///   m                     2 bytes
///   padding count         1 byte
///   name length + name    2 bytes + UTF-8 bytes
///   record count          2 bytes
///   records               index (2 bytes) + packed payload, ceil(7L/8) bytes
///   CRC-32                4 bytes, over everything preceding
///
/// Encoding is canonical (records ascending by index), so equal bundles
/// produce byte-identical files.
std::vector<std::uint8_t> encode_bundle(const ParticipantBundle& bundle,
                                        const SchemeMetadata& meta);

struct DecodedBundle {
    ParticipantBundle bundle;
    SchemeMetadata meta;  // wire fields only: roster and column labels stay empty
};

DecodedBundle decode_bundle(std::span<const std::uint8_t> bytes);

struct ParsedPolicy {
    ParticipantRoster roster;
    MinimalAccessStructure structure;
    std::vector<std::string> warnings;  // e.g. redundant authorized sets removed
};

/// Policy documents are restricted JSON:
///
///   {
///     "participants": ["P1", "P2", "P3", "P4"],
///     "minimal_authorized": [["P1", "P2"], ["P3", "P4"]]
///   }
///
/// Roster order follows document order; authorized sets are minimized to
/// an antichain, with a warning when members were redundant.
ParsedPolicy parse_policy(std::string_view text);

}  // namespace pob
