#pragma once

#include <stdexcept>
#include <string>

namespace pob {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value that falls outside its documented domain (POB value out of range,
// share value >= 126, popcount mismatch, ...).
class RangeError : public Error {
public:
    using Error::Error;
};

// Desk-scale guard tripped: the requested enumeration is too large.
class GuardError : public Error {
public:
    using Error::Error;
};

// The (n,n) scheme needs n >= 3.
class ArityError : public Error {
public:
    using Error::Error;
};

// Structurally broken caller input: missing or duplicate share slots,
// mismatched vector lengths, mixed scheme ids.
class MalformedInputError : public Error {
public:
    using Error::Error;
};

// Duplicate primitive index with two different payloads.
class ConflictError : public MalformedInputError {
public:
    using MalformedInputError::MalformedInputError;
};

// Bad access-structure policy: empty family, empty member, unknown or
// duplicate participant names.
class PolicyError : public Error {
public:
    using Error::Error;
};

// Serialization failures. Magic, version, CRC and pad-bit problems get
// their own types so callers can tell them apart.
class FormatError : public Error {
public:
    using Error::Error;
};

class MagicError : public FormatError {
public:
    using FormatError::FormatError;
};

class VersionError : public FormatError {
public:
    using FormatError::FormatError;
};

class CrcError : public FormatError {
public:
    using FormatError::FormatError;
};

class PadBitError : public FormatError {
public:
    using FormatError::FormatError;
};

class TruncationError : public FormatError {
public:
    using FormatError::FormatError;
};

}  // namespace pob
