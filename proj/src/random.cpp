#include "pob/random.hpp"

#include <cstdio>
#include <cstring>
#include <limits>

namespace pob {

std::uint64_t RandomSource::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw RangeError("uniform_below requires a nonzero bound");
    }
    // Rejection sampling: accept x only below the largest multiple of
    // bound, so the result stays exactly uniform.
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        const std::uint64_t x = next_u64();
        if (rem == 0 || x <= std::numeric_limits<std::uint64_t>::max() - rem) {
            return x % bound;
        }
    }
}

SystemRandomSource::SystemRandomSource() = default;

std::uint64_t SystemRandomSource::next_u64() {
    if (used_ + sizeof(std::uint64_t) > filled_) {
        std::FILE* f = std::fopen("/dev/urandom", "rb");
        if (f == nullptr) {
            throw Error("cannot open /dev/urandom");
        }
        filled_ = std::fread(buffer_.data(), 1, buffer_.size(), f);
        std::fclose(f);
        if (filled_ < sizeof(std::uint64_t)) {
            throw Error("short read from /dev/urandom");
        }
        used_ = 0;
    }
    std::uint64_t x;
    std::memcpy(&x, buffer_.data() + used_, sizeof(x));
    used_ += sizeof(x);
    return x;
}

std::uint64_t SeededRandomSource::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t ScriptedRandomSource::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw RangeError("uniform_below requires a nonzero bound");
    }
    if (next_ >= draws_.size()) {
        throw Error("scripted random source exhausted");
    }
    const Draw& draw = draws_[next_++];
    if (draw.expected_bound != 0 && draw.expected_bound != bound) {
        throw Error("scripted draw expected bound " + std::to_string(draw.expected_bound) +
                    " but was asked for " + std::to_string(bound));
    }
    if (draw.value >= bound) {
        throw Error("scripted draw value out of range");
    }
    return draw.value;
}

std::uint64_t ScriptedRandomSource::next_u64() {
    throw Error("scripted random source supplies uniform_below draws only");
}

}  // namespace pob
