#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "pob/error.hpp"

namespace pob {

/// Source of uniform integers. Share generation consumes randomness only
/// through uniform_below, in a documented order, so a deterministic source
/// replays a dealing exactly.
class RandomSource {
public:
    virtual ~RandomSource() = default;

    /// Uniform integer in [0, bound). bound must be nonzero.
    virtual std::uint64_t uniform_below(std::uint64_t bound);

    std::uint8_t byte() { return static_cast<std::uint8_t>(uniform_below(256)); }

protected:
    virtual std::uint64_t next_u64() = 0;
};

/// Default source: /dev/urandom, buffered.
class SystemRandomSource final : public RandomSource {
public:
    SystemRandomSource();

protected:
    std::uint64_t next_u64() override;

private:
    std::array<std::uint8_t, 4096> buffer_;
    std::size_t used_ = 0;
    std::size_t filled_ = 0;
};

/// Deterministic source for tests and the CLI --seed flag (splitmix64).
/// Not cryptographically strong; never use outside reproducibility work.
class SeededRandomSource final : public RandomSource {
public:
    explicit SeededRandomSource(std::uint64_t seed) : state_(seed) {}

protected:
    std::uint64_t next_u64() override;

private:
    std::uint64_t state_;
};

/// Replays a fixed list of uniform_below results; each scripted entry may
/// pin the bound it expects. Exists so golden tests can force exact share
/// strings.
class ScriptedRandomSource final : public RandomSource {
public:
    struct Draw {
        std::uint64_t value;
        std::uint64_t expected_bound = 0;  // 0 = accept any bound
    };

    explicit ScriptedRandomSource(std::vector<Draw> draws) : draws_(std::move(draws)) {}

    std::uint64_t uniform_below(std::uint64_t bound) override;

    std::size_t remaining() const { return draws_.size() - next_; }

protected:
    std::uint64_t next_u64() override;

private:
    std::vector<Draw> draws_;
    std::size_t next_ = 0;
};

}  // namespace pob
