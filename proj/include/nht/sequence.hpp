#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nht/integer.hpp"

namespace nht {

/// The n nonzero-half values of a 2n-point NHT first row.
/// Invariants: n >= 2, every value >= 0, at least one value nonzero.
class GeneratorSequence {
public:
    /// Throws InvalidGenerator when the invariants do not hold.
    explicit GeneratorSequence(std::vector<Int> values);

    std::span<const Int> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    Int operator[](std::size_t i) const { return values_[i]; }

    /// c * g, exact. Throws OverflowError or InvalidGenerator (c = 0).
    GeneratorSequence scaled(Int c) const;

    bool operator==(const GeneratorSequence&) const = default;

private:
    std::vector<Int> values_;
};

/// A generator reduced modulo q: every value in [0, q), q >= 2, length >= 2.
class ResidueSequence {
public:
    /// Throws InvalidModulus (q < 2) or InvalidInput (length < 2, value >= q).
    ResidueSequence(std::vector<Residue> values, Residue modulus);

    std::span<const Residue> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    Residue modulus() const noexcept { return modulus_; }
    Residue operator[](std::size_t i) const { return values_[i]; }

    /// Lifts the residues back to a generator (fails when all residues are zero).
    GeneratorSequence as_generator() const;

    bool operator==(const ResidueSequence&) const = default;

private:
    std::vector<Residue> values_;
    Residue modulus_;
};

}  // namespace nht
