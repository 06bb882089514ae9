#include "nht/sequence.hpp"

#include <algorithm>
#include <string>

namespace nht {

GeneratorSequence::GeneratorSequence(std::vector<Int> values) : values_(std::move(values)) {
    if (values_.size() < 2) {
        throw InvalidGenerator("generator needs at least 2 values, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0) {
            throw InvalidGenerator("generator value " + std::to_string(i) + " is negative (" +
                                   to_string(values_[i]) + ")");
        }
    }
    if (std::all_of(values_.begin(), values_.end(), [](Int v) { return v == 0; })) {
        throw InvalidGenerator("generator is all zero");
    }
}

GeneratorSequence GeneratorSequence::scaled(Int c) const {
    std::vector<Int> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [c](Int v) { return checked_mul(c, v); });
    return GeneratorSequence(std::move(out));
}

ResidueSequence::ResidueSequence(std::vector<Residue> values, Residue modulus)
    : values_(std::move(values)), modulus_(modulus) {
    if (modulus_ < 2) throw InvalidModulus("modulus must be at least 2, got " + std::to_string(modulus_));
    if (values_.size() < 2) {
        throw InvalidInput("residue sequence needs at least 2 values, got " + std::to_string(values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] >= modulus_) {
            throw InvalidInput("residue " + std::to_string(values_[i]) + " at index " + std::to_string(i) +
                               " is not below modulus " + std::to_string(modulus_));
        }
    }
}

GeneratorSequence ResidueSequence::as_generator() const {
    return GeneratorSequence(std::vector<Int>(values_.begin(), values_.end()));
}

}  // namespace nht
