#pragma once

// Torus-rank dictionary for abelian surfaces: the monodromy operator on
// H^1 is nilpotent with N^2 = 0 and rank equal to the torus rank of the
// semi-abelian reduction; the nilpotency index of its exterior square on
// H^2 = wedge^2 H^1 gives the degeneration type.

#include <degen/config.hpp>
#include <degen/exact.hpp>

#include <stdexcept>

namespace degen {

struct UniformizationDatum {
    std::size_t torus_rank = 0;

    std::size_t abelian_rank() const { return 2 - torus_rank; }

    void validate() const {
        if (torus_rank > 2)
            throw std::invalid_argument("UniformizationDatum: torus rank of a surface is 0, 1 or 2");
    }
};

// Canonical block form: torus_rank Jordan blocks of size 2 on a
// 4-dimensional space, the rest fixed.
inline NilpotentOperator monodromy_on_h1(const UniformizationDatum& d) {
    d.validate();
    QMatrix m(4, 4);
    for (std::size_t k = 0; k < d.torus_rank; ++k) m(2 * k, 2 * k + 1) = 1;
    return NilpotentOperator{4, m};
}

inline DegenerationType type_from_rank(const UniformizationDatum& d) {
    std::size_t index = nilpotency_index(wedge_square(monodromy_on_h1(d)));
    switch (index) {
    case 1: return DegenerationType::I;
    case 2: return DegenerationType::II;
    case 3: return DegenerationType::III;
    default: throw std::logic_error("type_from_rank: index out of range");
    }
}

} // namespace degen
