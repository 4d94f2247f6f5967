// Copyright 2026 The ucjiqp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ucjiqp/state_vector.h"

#include <cmath>
#include <utility>

#include "ucjiqp/errors.h"

namespace ucjiqp {

void check_state_capacity(int width) {
    if (width < 0) {
        throw InputError("negative register width " + std::to_string(width));
    }
    if (width > kMaxStateModes) {
        throw CapacityError(
            "register of " + std::to_string(width) + " modes exceeds the configured limit of " +
            std::to_string(kMaxStateModes));
    }
}

std::string index_to_bits(uint64_t index, int width) {
    std::string bits(static_cast<size_t>(width), '0');
    for (int k = 0; k < width; ++k) {
        if ((index >> k) & 1) {
            bits[static_cast<size_t>(k)] = '1';
        }
    }
    return bits;
}

uint64_t bits_to_index(std::string_view bits) {
    if (bits.size() > 64) {
        throw InputError("bit string longer than 64 characters");
    }
    uint64_t index = 0;
    for (size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw InputError("bit string '" + std::string(bits) + "' contains a character other than 0/1");
        }
    }
    return index;
}

StateVector::StateVector(int modes) : modes_(modes) {
    check_state_capacity(modes);
    amps_.assign(uint64_t{1} << modes, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int modes, std::vector<Complex> amplitudes) : modes_(modes), amps_(std::move(amplitudes)) {
    check_state_capacity(modes);
    if (amps_.size() != (uint64_t{1} << modes)) {
        throw InputError("amplitude vector length does not match 2^" + std::to_string(modes));
    }
}

StateVector StateVector::basis_state(int modes, uint64_t index) {
    StateVector s(modes);
    if (index >= s.dimension()) {
        throw InputError("basis index out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

double StateVector::norm() const {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::scale(Complex factor) {
    for (Complex &a : amps_) {
        a *= factor;
    }
}

StateVector tensor_product(const StateVector &low, const StateVector &high) {
    const int modes = low.modes() + high.modes();
    check_state_capacity(modes);
    std::vector<Complex> amps(uint64_t{1} << modes);
    const uint64_t low_dim = low.dimension();
    for (uint64_t h = 0; h < high.dimension(); ++h) {
        for (uint64_t l = 0; l < low_dim; ++l) {
            amps[h * low_dim + l] = low[l] * high[h];
        }
    }
    return StateVector(modes, std::move(amps));
}

}  // namespace ucjiqp
