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

#include "ucjiqp/compile.h"

#include <algorithm>

#include "ucjiqp/errors.h"

namespace ucjiqp {

PairEncoding::PairEncoding(int n) : n_(n) {
    if (n < 1) {
        throw InputError("pair encoding needs n >= 1");
    }
}

std::optional<uint64_t> PairEncoding::decode_index(uint64_t modes_index) const {
    uint64_t out = 0;
    for (int a = 0; a < n_; ++a) {
        const uint64_t hi = (modes_index >> upper(a)) & 1;
        const uint64_t lo = (modes_index >> lower(a)) & 1;
        if (hi + lo != 1) {
            return std::nullopt;
        }
        out |= hi << a;
    }
    return out;
}

uint64_t PairEncoding::encode_index(uint64_t qubit_index) const {
    uint64_t out = 0;
    for (int a = 0; a < n_; ++a) {
        const uint64_t bit = (qubit_index >> a) & 1;
        out |= bit << upper(a);
        out |= (1 - bit) << lower(a);
    }
    return out;
}

Ucj1Compiled compile_iqp(const IqpCircuit &c) {
    const int n = c.n();
    const PairEncoding enc(n);
    const DiagonalSpec spec = decompose_diagonal(c);

    Ucj1Compiled out;
    out.modes = 2 * n;
    out.reference_n = n;
    out.givens = givens_schedule_v(n);
    out.global_phase = spec.global_phase;

    // exp(i v' Zbar_a) is F_a(-2 v') = D_uu(-v') D_ll(+v').
    for (int a = 0; a < n; ++a) {
        const double vp = spec.v_prime[static_cast<size_t>(a)];
        out.diagonal.push_back({enc.upper(a), enc.upper(a), -vp});
        out.diagonal.push_back({enc.lower(a), enc.lower(a), vp});
    }
    // CP_ab(theta) is D between the two upper modes; upper(b) < upper(a) for a < b.
    for (const CpTerm &cp : spec.cp_terms) {
        out.diagonal.push_back({enc.upper(cp.b), enc.upper(cp.a), cp.theta});
    }
    std::stable_sort(out.diagonal.begin(), out.diagonal.end(), [](const auto &x, const auto &y) {
        return std::pair(x.p, x.q) < std::pair(y.p, y.q);
    });
    out.validate();
    return out;
}

std::optional<std::string> decode_outcome(std::string_view bits, const PairEncoding &enc) {
    if (static_cast<int>(bits.size()) != enc.modes()) {
        throw InputError("outcome '" + std::string(bits) + "' must have " + std::to_string(enc.modes()) + " bits");
    }
    const auto decoded = enc.decode_index(bits_to_index(bits));
    if (!decoded) {
        return std::nullopt;
    }
    return index_to_bits(*decoded, enc.n());
}

DecodedDistribution decode_distribution(const Distribution &d) {
    if (d.width() < 2 || d.width() % 2 != 0) {
        throw InputError("pair-coded distribution needs an even width >= 2, got " + std::to_string(d.width()));
    }
    const PairEncoding enc(d.width() / 2);
    DecodedDistribution out{Distribution(enc.n()), 0.0};
    for (const auto &[bits, p] : d.entries()) {
        const auto decoded = decode_outcome(bits, enc);
        if (decoded) {
            out.distribution.add(*decoded, p);
        } else {
            out.leakage += p;
        }
    }
    if (out.leakage >= kLeakageThreshold) {
        throw LeakageError("probability " + std::to_string(out.leakage) + " outside the pair-coded subspace",
                           out.leakage);
    }
    out.distribution.normalize();
    return out;
}

StateVector decode_state(const StateVector &s, const PairEncoding &enc) {
    if (s.modes() != enc.modes()) {
        throw InputError("state width does not match the pair encoding");
    }
    std::vector<Complex> amps(uint64_t{1} << enc.n());
    for (uint64_t x = 0; x < amps.size(); ++x) {
        amps[x] = s[enc.encode_index(x)];
    }
    return StateVector(enc.n(), std::move(amps));
}

}  // namespace ucjiqp
