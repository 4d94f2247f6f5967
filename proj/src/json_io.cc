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

#include "ucjiqp/json_io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ucjiqp/errors.h"

namespace ucjiqp {

namespace {

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "\"nan\"";
    }
    if (std::isinf(x)) {
        return x > 0 ? "\"inf\"" : "\"-inf\"";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".e") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void dump_into(std::string &out, const Json &j, int indent, int depth) {
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close_pad = indent > 0 ? "\n" + std::string(static_cast<size_t>(indent * depth), ' ') : "";
    const std::string colon = indent > 0 ? ": " : ":";
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out += first ? "" : ",";
                first = false;
                out += pad;
                out += Json(it.key()).dump();
                out += colon;
                dump_into(out, it.value(), indent, depth + 1);
            }
            out += close_pad;
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const Json &item : j) {
                out += first ? "" : ",";
                first = false;
                out += pad;
                dump_into(out, item, indent, depth + 1);
            }
            out += close_pad;
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

const Json &require(const Json &j, const std::string &key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw InputError("missing field '" + where + key + "'");
    }
    return j.at(key);
}

int require_int(const Json &j, const std::string &key, const std::string &where) {
    const Json &v = require(j, key, where);
    if (!v.is_number_integer()) {
        throw InputError("field '" + where + key + "' must be an integer");
    }
    const auto value = v.get<int64_t>();
    if (value < INT32_MIN || value > INT32_MAX) {
        throw InputError("field '" + where + key + "' is out of range");
    }
    return static_cast<int>(value);
}

double as_double(const Json &v, const std::string &field) {
    if (!v.is_number()) {
        throw InputError("field '" + field + "' must be a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw InputError("field '" + field + "' must be finite");
    }
    return x;
}

double require_double(const Json &j, const std::string &key, const std::string &where) {
    return as_double(require(j, key, where), where + key);
}

const Json &require_array(const Json &j, const std::string &key, const std::string &where) {
    const Json &v = require(j, key, where);
    if (!v.is_array()) {
        throw InputError("field '" + where + key + "' must be an array");
    }
    return v;
}

// Rethrows index/validation failures from the domain types with the field path.
template <typename F>
auto with_field(const std::string &field, F &&f) {
    try {
        return f();
    } catch (const InputError &e) {
        throw InputError("field '" + field + "': " + e.what());
    }
}

Json gate_json(int p, int q, double theta) {
    Json g = Json::object();
    g["p"] = p;
    g["q"] = q;
    g["theta"] = theta;
    return g;
}

}  // namespace

std::string dump_json(const Json &j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw InputError("failed writing '" + path + "'");
    }
}

IqpCircuit iqp_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("IQP document must be a JSON object");
    }
    const int n = require_int(j, "n", "");
    if (n < 1) {
        throw InputError("field 'n' must be >= 1");
    }
    const Json &v = require_array(j, "v", "");
    if (static_cast<int>(v.size()) != n) {
        throw InputError("field 'v' has " + std::to_string(v.size()) + " entries, expected n=" + std::to_string(n));
    }
    IqpCircuit c(n);
    for (int a = 0; a < n; ++a) {
        c.set_field(a, as_double(v[static_cast<size_t>(a)], "v[" + std::to_string(a) + "]"));
    }
    const Json &w = require_array(j, "w", "");
    std::set<std::pair<int, int>> seen;
    for (size_t k = 0; k < w.size(); ++k) {
        const std::string where = "w[" + std::to_string(k) + "].";
        const int a = require_int(w[k], "a", where);
        const int b = require_int(w[k], "b", where);
        const double val = require_double(w[k], "val", where);
        if (a < 0 || b >= n || a >= b) {
            throw InputError("field '" + where + "a/b' must satisfy 0 <= a < b < n, got (" + std::to_string(a) +
                             ", " + std::to_string(b) + ")");
        }
        if (!seen.insert({a, b}).second) {
            throw InputError("field '" + where + "a/b' duplicates pair (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
        }
        c.set_coupling(a, b, val);
    }
    return c;
}

Json iqp_to_json(const IqpCircuit &c) {
    Json j = Json::object();
    j["n"] = c.n();
    j["v"] = c.fields();
    Json w = Json::array();
    for (const auto &[key, val] : c.couplings()) {
        Json term = Json::object();
        term["a"] = key.first;
        term["b"] = key.second;
        term["val"] = val;
        w.push_back(std::move(term));
    }
    j["w"] = std::move(w);
    return j;
}

Ucj1Compiled ucj_from_json(const Json &j) {
    if (!j.is_object()) {
        throw InputError("UCJ document must be a JSON object");
    }
    Ucj1Compiled c;
    c.modes = require_int(j, "modes", "");
    c.reference_n = require_int(j, "reference_n", "");
    c.global_phase = require_double(j, "global_phase", "");
    if (c.reference_n < 1 || c.modes != 2 * c.reference_n) {
        throw InputError("fields 'modes'/'reference_n' must satisfy modes = 2 * reference_n >= 2");
    }
    const Json &givens = require_array(j, "givens", "");
    for (size_t k = 0; k < givens.size(); ++k) {
        const std::string where = "givens[" + std::to_string(k) + "].";
        GivensGate g{require_int(givens[k], "p", where), require_int(givens[k], "q", where),
                     require_double(givens[k], "theta", where)};
        with_field(where.substr(0, where.size() - 1), [&] {
            validate(g, c.modes);
            return 0;
        });
        c.givens.push_back(g);
    }
    const Json &diagonal = require_array(j, "diagonal", "");
    for (size_t k = 0; k < diagonal.size(); ++k) {
        const std::string where = "diagonal[" + std::to_string(k) + "].";
        NumberDiagonalGate d{require_int(diagonal[k], "p", where), require_int(diagonal[k], "q", where),
                             require_double(diagonal[k], "theta", where)};
        with_field(where.substr(0, where.size() - 1), [&] {
            validate(d, c.modes);
            return 0;
        });
        c.diagonal.push_back(d);
    }
    c.validate();
    return c;
}

Json ucj_to_json(const Ucj1Compiled &c) {
    Json j = Json::object();
    j["modes"] = c.modes;
    j["reference_n"] = c.reference_n;
    Json givens = Json::array();
    for (const GivensGate &g : c.givens) {
        givens.push_back(gate_json(g.p, g.q, g.theta));
    }
    j["givens"] = std::move(givens);
    std::vector<NumberDiagonalGate> sorted = c.diagonal;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto &a, const auto &b) { return std::pair(a.p, a.q) < std::pair(b.p, b.q); });
    Json diagonal = Json::array();
    for (const NumberDiagonalGate &d : sorted) {
        diagonal.push_back(gate_json(d.p, d.q, d.theta));
    }
    j["diagonal"] = std::move(diagonal);
    j["global_phase"] = c.global_phase;
    return j;
}

Json report_to_json(const VerifyReport &r) {
    Json j = Json::object();
    j["linf"] = r.linf;
    j["tvd"] = r.tvd;
    if (std::isinf(r.mult_error)) {
        j["mult_error"] = "inf";
    } else {
        j["mult_error"] = r.mult_error;
    }
    j["phase"] = r.phase ? Json(*r.phase) : Json(nullptr);
    j["state_residual"] = r.state_residual;
    j["leakage"] = r.leakage;
    j["pass"] = r.pass;
    j["tolerance"] = r.tolerance;
    return j;
}

Json distribution_to_json(const Distribution &d) {
    Json j = Json::object();
    for (const auto &[bits, p] : d.entries()) {
        j[bits] = p;
    }
    return j;
}

Json counts_to_json(const std::map<std::string, uint64_t> &counts) {
    Json j = Json::object();
    for (const auto &[bits, k] : counts) {
        j[bits] = k;
    }
    return j;
}

Json state_to_json(const StateVector &s) {
    Json amps = Json::object();
    for (uint64_t x = 0; x < s.dimension(); ++x) {
        if (s[x] != Complex{0.0, 0.0}) {
            amps[index_to_bits(x, s.modes())] = Json::array({s[x].real(), s[x].imag()});
        }
    }
    Json j = Json::object();
    j["modes"] = s.modes();
    j["amplitudes"] = std::move(amps);
    return j;
}

}  // namespace ucjiqp
