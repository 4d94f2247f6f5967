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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ucjiqp/compile.h"
#include "ucjiqp/errors.h"
#include "ucjiqp/iqp.h"
#include "ucjiqp/json_io.h"
#include "ucjiqp/probes.h"
#include "ucjiqp/ucj.h"
#include "ucjiqp/verify.h"

namespace {

using namespace ucjiqp;

enum ExitCode : int {
    kPass = 0,
    kVerificationFailed = 1,
    kInputError = 2,
    kCapacityError = 3,
    kLeakageError = 4,
};

void emit(const Json &j, const std::string &out_path) {
    const std::string text = dump_json(j) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
    }
}

// A file holding "modes" is a UCJ circuit, anything else is parsed as IQP.
bool is_ucj_document(const Json &j) {
    return j.is_object() && j.contains("modes");
}

Distribution distribution_for(const Json &doc, bool raw) {
    if (!is_ucj_document(doc)) {
        return iqp_distribution(iqp_from_json(doc));
    }
    const Distribution full = distribution_of(simulate_ucj(ucj_from_json(doc)));
    return raw ? full : decode_distribution(full).distribution;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compile IQP circuits into single-layer UCJ circuits and verify them by simulation"};
    app.require_subcommand(1);

    int n = 0;
    uint64_t seed = 0;
    double density = 1.0;
    std::string out_path;
    auto *gen = app.add_subcommand("gen-iqp", "Write a seeded random IQP circuit");
    gen->add_option("--n", n, "Number of IQP qubits")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "64-bit seed")->required();
    gen->add_option("--density", density, "Probability that a pair gets a coupling")->check(CLI::Range(0.0, 1.0));
    gen->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::string in_path;
    auto *compile = app.add_subcommand("compile", "Lower an IQP circuit to a 1-UCJ' circuit");
    compile->add_option("input", in_path, "IQP JSON file")->required();
    compile->add_option("-o,--output", out_path, "Output file (default stdout)");

    std::string kind;
    bool want_state = false;
    bool want_dist = false;
    bool raw = false;
    auto *simulate = app.add_subcommand("simulate", "Simulate an IQP or UCJ circuit");
    simulate->add_option("kind", kind, "iqp or ucj")->required()->check(CLI::IsMember({"iqp", "ucj"}));
    simulate->add_option("file", in_path, "Circuit JSON file")->required();
    auto *state_flag = simulate->add_flag("--state", want_state, "Print nonzero amplitudes");
    simulate->add_flag("--dist", want_dist, "Print the outcome distribution (default)")->excludes(state_flag);
    simulate->add_flag("--raw", raw, "UCJ only: keep 2n-mode outcomes instead of decoding them");

    uint64_t shots = 0;
    auto *sample_cmd = app.add_subcommand("sample", "Draw seeded shots from a circuit's distribution");
    sample_cmd->add_option("file", in_path, "IQP or UCJ JSON file")->required();
    sample_cmd->add_option("--shots", shots, "Number of shots")->required();
    sample_cmd->add_option("--seed", seed, "64-bit seed")->required();
    sample_cmd->add_flag("--raw", raw, "UCJ only: sample 2n-mode outcomes instead of decoded ones");

    std::string iqp_path;
    std::string ucj_path;
    double tolerance = 1e-10;
    auto *verify = app.add_subcommand("verify", "Check a UCJ circuit against the IQP circuit it claims to emulate");
    verify->add_option("iqp", iqp_path, "IQP JSON file")->required();
    verify->add_option("ucj", ucj_path, "UCJ JSON file")->required();
    verify->add_option("--tol", tolerance, "L-infinity tolerance on probabilities")
        ->check(CLI::PositiveNumber);

    int trials = 1;
    auto *invariants = app.add_subcommand("check-invariants", "Run the compile/simulate property probes");
    invariants->add_option("--n", n, "Number of IQP qubits")->required()->check(CLI::PositiveNumber);
    invariants->add_option("--seed", seed, "64-bit seed")->required();
    invariants->add_option("--trials", trials, "Number of random circuits")->required()->check(CLI::PositiveNumber);

    int modes = 0;
    int gates = 0;
    auto *oracle = app.add_subcommand("oracle-check", "Compare the JW kernels with the dense Fock oracle");
    oracle->add_option("--modes", modes, "Number of modes (2..12)")->required();
    oracle->add_option("--gates", gates, "Number of random gates")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--seed", seed, "64-bit seed")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*gen) {
            emit(iqp_to_json(random_iqp(n, seed, density)), out_path);
            return kPass;
        }
        if (*compile) {
            const IqpCircuit c = iqp_from_json(parse_json(read_text_file(in_path)));
            emit(ucj_to_json(compile_iqp(c)), out_path);
            return kPass;
        }
        if (*simulate) {
            const Json doc = parse_json(read_text_file(in_path));
            if ((kind == "ucj") != is_ucj_document(doc)) {
                throw InputError("'" + in_path + "' is not a " + kind + " circuit");
            }
            if (want_state) {
                const StateVector s = kind == "ucj" ? simulate_ucj(ucj_from_json(doc)) : iqp_state(iqp_from_json(doc));
                emit(state_to_json(s), "");
            } else {
                emit(distribution_to_json(distribution_for(doc, raw)), "");
            }
            return kPass;
        }
        if (*sample_cmd) {
            const Json doc = parse_json(read_text_file(in_path));
            emit(counts_to_json(sample(distribution_for(doc, raw), shots, seed)), "");
            return kPass;
        }
        if (*verify) {
            const IqpCircuit c = iqp_from_json(parse_json(read_text_file(iqp_path)));
            const Ucj1Compiled u = ucj_from_json(parse_json(read_text_file(ucj_path)));
            const VerifyReport report = verify_pair(c, u, tolerance);
            emit(report_to_json(report), "");
            std::fprintf(stderr,
                         "note: multiplicative error c = %.17g; the sampling-hardness threshold sqrt(2) = %.6f "
                         "applies to classical samplers and is not a pass criterion\n",
                         report.mult_error, kHardnessThreshold);
            if (report.leakage >= kLeakageThreshold) {
                std::fprintf(stderr, "error: leakage %.3g outside the pair-coded subspace\n", report.leakage);
                return kLeakageError;
            }
            return report.pass ? kPass : kVerificationFailed;
        }
        if (*invariants) {
            const auto tallies = check_invariants(n, seed, trials);
            Json j = Json::object();
            bool all_ok = true;
            for (const PropertyTally &t : tallies) {
                Json entry = Json::object();
                entry["passed"] = t.passed;
                entry["trials"] = t.trials;
                entry["worst"] = t.worst;
                j[t.name] = std::move(entry);
                all_ok = all_ok && t.ok();
            }
            emit(j, "");
            return all_ok ? kPass : kVerificationFailed;
        }
        if (*oracle) {
            const OracleCheckResult r = oracle_check(modes, gates, seed);
            Json j = Json::object();
            j["modes"] = r.modes;
            j["gates"] = r.gates;
            j["linf_gap"] = r.gap;
            j["oracle_unitarity"] = r.oracle_unitarity;
            j["pass"] = r.gap < 1e-10;
            emit(j, "");
            return r.gap < 1e-10 ? kPass : kVerificationFailed;
        }
    } catch (const LeakageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLeakageError;
    } catch (const CapacityError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
