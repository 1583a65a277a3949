// Copyright 2026 the orthopair authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthopair/orthopair.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

struct Invalid {
    std::string message;
};

using InstancePtr = std::unique_ptr<opair_instance, decltype(&opair_instance_free)>;

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { opair_string_free(ptr); }
};

void check(opair_status status) {
    if (status != OPAIR_OK) {
        throw Invalid{std::string(opair_status_string(status)) + ": " + opair_last_error()};
    }
}

std::vector<int> parse_blocks(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int k = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(k);
        } catch (const std::exception&) {
            throw Invalid{"--blocks expects comma-separated integers, got '" + text + "'"};
        }
    }
    if (out.empty()) {
        throw Invalid{"--blocks must list at least one block size"};
    }
    return out;
}

opair_format parse_format(const std::string& format) {
    if (format == "text") {
        return OPAIR_FORMAT_TEXT;
    }
    if (format == "structured") {
        return OPAIR_FORMAT_STRUCTURED;
    }
    throw Invalid{"--format must be text or structured"};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Invalid{"cannot read '" + path + "'"};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const char* text) {
    if (path == "-") {
        std::fputs(text, stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Invalid{"cannot write '" + path + "'"};
    }
}

int verdict_exit(opair_verdict verdict) {
    switch (verdict) {
        case OPAIR_VERDICT_PRESERVING:
        case OPAIR_VERDICT_ZERO_PAIR: return kExitPass;
        case OPAIR_VERDICT_NOT_PRESERVING: return kExitFail;
        case OPAIR_VERDICT_INCONCLUSIVE: return kExitInconclusive;
    }
    return kExitInconclusive;
}

InstancePtr load(const std::string& path) {
    const std::string text = read_input(path);
    opair_instance* inst = nullptr;
    check(opair_instance_load(text.c_str(), &inst));
    return {inst, &opair_instance_free};
}

struct Common {
    std::string blocks = "3,2";
    int rank = 3;
    std::uint64_t seed = 0;
    double theta1 = 0.1;
    double theta2 = 0.1;
    double tol = 1e-8;
    std::string format = "text";
    std::string out = "-";
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orthogonality-preserving pairs on Hilbert C*-modules over finite-dimensional algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", opair_version());

    Common gen_opts;
    std::string kind = "preserving";
    auto* gen = app.add_subcommand("gen", "Generate an instance file");
    gen->add_option("--blocks", gen_opts.blocks, "Block sizes k_1,...,k_m")->capture_default_str();
    gen->add_option("--rank", gen_opts.rank, "Module rank n")->capture_default_str();
    gen->add_option("--kind", kind, "preserving, corrupted, random, perturbed or identity")->capture_default_str();
    gen->add_option("--seed", gen_opts.seed, "Random seed")->capture_default_str();
    gen->add_option("--theta1", gen_opts.theta1, "Perturbation of T (perturbed kind)")->capture_default_str();
    gen->add_option("--theta2", gen_opts.theta2, "Perturbation of S (perturbed kind)")->capture_default_str();
    gen->add_option("--out", gen_opts.out, "Output path, - for stdout")->capture_default_str();

    Common check_opts;
    std::string input = "-";
    auto* extract = app.add_subcommand("extract", "Extract gamma with diagnostics and decide the pair");
    auto* verify = app.add_subcommand("verify", "Decide the pair and check a stored gamma");
    for (auto* sub : {extract, verify}) {
        sub->add_option("input", input, "Instance or report document, - for stdin")->capture_default_str();
        sub->add_option("--seed", check_opts.seed, "Seed for projections and witness search")->capture_default_str();
        sub->add_option("--tol", check_opts.tol, "Base tolerance, scaled by |T| |S|")->capture_default_str();
        sub->add_option("--format", check_opts.format, "text or structured")->capture_default_str();
        sub->add_option("--out", check_opts.out, "Output path, - for stdout")->capture_default_str();
    }

    Common suite_opts;
    suite_opts.seed = 42;
    std::string names = "all";
    int cases = 100;
    bool timing = false;
    bool mutate = false;
    std::optional<std::size_t> case_index;
    auto* suite = app.add_subcommand("suite", "Run property suites");
    suite->add_option("names", names, "Comma-separated suite names or all")->capture_default_str();
    suite->add_option("--blocks", suite_opts.blocks, "Block sizes k_1,...,k_m")->capture_default_str();
    suite->add_option("--rank", suite_opts.rank, "Module rank n")->capture_default_str();
    suite->add_option("--seed", suite_opts.seed, "Master seed")->capture_default_str();
    suite->add_option("--cases", cases, "Cases per suite")->capture_default_str();
    suite->add_option("--theta1", suite_opts.theta1, "Perturbation of T")->capture_default_str();
    suite->add_option("--theta2", suite_opts.theta2, "Perturbation of S")->capture_default_str();
    suite->add_option("--format", suite_opts.format, "text or structured")->capture_default_str();
    suite->add_option("--out", suite_opts.out, "Output path, - for stdout")->capture_default_str();
    suite->add_option("--case", case_index, "Replay a single case");
    suite->add_flag("--timing", timing, "Include wall times (output is no longer byte-stable)");
    suite->add_flag("--mutate", mutate, "Run the deliberately broken variant of each suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInvalid;
    }

    try {
        if (gen->parsed()) {
            const std::vector<int> blocks = parse_blocks(gen_opts.blocks);
            opair_instance* raw = nullptr;
            check(opair_instance_generate(blocks.data(), blocks.size(), gen_opts.rank, kind.c_str(), gen_opts.seed,
                                          gen_opts.theta1, gen_opts.theta2, &raw));
            InstancePtr inst(raw, &opair_instance_free);
            OwnedString text;
            check(opair_instance_save(inst.get(), &text.ptr));
            write_output(gen_opts.out, text.ptr);
            return kExitPass;
        }
        if (extract->parsed() || verify->parsed()) {
            const opair_format format = parse_format(check_opts.format);
            InstancePtr inst = load(input);
            OwnedString report;
            opair_verdict verdict = OPAIR_VERDICT_INCONCLUSIVE;
            int exit_code = kExitPass;
            if (extract->parsed()) {
                check(opair_instance_extract(inst.get(), check_opts.seed, check_opts.tol, format, &report.ptr,
                                             &verdict));
                exit_code = verdict_exit(verdict);
            } else {
                int passed = 0;
                check(opair_instance_verify(inst.get(), check_opts.seed, check_opts.tol, format, &report.ptr,
                                            &verdict, &passed));
                exit_code = verdict == OPAIR_VERDICT_INCONCLUSIVE ? kExitInconclusive
                                                                   : (passed ? kExitPass : kExitFail);
            }
            write_output(check_opts.out, report.ptr);
            return exit_code;
        }
        if (suite->parsed()) {
            const opair_format format = parse_format(suite_opts.format);
            const std::vector<int> blocks = parse_blocks(suite_opts.blocks);
            opair_suite_options options;
            opair_suite_options_init(&options);
            options.blocks = blocks.data();
            options.block_count = blocks.size();
            options.rank = suite_opts.rank;
            options.seed = suite_opts.seed;
            options.cases = cases;
            options.theta1 = suite_opts.theta1;
            options.theta2 = suite_opts.theta2;
            options.mutate = mutate;
            options.timing = timing;
            OwnedString report;
            int all_passed = 0;
            if (case_index) {
                check(opair_replay_case(names.c_str(), &options, *case_index, format, &report.ptr, &all_passed));
            } else {
                check(opair_run_suites(names.c_str(), &options, format, &report.ptr, &all_passed));
            }
            write_output(suite_opts.out, report.ptr);
            return all_passed ? kExitPass : kExitFail;
        }
    } catch (const Invalid& e) {
        std::fprintf(stderr, "error: %s\n", e.message.c_str());
        return kExitInvalid;
    }
    return kExitInvalid;
}
