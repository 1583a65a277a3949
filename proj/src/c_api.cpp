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

#include "orthopair/orthopair.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "orthopair/reporting.hpp"

struct opair_instance {
    orthopair::InstanceFile file;
    orthopair::Json document;
};

namespace {

using namespace orthopair;

thread_local std::string g_last_error;

opair_status status_of(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return OPAIR_ERR_INVALID_ARGUMENT;
        case Errc::ParseError: return OPAIR_ERR_PARSE;
        case Errc::InvalidOperand: return OPAIR_ERR_INVALID_OPERAND;
        case Errc::NotHermitian: return OPAIR_ERR_NOT_HERMITIAN;
        case Errc::NotPositive: return OPAIR_ERR_NOT_POSITIVE;
        case Errc::BlockMismatch: return OPAIR_ERR_BLOCK_MISMATCH;
        case Errc::ZeroVector: return OPAIR_ERR_ZERO_VECTOR;
        case Errc::SpaceMismatch: return OPAIR_ERR_SPACE_MISMATCH;
        case Errc::InvalidTheta: return OPAIR_ERR_INVALID_THETA;
        case Errc::SingularGram: return OPAIR_ERR_SINGULAR_GRAM;
        case Errc::NotALinear: return OPAIR_ERR_NOT_A_LINEAR;
        case Errc::Singular: return OPAIR_ERR_SINGULAR;
        case Errc::NotMinimalProjection: return OPAIR_ERR_NOT_MINIMAL_PROJECTION;
        case Errc::DegenerateSample: return OPAIR_ERR_DEGENERATE_SAMPLE;
        case Errc::InconsistentGamma: return OPAIR_ERR_INCONSISTENT_GAMMA;
    }
    return OPAIR_ERR_INTERNAL;
}

template <class F>
opair_status guard(F&& f) {
    g_last_error.clear();
    try {
        f();
        return OPAIR_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return OPAIR_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return OPAIR_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) {
        throw Error(Errc::InvalidArgument, what);
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

AlgebraDescriptor descriptor(const int* blocks, size_t count) {
    require(blocks != nullptr && count > 0, "block sizes are required");
    return AlgebraDescriptor(std::vector<int>(blocks, blocks + count));
}

opair_verdict verdict_code(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Preserving: return OPAIR_VERDICT_PRESERVING;
        case VerdictKind::NotPreserving: return OPAIR_VERDICT_NOT_PRESERVING;
        case VerdictKind::ZeroPair: return OPAIR_VERDICT_ZERO_PAIR;
        case VerdictKind::Inconclusive: return OPAIR_VERDICT_INCONCLUSIVE;
    }
    return OPAIR_VERDICT_INCONCLUSIVE;
}

ReportFormat report_format(opair_format format) {
    require(format == OPAIR_FORMAT_TEXT || format == OPAIR_FORMAT_STRUCTURED, "unknown report format");
    return format == OPAIR_FORMAT_TEXT ? ReportFormat::Text : ReportFormat::Structured;
}

SuiteConfig suite_config(const opair_suite_options* options) {
    opair_suite_options defaults;
    opair_suite_options_init(&defaults);
    const opair_suite_options& o = options ? *options : defaults;
    SuiteConfig config;
    if (o.blocks) {
        config.algebra = descriptor(o.blocks, o.block_count);
    }
    config.rank = o.rank;
    config.seed = o.seed;
    config.cases = o.cases;
    config.theta1 = o.theta1;
    config.theta2 = o.theta2;
    config.mutate = o.mutate != 0;
    // Validates the rank.
    (void)ModuleSpace(config.algebra, config.rank);
    return config;
}

}  // namespace

extern "C" {

const char* opair_version(void) { return "1.0.0"; }

const char* opair_status_string(opair_status status) {
    switch (status) {
        case OPAIR_OK: return "ok";
        case OPAIR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case OPAIR_ERR_PARSE: return "parse error";
        case OPAIR_ERR_INVALID_OPERAND: return "invalid operand";
        case OPAIR_ERR_NOT_HERMITIAN: return "not hermitian";
        case OPAIR_ERR_NOT_POSITIVE: return "not positive";
        case OPAIR_ERR_BLOCK_MISMATCH: return "block mismatch";
        case OPAIR_ERR_ZERO_VECTOR: return "zero vector";
        case OPAIR_ERR_SPACE_MISMATCH: return "space mismatch";
        case OPAIR_ERR_INVALID_THETA: return "invalid theta";
        case OPAIR_ERR_SINGULAR_GRAM: return "singular gram element";
        case OPAIR_ERR_NOT_A_LINEAR: return "not A-linear";
        case OPAIR_ERR_SINGULAR: return "singular";
        case OPAIR_ERR_NOT_MINIMAL_PROJECTION: return "not a minimal projection";
        case OPAIR_ERR_DEGENERATE_SAMPLE: return "degenerate sample";
        case OPAIR_ERR_INCONSISTENT_GAMMA: return "inconsistent gamma";
        case OPAIR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* opair_last_error(void) { return g_last_error.c_str(); }

void opair_string_free(char* s) { std::free(s); }

opair_status opair_instance_generate(const int* blocks, size_t block_count, int rank, const char* kind,
                                     uint64_t seed, double theta1, double theta2, opair_instance** out) {
    return guard([&] {
        require(out != nullptr && kind != nullptr, "null argument");
        *out = nullptr;
        auto* inst = new opair_instance;
        try {
            inst->file = generate_instance(descriptor(blocks, block_count), rank, parse_instance_kind(kind), seed,
                                           theta1, theta2);
        } catch (...) {
            delete inst;
            throw;
        }
        *out = inst;
    });
}

opair_status opair_instance_load(const char* text, opair_instance** out) {
    return guard([&] {
        require(out != nullptr && text != nullptr, "null argument");
        *out = nullptr;
        auto* inst = new opair_instance;
        try {
            inst->document = parse_document(text);
            inst->file = instance_from_json(inst->document);
        } catch (...) {
            delete inst;
            throw;
        }
        *out = inst;
    });
}

opair_status opair_instance_save(const opair_instance* instance, char** out) {
    return guard([&] {
        require(instance != nullptr && out != nullptr, "null argument");
        *out = copy_string(save_instance(instance->file));
    });
}

void opair_instance_free(opair_instance* instance) { delete instance; }

int opair_instance_rank(const opair_instance* instance) { return instance ? instance->file.rank : 0; }

size_t opair_instance_block_count(const opair_instance* instance) {
    return instance ? instance->file.algebra.block_count() : 0;
}

opair_status opair_instance_gamma(const opair_instance* instance, double* out, size_t capacity) {
    return guard([&] {
        require(instance != nullptr && out != nullptr, "null argument");
        require(instance->file.gamma.has_value(), "instance stores no gamma");
        const auto& scalars = instance->file.gamma->scalars();
        require(capacity >= 2 * scalars.size(), "output buffer too small");
        for (size_t i = 0; i < scalars.size(); ++i) {
            out[2 * i] = scalars[i].real();
            out[2 * i + 1] = scalars[i].imag();
        }
    });
}

opair_status opair_instance_extract(const opair_instance* instance, uint64_t seed, double tol, opair_format format,
                                    char** report, opair_verdict* verdict) {
    return guard([&] {
        require(instance != nullptr && report != nullptr, "null argument");
        require(tol > 0.0, "tol must be positive");
        const CommandResult r = extract_report(instance->file, instance->document, {seed, tol}, report_format(format));
        *report = copy_string(r.output);
        if (verdict) {
            *verdict = verdict_code(*r.verdict);
        }
    });
}

opair_status opair_instance_verify(const opair_instance* instance, uint64_t seed, double tol, opair_format format,
                                   char** report, opair_verdict* verdict, int* passed) {
    return guard([&] {
        require(instance != nullptr && report != nullptr, "null argument");
        require(tol > 0.0, "tol must be positive");
        const CommandResult r = verify_report(instance->file, {seed, tol}, report_format(format));
        *report = copy_string(r.output);
        if (verdict) {
            *verdict = verdict_code(*r.verdict);
        }
        if (passed) {
            *passed = r.outcome == Outcome::Pass;
        }
    });
}

size_t opair_suite_count(void) { return suite_names().size(); }

const char* opair_suite_name(size_t index) {
    return index < suite_names().size() ? suite_names()[index].c_str() : nullptr;
}

void opair_suite_options_init(opair_suite_options* options) {
    if (!options) {
        return;
    }
    const SuiteConfig defaults;
    options->blocks = nullptr;
    options->block_count = 0;
    options->rank = defaults.rank;
    options->seed = defaults.seed;
    options->cases = defaults.cases;
    options->theta1 = defaults.theta1;
    options->theta2 = defaults.theta2;
    options->mutate = 0;
    options->timing = 0;
}

opair_status opair_run_suites(const char* names, const opair_suite_options* options, opair_format format,
                              char** report, int* all_passed) {
    return guard([&] {
        require(names != nullptr && report != nullptr, "null argument");
        const CommandResult r = suites_report(resolve_suite_names(names), suite_config(options),
                                              report_format(format), options && options->timing);
        *report = copy_string(r.output);
        if (all_passed) {
            *all_passed = r.outcome == Outcome::Pass;
        }
    });
}

opair_status opair_replay_case(const char* names, const opair_suite_options* options, size_t case_index,
                               opair_format format, char** report, int* all_passed) {
    return guard([&] {
        require(names != nullptr && report != nullptr, "null argument");
        const CommandResult r = suites_report(resolve_suite_names(names), suite_config(options),
                                              report_format(format), options && options->timing, case_index);
        *report = copy_string(r.output);
        if (all_passed) {
            *all_passed = r.outcome == Outcome::Pass;
        }
    });
}

}  // extern "C"
