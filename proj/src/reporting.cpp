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

#include "orthopair/reporting.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace orthopair {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string complex_text(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12e %+.12ei", z.real(), z.imag());
    return buf;
}

void require_operators(const InstanceFile& instance) {
    if (!instance.t || !instance.s) {
        throw Error(Errc::InvalidArgument, "instance does not contain both operators T and S");
    }
}

std::optional<Json> find_witness(const Json& document) {
    if (!document.is_object()) {
        return std::nullopt;
    }
    if (document.contains("report") && document["report"].is_object() && document["report"].contains("witness")) {
        return document["report"]["witness"];
    }
    if (document.contains("witness")) {
        return document["witness"];
    }
    return std::nullopt;
}

void gamma_lines(std::ostringstream& os, const char* label, const CentralElement& gamma) {
    os << label << ":\n";
    for (std::size_t b = 0; b < gamma.scalars().size(); ++b) {
        os << "  block " << b << " (k=" << gamma.descriptor().block_size(b) << "): " << complex_text(gamma[b])
           << "\n";
    }
}

Json emit(const InstanceFile& instance, Json report) {
    Json doc = to_json(instance);
    doc["report"] = std::move(report);
    return doc;
}

}  // namespace

Outcome outcome_of(VerdictKind kind) noexcept {
    switch (kind) {
        case VerdictKind::Preserving:
        case VerdictKind::ZeroPair: return Outcome::Pass;
        case VerdictKind::NotPreserving: return Outcome::Fail;
        case VerdictKind::Inconclusive: return Outcome::Inconclusive;
    }
    return Outcome::Inconclusive;
}

CommandResult extract_report(const InstanceFile& instance, const Json& document, const CheckOptions& options,
                             ReportFormat format) {
    require_operators(instance);
    const ModuleOperator& t = *instance.t;
    const ModuleOperator& s = *instance.s;
    const Verdict verdict = decide_preserving(t, s, {options.seed, options.tol});

    std::optional<GammaEstimate> est;
    double residual = 0.0;
    if (verdict.kind != VerdictKind::ZeroPair) {
        est = estimate_gamma(t, s, {options.seed, 3, options.tol});
        residual = verify_characterization(t, s, est->gamma);
    }
    std::optional<double> stored_deviation;
    if (instance.gamma && est) {
        double worst = 0.0;
        for (std::size_t b = 0; b < est->gamma.scalars().size(); ++b) {
            worst = std::max(worst, std::abs(est->gamma[b] - (*instance.gamma)[b]));
        }
        stored_deviation = worst;
    }
    std::optional<bool> input_confirmed;
    if (auto w = find_witness(document)) {
        input_confirmed = confirm_witness(t, s, witness_from_json(*w, instance.space()));
    }

    CommandResult result;
    result.verdict = verdict.kind;
    result.outcome = outcome_of(verdict.kind);

    if (format == ReportFormat::Structured) {
        Json report = Json::object();
        report["command"] = "extract";
        report["seed"] = options.seed;
        report["tol"] = options.tol;
        report["verdict"] = std::string(verdict_name(verdict.kind));
        if (est) {
            report["gamma"] = to_json(est->gamma);
            report["residual"] = residual;
            report["tolerance"] = est->tolerance;
            report["spread"] = est->spread;
            report["consistent"] = est->consistent;
            Json samples = Json::array();
            for (const ProjectionGamma& p : est->samples) {
                Json j = Json::object();
                j["block"] = p.block;
                j["projection"] = p.projection;
                j["gamma"] = to_json(p.gamma);
                samples.push_back(std::move(j));
            }
            report["per_projection"] = std::move(samples);
            report["least_squares"] = to_json(est->least_squares);
        } else {
            report["gamma"] = to_json(verdict.characterization->gamma);
            report["residual"] = verdict.characterization->residual;
        }
        if (stored_deviation) {
            report["stored_gamma_deviation"] = *stored_deviation;
        }
        if (verdict.witness) {
            report["witness"] = to_json(*verdict.witness);
        }
        if (input_confirmed) {
            report["input_witness_confirmed"] = *input_confirmed;
        }
        if (!verdict.detail.empty()) {
            report["detail"] = verdict.detail;
        }
        result.output = emit(instance, std::move(report)).dump(2) + "\n";
        return result;
    }

    std::ostringstream os;
    os << "verdict: " << verdict_name(verdict.kind) << "\n";
    if (est) {
        gamma_lines(os, "gamma", est->gamma);
        os << "residual: " << sci(residual) << " (tolerance " << sci(est->tolerance) << ")\n";
        os << "spread: " << sci(est->spread) << (est->consistent ? " (consistent)" : " (inconsistent)") << "\n";
        os << "per-projection:\n";
        for (const ProjectionGamma& p : est->samples) {
            os << "  block " << p.block << " " << p.projection << ": " << complex_text(p.gamma) << "\n";
        }
        gamma_lines(os, "least-squares gamma", est->least_squares);
    } else {
        os << "gamma: 0 (" << verdict.detail << ")\n";
    }
    if (stored_deviation) {
        os << "stored gamma deviation: " << sci(*stored_deviation) << "\n";
    }
    if (verdict.witness) {
        os << "witness: ratio " << sci(verdict.witness->ratio) << " |<x,y>| " << sci(verdict.witness->inner_norm)
           << "\n";
        os << "witness pair: " << to_json(*verdict.witness).dump() << "\n";
    }
    if (input_confirmed) {
        os << "input witness: " << (*input_confirmed ? "confirmed" : "rejected") << "\n";
    }
    if (!verdict.detail.empty() && verdict.kind != VerdictKind::ZeroPair) {
        os << "detail: " << verdict.detail << "\n";
    }
    result.output = os.str();
    return result;
}

CommandResult verify_report(const InstanceFile& instance, const CheckOptions& options, ReportFormat format) {
    require_operators(instance);
    const ModuleOperator& t = *instance.t;
    const ModuleOperator& s = *instance.s;
    const Verdict verdict = decide_preserving(t, s, {options.seed, options.tol});

    std::optional<double> stored_residual;
    bool stored_ok = true;
    if (instance.gamma) {
        const double tolerance = characterization_tolerance(t, s, options.tol);
        stored_residual = verify_characterization(t, s, *instance.gamma);
        stored_ok = *stored_residual <= tolerance;
    }

    CommandResult result;
    result.verdict = verdict.kind;
    result.outcome = outcome_of(verdict.kind);
    if (result.outcome == Outcome::Pass && !stored_ok) {
        result.outcome = Outcome::Fail;
    }

    if (format == ReportFormat::Structured) {
        Json report = Json::object();
        report["command"] = "verify";
        report["seed"] = options.seed;
        report["tol"] = options.tol;
        report["verdict"] = std::string(verdict_name(verdict.kind));
        if (verdict.characterization) {
            report["gamma"] = to_json(verdict.characterization->gamma);
            report["residual"] = verdict.characterization->residual;
            report["tolerance"] = verdict.characterization->tolerance;
        }
        if (stored_residual) {
            report["stored_gamma_residual"] = *stored_residual;
            report["stored_gamma_consistent"] = stored_ok;
        }
        if (verdict.witness) {
            report["witness"] = to_json(*verdict.witness);
        }
        if (!verdict.detail.empty()) {
            report["detail"] = verdict.detail;
        }
        report["passed"] = result.outcome == Outcome::Pass;
        result.output = emit(instance, std::move(report)).dump(2) + "\n";
        return result;
    }

    std::ostringstream os;
    os << "verdict: " << verdict_name(verdict.kind) << "\n";
    if (verdict.characterization) {
        gamma_lines(os, "gamma", verdict.characterization->gamma);
        os << "residual: " << sci(verdict.characterization->residual) << " (tolerance "
           << sci(verdict.characterization->tolerance) << ")\n";
    }
    if (stored_residual) {
        os << "stored gamma residual: " << sci(*stored_residual) << (stored_ok ? " (consistent)" : " (inconsistent)")
           << "\n";
    }
    if (verdict.witness) {
        os << "witness: ratio " << sci(verdict.witness->ratio) << "\n";
        os << "witness pair: " << to_json(*verdict.witness).dump() << "\n";
    }
    if (!verdict.detail.empty()) {
        os << "detail: " << verdict.detail << "\n";
    }
    os << "result: " << (result.outcome == Outcome::Pass ? "PASS" : "FAIL") << "\n";
    result.output = os.str();
    return result;
}

std::vector<std::string> resolve_suite_names(std::string_view list) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        std::string name(list.substr(start, comma - start));
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name == "all") {
            out.insert(out.end(), suite_names().begin(), suite_names().end());
        } else if (!is_suite_name(name)) {
            std::string known;
            for (const std::string& n : suite_names()) {
                known += (known.empty() ? "" : ", ") + n;
            }
            throw Error(Errc::InvalidArgument, "unknown suite '" + name + "'; known suites: all, " + known);
        } else {
            out.push_back(name);
        }
        start = comma + 1;
    }
    return out;
}

CommandResult suites_report(const std::vector<std::string>& names, const SuiteConfig& config, ReportFormat format,
                            bool timing, std::optional<std::size_t> case_index) {
    std::vector<SuiteReport> reports;
    for (const std::string& name : names) {
        reports.push_back(case_index ? replay_case(name, config, *case_index) : run_suite(name, config));
    }
    const auto passed = static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); }));

    CommandResult result;
    result.outcome = passed == reports.size() ? Outcome::Pass : Outcome::Fail;
    if (format == ReportFormat::Structured) {
        Json doc = Json::object();
        Json suites = Json::array();
        for (const SuiteReport& r : reports) {
            suites.push_back(to_json(r, timing));
        }
        doc["suites"] = std::move(suites);
        doc["passed"] = passed;
        doc["failed"] = reports.size() - passed;
        result.output = doc.dump(2) + "\n";
        return result;
    }
    std::ostringstream os;
    for (const SuiteReport& r : reports) {
        os << render_text(r, timing);
    }
    os << "summary: " << passed << " passed, " << reports.size() - passed << " failed\n";
    result.output = os.str();
    return result;
}

}  // namespace orthopair
