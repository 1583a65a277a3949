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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "orthopair/suites.hpp"

namespace orthopair {

namespace {

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string plain(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string join_blocks(const AlgebraDescriptor& d) {
    std::string out;
    for (std::size_t i = 0; i < d.block_count(); ++i) {
        out += (i ? "," : "") + std::to_string(d.block_size(i));
    }
    return out;
}

CheckSummary& summary_for(SuiteReport& report, std::string_view name, double threshold) {
    auto it = std::find_if(report.checks.begin(), report.checks.end(),
                           [&](const CheckSummary& c) { return c.name == name; });
    if (it == report.checks.end()) {
        report.checks.push_back({std::string(name), 0.0, threshold, 0, 0});
        return report.checks.back();
    }
    return *it;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckSummary& c) { return c.failures == 0; });
}

const CheckSummary* SuiteReport::check(std::string_view name) const {
    for (const CheckSummary& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

CaseRecorder::CaseRecorder(SuiteReport& report, std::size_t case_index, std::uint64_t case_seed)
    : report_(report), case_index_(case_index), case_seed_(case_seed) {}

bool CaseRecorder::check_le(std::string_view name, double measured, double threshold,
                            const std::function<Json()>& payload) {
    CheckSummary& summary = summary_for(report_, name, threshold);
    ++summary.evaluations;
    // NaN fails.
    const bool ok = measured <= threshold;
    if (summary.evaluations == 1 || measured > summary.worst || std::isnan(measured)) {
        summary.worst = measured;
    }
    summary.threshold = std::max(summary.threshold, threshold);
    if (!ok) {
        ++summary.failures;
        if (report_.failures.size() < kMaxStoredFailures) {
            report_.failures.push_back(
                {case_index_, case_seed_, std::string(name), measured, threshold, payload ? payload() : Json()});
        }
    }
    return ok;
}

bool CaseRecorder::check(std::string_view name, bool ok, const std::function<Json()>& payload) {
    return check_le(name, ok ? 0.0 : 1.0, 0.0, payload);
}

void CaseRecorder::tally(std::string_view key, bool hit) {
    auto it = std::find_if(report_.parameters.begin(), report_.parameters.end(),
                           [&](const auto& p) { return p.first == key; });
    if (it == report_.parameters.end()) {
        Json counts = Json::object();
        counts["hits"] = 0;
        counts["total"] = 0;
        report_.parameters.emplace_back(std::string(key), std::move(counts));
        it = std::prev(report_.parameters.end());
    }
    it->second["hits"] = it->second["hits"].get<int>() + (hit ? 1 : 0);
    it->second["total"] = it->second["total"].get<int>() + 1;
}

Json to_json(const SuiteReport& report, bool timing) {
    Json out = Json::object();
    out["suite"] = report.suite;
    out["passed"] = report.passed();
    Json instance = Json::object();
    instance["blocks"] = to_json(report.space.algebra);
    instance["rank"] = report.space.rank;
    instance["seed"] = report.config.seed;
    instance["mutate"] = report.config.mutate;
    out["instance"] = std::move(instance);
    out["cases"] = report.cases_run;
    Json params = Json::object();
    for (const auto& [key, value] : report.parameters) {
        params[key] = value;
    }
    out["parameters"] = std::move(params);
    Json checks = Json::array();
    for (const CheckSummary& c : report.checks) {
        Json j = Json::object();
        j["name"] = c.name;
        j["worst"] = c.worst;
        j["threshold"] = c.threshold;
        j["evaluations"] = c.evaluations;
        j["failures"] = c.failures;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    Json failures = Json::array();
    for (const CaseFailure& f : report.failures) {
        Json j = Json::object();
        j["case"] = f.case_index;
        j["case_seed"] = f.case_seed;
        j["check"] = f.check;
        j["measured"] = f.measured;
        j["threshold"] = f.threshold;
        j["inputs"] = f.payload;
        failures.push_back(std::move(j));
    }
    out["failures"] = std::move(failures);
    out["notes"] = report.notes;
    if (timing) {
        out["wall_seconds"] = report.wall_seconds;
    }
    return out;
}

std::string render_text(const SuiteReport& report, bool timing) {
    std::ostringstream os;
    os << "suite " << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
    os << "  instance: blocks=" << join_blocks(report.space.algebra) << " rank=" << report.space.rank
       << " seed=" << report.config.seed << " cases=" << report.cases_run
       << (report.config.mutate ? " mutate=on" : "") << "\n";
    for (const auto& [key, value] : report.parameters) {
        os << "  " << key << " = " << (value.is_number_float() ? plain(value.get<double>()) : value.dump()) << "\n";
    }
    for (const CheckSummary& c : report.checks) {
        os << "  " << (c.failures ? "FAIL" : "ok  ") << " " << c.name << ": worst " << sci(c.worst) << " (limit "
           << sci(c.threshold) << ", " << c.evaluations << " evaluations, " << c.failures << " failures)\n";
    }
    for (const CaseFailure& f : report.failures) {
        os << "  failure: case " << f.case_index << " (case seed " << f.case_seed << ") " << f.check << " measured "
           << sci(f.measured) << " > " << sci(f.threshold) << "\n";
    }
    for (const std::string& note : report.notes) {
        os << "  note: " << note << "\n";
    }
    if (timing) {
        os << "  wall time: " << sci(report.wall_seconds) << " s\n";
    }
    return os.str();
}

}  // namespace orthopair
