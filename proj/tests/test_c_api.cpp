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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <string>

#include "orthopair/orthopair.h"

namespace {

struct Owned {
    char* p = nullptr;
    ~Owned() { opair_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct Instance {
    opair_instance* p = nullptr;
    ~Instance() { opair_instance_free(p); }
};

const int kBlocks[] = {3, 2};

TEST(CApi, VersionAndStatusStrings) {
    EXPECT_STRNE(opair_version(), "");
    EXPECT_STREQ(opair_status_string(OPAIR_OK), "ok");
    EXPECT_STRNE(opair_status_string(OPAIR_ERR_PARSE), opair_status_string(OPAIR_ERR_SINGULAR));
}

TEST(CApi, GenerateSaveLoadRoundTrip) {
    Instance inst;
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "preserving", 7, 0.1, 0.1, &inst.p), OPAIR_OK);
    EXPECT_EQ(opair_instance_rank(inst.p), 3);
    EXPECT_EQ(opair_instance_block_count(inst.p), 2u);
    Owned text;
    ASSERT_EQ(opair_instance_save(inst.p, &text.p), OPAIR_OK);
    Instance back;
    ASSERT_EQ(opair_instance_load(text.p, &back.p), OPAIR_OK);
    Owned again;
    ASSERT_EQ(opair_instance_save(back.p, &again.p), OPAIR_OK);
    EXPECT_EQ(text.str(), again.str());
}

TEST(CApi, GammaAccessor) {
    Instance inst;
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "identity", 0, 0, 0, &inst.p), OPAIR_OK);
    double g[4] = {};
    ASSERT_EQ(opair_instance_gamma(inst.p, g, 4), OPAIR_OK);
    EXPECT_EQ(g[0], 1.0);
    EXPECT_EQ(g[1], 0.0);
    EXPECT_EQ(g[2], 1.0);
    EXPECT_EQ(opair_instance_gamma(inst.p, g, 3), OPAIR_ERR_INVALID_ARGUMENT);
    Instance corrupted;
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "corrupted", 0, 0, 0, &corrupted.p), OPAIR_OK);
    EXPECT_EQ(opair_instance_gamma(corrupted.p, g, 4), OPAIR_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ExtractVerdicts) {
    Instance good, bad;
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "preserving", 7, 0, 0, &good.p), OPAIR_OK);
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "corrupted", 7, 0, 0, &bad.p), OPAIR_OK);
    opair_verdict v;
    Owned r1, r2;
    ASSERT_EQ(opair_instance_extract(good.p, 0, 1e-8, OPAIR_FORMAT_TEXT, &r1.p, &v), OPAIR_OK);
    EXPECT_EQ(v, OPAIR_VERDICT_PRESERVING);
    EXPECT_NE(r1.str().find("verdict: preserving"), std::string::npos);
    ASSERT_EQ(opair_instance_extract(bad.p, 0, 1e-8, OPAIR_FORMAT_STRUCTURED, &r2.p, &v), OPAIR_OK);
    EXPECT_EQ(v, OPAIR_VERDICT_NOT_PRESERVING);
    // The structured report loads as an instance and its witness is re-confirmed.
    Instance fed;
    ASSERT_EQ(opair_instance_load(r2.p, &fed.p), OPAIR_OK);
    Owned r3;
    ASSERT_EQ(opair_instance_extract(fed.p, 0, 1e-8, OPAIR_FORMAT_TEXT, &r3.p, &v), OPAIR_OK);
    EXPECT_NE(r3.str().find("input witness: confirmed"), std::string::npos);
}

TEST(CApi, Verify) {
    Instance good, bad;
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 2, "preserving", 1, 0, 0, &good.p), OPAIR_OK);
    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 2, "corrupted", 1, 0, 0, &bad.p), OPAIR_OK);
    opair_verdict v;
    int passed = -1;
    Owned r1, r2;
    ASSERT_EQ(opair_instance_verify(good.p, 0, 1e-8, OPAIR_FORMAT_TEXT, &r1.p, &v, &passed), OPAIR_OK);
    EXPECT_EQ(passed, 1);
    ASSERT_EQ(opair_instance_verify(bad.p, 0, 1e-8, OPAIR_FORMAT_TEXT, &r2.p, &v, &passed), OPAIR_OK);
    EXPECT_EQ(passed, 0);
    EXPECT_EQ(v, OPAIR_VERDICT_NOT_PRESERVING);
}

TEST(CApi, ErrorsCarryMessages) {
    Instance inst;
    EXPECT_EQ(opair_instance_generate(kBlocks, 2, 3, "bogus", 0, 0, 0, &inst.p), OPAIR_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(inst.p, nullptr);
    EXPECT_NE(std::string(opair_last_error()).find("bogus"), std::string::npos);
    EXPECT_EQ(opair_instance_generate(kBlocks, 2, 0, "preserving", 0, 0, 0, &inst.p), OPAIR_ERR_INVALID_ARGUMENT);
    const int zero_block[] = {0};
    EXPECT_EQ(opair_instance_generate(zero_block, 1, 1, "preserving", 0, 0, 0, &inst.p),
              OPAIR_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(opair_instance_generate(kBlocks, 2, 3, "perturbed", 0, 1.5, 0, &inst.p), OPAIR_ERR_INVALID_THETA);
    EXPECT_EQ(opair_instance_load("{broken", &inst.p), OPAIR_ERR_PARSE);
    EXPECT_EQ(opair_instance_load(nullptr, &inst.p), OPAIR_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(opair_instance_generate(kBlocks, 2, 3, "preserving", 0, 0, 0, nullptr), OPAIR_ERR_INVALID_ARGUMENT);

    ASSERT_EQ(opair_instance_generate(kBlocks, 2, 3, "identity", 0, 0, 0, &inst.p), OPAIR_OK);
    opair_verdict v;
    Owned r;
    EXPECT_EQ(opair_instance_extract(inst.p, 0, -1.0, OPAIR_FORMAT_TEXT, &r.p, &v), OPAIR_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Suites) {
    EXPECT_EQ(opair_suite_count(), 7u);
    EXPECT_STREQ(opair_suite_name(0), "lemma_equivalences");
    EXPECT_EQ(opair_suite_name(99), nullptr);
    opair_suite_options opts;
    opair_suite_options_init(&opts);
    EXPECT_EQ(opts.rank, 3);
    EXPECT_EQ(opts.seed, 42u);
    EXPECT_EQ(opts.cases, 100);
    opts.cases = 5;
    Owned r;
    int passed = -1;
    ASSERT_EQ(opair_run_suites("identity_pairing,isometry_pair", &opts, OPAIR_FORMAT_TEXT, &r.p, &passed), OPAIR_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_NE(r.str().find("summary: 2 passed, 0 failed"), std::string::npos);

    Owned bad;
    EXPECT_EQ(opair_run_suites("nosuch", &opts, OPAIR_FORMAT_TEXT, &bad.p, &passed), OPAIR_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(opair_last_error()).find("real_rank_zero"), std::string::npos);

    opts.mutate = 1;
    Owned m, replay;
    ASSERT_EQ(opair_run_suites("identity_pairing", &opts, OPAIR_FORMAT_TEXT, &m.p, &passed), OPAIR_OK);
    EXPECT_EQ(passed, 0);
    ASSERT_EQ(opair_replay_case("identity_pairing", &opts, 0, OPAIR_FORMAT_STRUCTURED, &replay.p, &passed),
              OPAIR_OK);
    EXPECT_EQ(passed, 0);
}

TEST(CApi, CustomBlocks) {
    const int blocks[] = {2};
    opair_suite_options opts;
    opair_suite_options_init(&opts);
    opts.blocks = blocks;
    opts.block_count = 1;
    opts.rank = 2;
    opts.cases = 3;
    Owned r;
    int passed = -1;
    ASSERT_EQ(opair_run_suites("all", &opts, OPAIR_FORMAT_STRUCTURED, &r.p, &passed), OPAIR_OK);
    EXPECT_EQ(passed, 1);
    EXPECT_NE(r.str().find("\"passed\": 7"), std::string::npos);
}

}  // namespace
