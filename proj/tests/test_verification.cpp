#include <gtest/gtest.h>

#include "mngraph/constructions.hpp"
#include "mngraph/random.hpp"
#include "mngraph/verification.hpp"

using namespace mngraph;

namespace {

SuiteOptions quick() {
    SuiteOptions o;
    o.catalog_max_vertices = 6;
    o.random_samples = 60;
    o.labelings_per_graph = 3;
    return o;
}

}  // namespace

TEST(Suites, EveryFastSuitePasses) {
    for (const std::string& name : {"trees", "partial2tree", "planar", "lemma1", "bounds", "vizing"}) {
        const VerificationReport r = verify_theorem_suite(name, quick());
        EXPECT_TRUE(r.passed()) << r.to_text();
        EXPECT_FALSE(r.records.empty());
        EXPECT_EQ(r.suite, name);
    }
}

TEST(Suites, SubcubicOnOneAlphabet) {
    SuiteOptions o = quick();
    o.alphabets = {{1, 1}};
    const VerificationReport r = verify_subcubic(o);
    EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(Suites, RejectExcludedAlphabet) {
    SuiteOptions o = quick();
    o.alphabets = {{0, 1}};
    for (const std::string& name : suite_names()) {
        if (name == "vizing") continue;
        EXPECT_THROW(verify_theorem_suite(name, o), InputError) << name;
    }
    EXPECT_THROW(verify_theorem_suite("nope", o), InputError);
    EXPECT_THROW(verify_degeneracy_bound(MixedGraph(0, 1, 2)), InputError);
}

TEST(Suites, DeterministicAcrossThreadCounts) {
    for (const std::string& name : {"trees", "planar", "bounds"}) {
        SuiteOptions a = quick();
        a.seed = 42;
        SuiteOptions b = a;
        b.threads = 3;
        EXPECT_EQ(verify_theorem_suite(name, a).to_tsv(), verify_theorem_suite(name, b).to_tsv());
    }
}

TEST(Suites, SeedChangesSampledCorpusOnly) {
    SuiteOptions a = quick();
    SuiteOptions b = quick();
    b.seed = 7;
    const VerificationReport ra = verify_bounds(a);
    const VerificationReport rb = verify_bounds(b);
    EXPECT_TRUE(rb.passed());
    EXPECT_EQ(ra.records.size(), rb.records.size());
}

TEST(SingleChecks, SandwichCapAndDegeneracy) {
    const MixedGraph g = build_petersen_11();
    EXPECT_TRUE(verify_sandwich(g).pass);
    EXPECT_TRUE(verify_max_degree_cap(g).pass);
    EXPECT_TRUE(verify_degeneracy_bound(g).pass);
    EXPECT_EQ(degeneracy_bound(3, 3), 9);   // floor(2*9/3)+3
    EXPECT_EQ(degeneracy_bound(2, 6), 24);  // floor(36/2)+6
    const CheckRecord star = verify_degeneracy_bound(build_star(0, 2));
    EXPECT_TRUE(star.pass);
    EXPECT_EQ(star.computed, "2");
    EXPECT_TRUE(verify_max_degree_cap(build_wagner_02()).pass);
}

TEST(SingleChecks, RandomGraphsWithinDegreeSix) {
    Rng rng(19);
    for (int i = 0; i < 100; ++i) {
        const UnderlyingGraph u = random_graph_max_degree(rng, rng.between(2, 12), rng.between(100, 500), 6);
        const MixedGraph g = random_mixed_graph(rng, u, 1, 1);
        EXPECT_TRUE(verify_degeneracy_bound(g).pass);
        EXPECT_TRUE(verify_max_degree_cap(g).pass);
        if (g.vertex_count() <= 9) EXPECT_TRUE(verify_sandwich(g).pass);
    }
}

TEST(Report, TextAndTsvFormats) {
    VerificationReport r{"demo", 5, {}};
    r.records.push_back({"demo", "one", "a claim", "3", "3", true, CheckKind::exact, 0.25});
    r.records.push_back({"demo", "two", "other", "x", "y", false, CheckKind::spot_check, 0.0});
    EXPECT_EQ(r.to_text(),
              "demo/one: claimed=3 computed=3 PASS [exact]\n"
              "demo/two: claimed=x computed=y FAIL [bound-spot-checked]\n"
              "demo: FAIL (1/2 checks, seed 5)\n");
    EXPECT_EQ(r.to_tsv(),
              "suite\tcheck\tkind\tclaim\tclaimed\tcomputed\tresult\tseed\n"
              "demo\tone\texact\ta claim\t3\t3\tPASS\t5\n"
              "demo\ttwo\tbound-spot-checked\tother\tx\ty\tFAIL\t5\n");
    EXPECT_NE(r.to_text(true).find("seconds=0.250"), std::string::npos);
    EXPECT_NE(r.to_tsv(true).find("\tseconds\n"), std::string::npos);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(kind_name(CheckKind::construction), "construction-verified");
    EXPECT_EQ(kind_name(CheckKind::exhaustive), "exhaustive");
    EXPECT_EQ(kind_name(CheckKind::property), "property");
}
