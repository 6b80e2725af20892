#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "parared/cli.hpp"
#include "parared/generate.hpp"
#include "parared/io.hpp"
#include "parared/verify.hpp"

using namespace parared;

namespace {

std::string temp_path(const std::string& name) {
    return "/tmp/parared-test-" + name;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("generation is seed-deterministic") {
    const char* kinds[] = {"graph", "bf", "dtsc", "mfa", "ca", "lcs", "gen",
                           "family-union-bf", "family-union-agen"};
    for (const char* kind : kinds) {
        ProblemInstance a = gen_instance(kind, {}, 123);
        ProblemInstance b = gen_instance(kind, {}, 123);
        CHECK(serialize_instance(a) == serialize_instance(b));
        ProblemInstance c = gen_instance(kind, {}, 124);
        CHECK(serialize_instance(a) != serialize_instance(c));
    }
}

TEST_CASE("generated empty graphs are legal") {
    GenProfile p;
    p.n = 0;
    ProblemInstance g = gen_instance("graph", p, 1);
    CHECK(std::get<Graph>(g).n() == 0);
}

TEST_CASE("verification is seed-reproducible") {
    const ReductionDescriptor* desc = find_reduction("family_to_subset_bf");
    REQUIRE(desc != nullptr);
    auto r1 = verify_reduction(*desc, 20, 7);
    auto r2 = verify_reduction(*desc, 20, 7);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].seed == r2[i].seed);
        CHECK(r1[i].source == r2[i].source);
        CHECK(r1[i].target == r2[i].target);
        CHECK(r1[i].kappa2 == r2[i].kappa2);
    }
    CHECK(summarize(r1).all_ok());
}

TEST_CASE("reports record the parameter bound check") {
    const ReductionDescriptor* desc = find_reduction("subset_to_weighted_agen");
    REQUIRE(desc != nullptr);
    auto reports = verify_reduction(*desc, 10, 3);
    for (const auto& r : reports) {
        CHECK(r.g_kappa1 == r.kappa1 + 3);
        if (!r.skipped) CHECK(r.kappa2 <= r.g_kappa1);
    }
    std::string jsonl = reports_to_jsonl("subset_to_weighted_agen", reports);
    CHECK(jsonl.find("\"kappa2\"") != std::string::npos);
    CHECK(summary_table("subset_to_weighted_agen", reports).find("agreed") !=
          std::string::npos);
}

TEST_CASE("the identity reduction agrees everywhere") {
    const ReductionDescriptor* desc = find_reduction("identity");
    REQUIRE(desc != nullptr);
    auto reports = verify_reduction(*desc, 50, 1);
    VerifySummary s = summarize(reports);
    CHECK(s.agreed == 50);
}

TEST_CASE("cli solve exit codes") {
    // a satisfied formula instance
    write_file(temp_path("sat.inst"), "bf 0\nvariables 1\nformula v.\nassignment 1\n");
    CHECK(run_cli({"solve", "bf", temp_path("sat.inst")}) == 0);
    write_file(temp_path("unsat.inst"), "bf 0\nvariables 1\nformula v.\nassignment 0\n");
    CHECK(run_cli({"solve", "bf", temp_path("unsat.inst")}) == 1);
    CHECK(run_cli({"solve", "bf", temp_path("missing.inst")}) == 3);
    CHECK(run_cli({"solve", "nonsense-kind", temp_path("sat.inst")}) == 3);
}

TEST_CASE("cli gen, reduce and solve pipeline") {
    std::string in = temp_path("fam.inst");
    std::string mid = temp_path("sub.inst");
    CHECK(run_cli({"gen", "family-union-bf", "--seed", "5", "--out", in}) == 0);
    CHECK(run_cli({"reduce", "family_to_subset_bf", in, mid}) == 0);
    int a = run_cli({"solve", "union", in});
    int b = run_cli({"solve", "union", mid});
    CHECK(a == b);

    std::string far = temp_path("weighted.inst");
    CHECK(run_cli({"reduce", "family_to_subset_bf+subset_to_weighted_bf", in, far}) == 0);
    CHECK(run_cli({"solve", "union", far}) == a);
}

TEST_CASE("cli rejects unknown reductions") {
    write_file(temp_path("x.inst"), "bf 0\nvariables 1\nformula v.\n");
    CHECK(run_cli({"reduce", "unknown", temp_path("x.inst"), temp_path("y.inst")}) == 3);
    CHECK(run_cli({"verify", "--reduction", "unknown"}) == 3);
}

TEST_CASE("cli verify writes a report") {
    std::string out = temp_path("report.jsonl");
    std::remove(out.c_str());
    CHECK(run_cli({"verify", "--reduction", "identity", "--cases", "5", "--seed", "2",
                   "--out", out}) == 0);
    std::ifstream in(out);
    REQUIRE(in.good());
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 5);
}

TEST_CASE("cli normalize") {
    std::string rs = temp_path("sys.inst");
    write_file(rs, "rs 0\nalphabet a b c\nrules 1\na b -> c\n");
    CHECK(run_cli({"normalize", rs, "a", "b"}) == 0);

    std::string looping = temp_path("loop.inst");
    write_file(looping, "rs 0\nalphabet a b\nrules 2\na -> b\nb -> a\n");
    CHECK(run_cli({"normalize", looping, "a", "--budget", "10"}) == 2);
}

TEST_CASE("the documented example files are canonical") {
    const char* names[] = {"graph", "bf", "dtsc", "ntsc", "tm2", "mfa", "ca",
                           "seqca", "tpg", "lcs", "gen", "rs", "projection",
                           "family-union", "subset-union", "weighted-union"};
    for (const char* name : names) {
        CAPTURE(name);
        std::string path =
            std::string(PARARED_SOURCE_DIR) + "/docs/examples/" + name + ".inst";
        std::ifstream in(path);
        REQUIRE(in.good());
        std::ostringstream buf;
        buf << in.rdbuf();
        ProblemInstance inst = parse_instance(buf.str());
        CHECK(kind_of(inst) == name);
        CHECK(serialize_instance(inst) == buf.str());
    }
}

TEST_CASE("the documented examples decide as expected") {
    std::string dir = std::string(PARARED_SOURCE_DIR) + "/docs/examples/";
    CHECK(run_cli({"solve", "bf", dir + "bf.inst"}) == 0);
    CHECK(run_cli({"solve", "layered-reach", dir + "graph.inst"}) == 0);
    CHECK(run_cli({"solve", "dtsc", dir + "dtsc.inst"}) == 0);
    CHECK(run_cli({"solve", "mfa", dir + "mfa.inst"}) == 0);
    CHECK(run_cli({"solve", "ca", dir + "ca.inst"}) == 0);
    CHECK(run_cli({"solve", "seqca", dir + "seqca.inst"}) == 0);
    CHECK(run_cli({"solve", "tpg", dir + "tpg.inst"}) == 0);
    CHECK(run_cli({"solve", "lcs", dir + "lcs.inst"}) == 0);
    CHECK(run_cli({"solve", "lcs-injective", dir + "lcs.inst"}) == 0);
    CHECK(run_cli({"solve", "agen", dir + "gen.inst"}) == 0);
    CHECK(run_cli({"solve", "union", dir + "family-union.inst"}) == 1);
    CHECK(run_cli({"solve", "union", dir + "subset-union.inst"}) == 0);
    CHECK(run_cli({"solve", "union", dir + "weighted-union.inst"}) == 0);
    CHECK(run_cli({"normalize", dir + "rs.inst", "a", "b"}) == 0);
}

TEST_CASE("truncated and mangled files fail cleanly") {
    const char* names[] = {"graph", "bf", "dtsc", "tm2", "mfa", "ca", "tpg",
                           "lcs", "gen", "rs", "projection", "family-union"};
    for (const char* name : names) {
        CAPTURE(name);
        std::string path =
            std::string(PARARED_SOURCE_DIR) + "/docs/examples/" + name + ".inst";
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string text = buf.str();
        // truncate at every line boundary
        for (std::size_t pos = text.find('\n'); pos != std::string::npos;
             pos = text.find('\n', pos + 1)) {
            std::string cut = text.substr(0, pos + 1);
            if (cut == text) break;
            try {
                parse_instance(cut);
            } catch (const ParseError&) {
            } catch (const PreconditionError&) {
            } catch (const BadWord&) {
            }
        }
        // and a few character-level mangles
        for (std::size_t i = 0; i < text.size(); i += 7) {
            std::string bad = text;
            bad[i] = '~';
            try {
                parse_instance(bad);
            } catch (const ParseError&) {
            } catch (const PreconditionError&) {
            } catch (const BadWord&) {
            }
        }
        CHECK(true);  // reaching here means no crash or stray exception type
    }
}

TEST_CASE("cli solve union on an agen weighted instance") {
    Rng rng(13);
    GeneratorInstance gi = gen_generator(rng, 3, 3, 1, true);
    WeightedUnionInstance w;
    w.base = BaseKind::Agen;
    w.tmpl = agen_template(gi);
    w.k = 1;
    std::string path = temp_path("agen.inst");
    save_instance_file(path, w);
    int code = run_cli({"solve", "union", path});
    CHECK((code == 0 || code == 1));
}
