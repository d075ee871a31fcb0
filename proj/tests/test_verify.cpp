#include <doctest.h>

#include "json.hpp"

#include "domreconf/errors.hpp"
#include "domreconf/verify.hpp"

using namespace domreconf;

namespace {

// Moves one gluing edge from l_(2,1) to l_(2,2): the bottom cluster no
// longer forces L_2 into S_1 when L_1 sits in S_4.
void misglue(LadderGraph& g) {
    if (g.ladders() < 2) return;
    Graph& graph = g.mutable_graph();
    REQUIRE(graph.adjacent(g.left(2, 1), g.gluing(1, 3)));
    graph.remove_edge(g.left(2, 1), g.gluing(1, 3));
    graph.add_edge(g.left(2, 2), g.gluing(1, 3));
}

VerifyOptions small_options() {
    VerifyOptions options;
    return options;
}

} // namespace

TEST_CASE("claim ids and plans") {
    CHECK(claim_ids().size() == 11);
    auto quick = claim_plan(Level::quick);
    auto full = claim_plan(Level::full);
    CHECK(full.size() == quick.size() + 3);
    for (const auto& item : quick) {
        CHECK(item.claim_id != "fact9");
        CHECK(item.claim_id != "lem3");
        if (item.claim_id == "thm5") CHECK(item.params.at("n") == 1);
    }
    CHECK_THROWS_AS(run_claim("nope"), PreconditionError);
    CHECK_THROWS_AS(run_claim("lem1", {{"q", 1}}), PreconditionError);
    CHECK_THROWS_AS(run_claim("lem1", {{"b", 2}}), PreconditionError);
}

TEST_CASE("lem1 at (2,3)") {
    auto r = run_claim("lem1", {{"d", 2}, {"b", 3}});
    CHECK(r.verdict == Verdict::pass);
    REQUIRE(r.find("Gamma"));
    CHECK(*r.find("Gamma") == "3");
}

TEST_CASE("thm5 at n = 1") {
    auto r = run_claim("thm5", {{"n", 1}});
    CHECK(r.verdict == Verdict::pass);
    CHECK(*r.find("distance") == "12");
    CHECK(*r.find("bound") == "12");
}

TEST_CASE("thm3 at m = 2") {
    auto r = run_claim("thm3", {{"m", 2}});
    CHECK(r.verdict == Verdict::pass);
    CHECK(*r.find("components") == "4");
    CHECK(*r.find("nodes") == "4");
}

TEST_CASE("thm2, fact8, lem2 and the partition") {
    for (auto [d, b] : {std::pair{2, 3}, std::pair{3, 3}}) {
        auto r = run_claim("thm2", {{"d", d}, {"b", b}});
        CHECK(r.verdict == Verdict::pass);
        CHECK(*r.find("implicit_search") == "disconnected");
    }
    auto f8 = run_claim("fact8", {{"samples", 2000}});
    CHECK(f8.verdict == Verdict::pass);
    CHECK(*f8.find("candidates") == "15625");
    CHECK(*f8.find("dominating") == "7");
    auto l2 = run_claim("lem2");
    CHECK(l2.verdict == Verdict::pass);
    CHECK(*l2.find("geodesics") == "1");
    auto part = run_claim("cor2partition", {{"d", 2}, {"b", 4}});
    CHECK(part.verdict == Verdict::pass);
}

TEST_CASE("thm1 and cor1 on a small sample") {
    auto t1 = run_claim("thm1", {{"graphs", 20}, {"n_max", 9}});
    CHECK(t1.verdict == Verdict::pass);
    CHECK(*t1.find("bfs_checked") == *t1.find("cases"));
    auto c1 = run_claim("cor1", {{"graphs", 20}});
    CHECK(c1.verdict == Verdict::pass);
}

TEST_CASE("full run passes and is independent of worker count") {
    auto one = run_all(Level::full, small_options(), 1);
    auto many = run_all(Level::full, small_options(), 4);
    CHECK(overall_status(one) == 0);
    for (const auto& r : one) {
        CAPTURE(r.claim_id);
        CAPTURE(r.detail);
        CHECK(r.verdict == Verdict::pass);
    }
    CHECK(format_json(one) == format_json(many));
    CHECK(format_table(one) == format_table(many));

    for (const auto& r : one) {
        if (r.claim_id == "thm5" && r.params.at("n") == 2) {
            CHECK(std::stoi(*r.find("distance")) >= 48);
        }
        if (r.claim_id == "lem3") {
            CHECK(*r.find("switches") == "1,3");
        }
        if (r.claim_id == "fact9") {
            CHECK(*r.find("dominating_sets") == "31");
        }
    }
}

TEST_CASE("a misplaced gluing edge is caught") {
    VerifyOptions options;
    options.ladder_mutation = misglue;
    auto reports = run_all(Level::full, options, 1, {"fact9", "thm5", "lem3"});
    bool fact9_failed = false;
    for (const auto& r : reports) {
        if (r.claim_id == "fact9") fact9_failed = r.verdict == Verdict::fail;
    }
    CHECK(fact9_failed);
    CHECK(overall_status(reports) == 1);
}

TEST_CASE("a tiny node cap skips instead of failing") {
    VerifyOptions options;
    options.limits.max_nodes = 10;
    auto reports = run_all(Level::quick, options, 2);
    std::size_t skipped = 0;
    for (const auto& r : reports) {
        CHECK(r.verdict != Verdict::fail);
        if (r.verdict == Verdict::skipped) {
            ++skipped;
            CHECK(r.detail.find("resource cap") != std::string::npos);
        }
    }
    CHECK(skipped > 0);
    CHECK(overall_status(reports) == 3);
}

TEST_CASE("report formats") {
    auto reports = run_all(Level::quick, {}, 1, {"lem1"});
    REQUIRE(reports.size() == 3);
    auto json = nlohmann::json::parse(format_json(reports));
    CHECK(json.size() == 3);
    CHECK(json[0]["id"] == "lem1");
    CHECK(json[0]["verdict"] == "pass");
    CHECK(json[0]["params"]["d"] == 2);
    CHECK_FALSE(json[0].contains("runtime"));
    CHECK(nlohmann::json::parse(format_json(reports, true))[0].contains("runtime"));
    std::string table = format_table(reports);
    CHECK(table.find("lem1") != std::string::npos);
    CHECK(table.find("all claims pass") != std::string::npos);
}
