#include <catch2/catch_amalgamated.hpp>

#include "twistlab/io.hpp"

using namespace twistlab;

TEST_CASE("tensor serialization round trip") {
    Tensor2 r = get_rmatrix("Etheta");
    Tensor2 back = tensor2_from_json(tensor2_to_json(r));
    CHECK(back == r);
}

TEST_CASE("bracket table serialization round trip") {
    for (const auto& name : dual_table_names()) {
        BracketTable t = get_dual_table(name).table;
        BracketTable back = bracket_table_from_json(bracket_table_to_json(t));
        INFO(name);
        CHECK(back.basis() == t.basis());
        CHECK(back.entries() == t.entries());
    }
}

TEST_CASE("report serialization") {
    Report r;
    r.check = "demo";
    r.inputs = {{"twist", "j"}};
    r.status = "fail";
    r.witness = {{"entry", "(0,1)"}, {"lhs", "1"}, {"rhs", "0"}};
    r.reps = {"fund"};
    r.elapsed_ms = 12;
    Json j = report_to_json(r);
    CHECK(j["check"] == "demo");
    CHECK(j["status"] == "fail");
    CHECK(j["witness"]["entry"] == "(0,1)");
    CHECK(j["elapsed_ms"] == 12);
    CHECK(report_to_json(r, false)["elapsed_ms"] == 0);

    Report ok;
    ok.check = "demo2";
    ok.status = "pass";
    CHECK(report_to_json(ok)["witness"].is_null());

    std::string md = reports_to_markdown({r, ok});
    CHECK(md.find("## [FAIL] demo") != std::string::npos);
    CHECK(md.find("## [pass] demo2") != std::string::npos);
}

TEST_CASE("ingested tables flow into the solvers") {
    // round-trip a catalog table through json and hand it to the jacobiator
    BracketTable t = bracket_table_from_json(bracket_table_to_json(get_dual_table("Pprime").table));
    CHECK(jacobiator(t).empty());
}
