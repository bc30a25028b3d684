#include "socarg/errors.hpp"
#include "socarg/saf_format.hpp"

#include "doctest.h"
#include "fixtures.hpp"

#include <random>

using namespace socarg;
using socarg::testing::id;

namespace {

template <typename E>
E parse_error(std::string_view text) {
    try {
        parse_saf(text);
    } catch (const E& e) {
        return e;
    }
    FAIL("expected a parse error");
    throw;
}

} // namespace

TEST_CASE("parse_saf reads the three statement kinds") {
    const SafDocument doc = parse_saf("arg(a). arg(b).\natt(a,b).\nvotes(a,3,1).\n");
    REQUIRE(doc.statements.size() == 4);
    CHECK(std::get<ArgumentDecl>(doc.statements[1].fact).name == id("b"));
    CHECK(doc.statements[1].line == 1);
    CHECK(doc.statements[1].column == 9);
    const auto& att = std::get<AttackDecl>(doc.statements[2].fact);
    CHECK(att.attacker == id("a"));
    CHECK(att.target == id("b"));
    const auto& v = std::get<VotesDecl>(doc.statements[3].fact);
    CHECK(v.pro == 3);
    CHECK(v.con == 1);
    CHECK(doc.statements[3].line == 3);
}

TEST_CASE("whitespace, comments and CRLF") {
    const SafDocument a = parse_saf("arg(a).\r\n# note\r\n  arg( b ) .  votes ( b , 2 , 0 ) . # trailing\r\n");
    const SafDocument b = parse_saf("arg(a).arg(b).votes(b,2,0).");
    CHECK(a == b);
    CHECK(parse_saf("").statements.empty());
    CHECK(parse_saf("# only a comment").statements.empty());
}

TEST_CASE("the bundled four-cycle file matches the in-code framework") {
    CHECK(load_saf_file(testing::data_path("four_cycle.saf")) == testing::four_cycle());
    CHECK(load_saf_file(testing::data_path("ordinal_independence.saf")) == testing::ordinal_independence_example());
}

TEST_CASE("errors carry positions") {
    SUBCASE("negative count") {
        const NegativeCount e = parse_error<NegativeCount>("votes(a,-1,0).");
        CHECK(e.line() == 1);
        CHECK(e.column() == 9);
    }
    SUBCASE("duplicate votes") {
        const DuplicateVotes e = parse_error<DuplicateVotes>("arg(a).\nvotes(a,1,0).\nvotes(a,2,0).");
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
    SUBCASE("missing period") {
        const SyntaxError e = parse_error<SyntaxError>("arg(a).\narg(b)\narg(c).");
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
    SUBCASE("unknown predicate") {
        const SyntaxError e = parse_error<SyntaxError>("  attack(a,b).");
        CHECK(e.line() == 1);
        CHECK(e.column() == 3);
    }
    SUBCASE("bad identifier character") {
        CHECK_THROWS_AS(parse_saf("arg(a-b)."), SyntaxError);
    }
    SUBCASE("message names the position") {
        const SyntaxError e = parse_error<SyntaxError>("arg(");
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

TEST_CASE("framework_from_document") {
    CHECK_THROWS_AS(framework_from_document(parse_saf("arg(a). att(a,b).")), UnknownEndpoint);
    CHECK_THROWS_AS(framework_from_document(parse_saf("arg(a). arg(a).")), DuplicateArgument);
    CHECK_THROWS_AS(framework_from_document(parse_saf("arg(a). votes(b,1,0).")), UnknownArgument);
    // Forward references are fine.
    const SocialFramework fw = framework_from_document(parse_saf("att(a,b). votes(b,1,1). arg(b). arg(a)."));
    CHECK(fw.attack_count() == 1);
    CHECK(fw.votes(id("b")) == VoteRecord{1, 1});
}

TEST_CASE("load_saf_file reports unreadable files") {
    CHECK_THROWS_AS(load_saf_file(testing::data_path("does_not_exist.saf")), IoError);
}

TEST_CASE("serialize and parse round-trip") {
    const SafDocument doc = to_document(testing::four_cycle());
    CHECK(serialize_saf(doc).substr(0, 8) == "arg(a).\n");
    CHECK(parse_saf(serialize_saf(doc)) == doc);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const SocialFramework fw = testing::random_framework(rng, 1 + trial % 12, 0.25, 1000);
        const SafDocument d = to_document(fw);
        const SafDocument back = parse_saf(serialize_saf(d));
        CHECK(back == d);
        CHECK(framework_from_document(back) == fw);
    }
}

TEST_CASE("large vote counts survive") {
    const SocialFramework fw =
        framework_from_document(parse_saf("arg(a). votes(a,18446744073709551615,0)."));
    CHECK(fw.votes(id("a")).pro == 18446744073709551615ULL);
    CHECK_THROWS_AS(parse_saf("arg(a). votes(a,18446744073709551616,0)."), SyntaxError);
}
