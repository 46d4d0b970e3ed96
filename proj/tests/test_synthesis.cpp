#include <catch2/catch_amalgamated.hpp>

#include <vknot/knot_group.hpp>
#include <vknot/synthesis.hpp>

#include "test_util.hpp"

#include <map>
#include <string>
#include <vector>

using namespace vknot;
using testutil::hom_count;
using testutil::rand_int;
using testutil::random_cyclic_wirtinger;
using testutil::random_word;
using testutil::rename_generators;

namespace {

WirtingerPresentation two_gen_chain(const std::string& w1, const std::string& w2) {
    return make_wirtinger({"x1", "x2"},
                          {{0, parse_word(w1), 1}, {1, parse_word(w2), 0}}, true);
}

Presentation one_relator(const std::string& r) {
    Presentation p;
    p.generators = {"x", "y"};
    p.relators = {parse_word(r)};
    return p;
}

}  // namespace

TEST_CASE("block form fixtures") {
    std::vector<std::string> order{"x1", "x2"};
    CHECK(to_block_form(parse_word("x2"), order) ==
          BlockForm{2, {0, 1}});
    CHECK(to_block_form(parse_word("x2 x1"), order) ==
          BlockForm{2, {0, 1, 1, 0}});
    CHECK(to_block_form(parse_word("x1^-3"), order) ==
          BlockForm{2, {-3, 0}});
    CHECK(to_block_form(Word(), order) == BlockForm{2, {}});
    CHECK(to_block_form(parse_word("x1 x2 x1^2 x2^-1"), order) ==
          BlockForm{2, {1, 1, 2, -1}});
    CHECK_THROWS_AS(to_block_form(parse_word("x3"), order), precondition_error);

    BlockForm bf = to_block_form(parse_word("x2 x1"), order);
    CHECK(bf.rounds() == 2);
    CHECK(evaluate_block_form(bf, order) == parse_word("x2 x1"));
}

TEST_CASE("block form evaluation reproduces random words") {
    std::vector<std::string> order{"x1", "x2", "x3"};
    for (int i = 0; i < 150; ++i) {
        Word w = random_word(order, 8);
        BlockForm bf = to_block_form(w, order);
        CHECK(bf.exponents.size() % bf.n == 0);
        CHECK(evaluate_block_form(bf, order) == w);
    }
}

TEST_CASE("synthesis fixtures") {
    KnotCode a = cyclic_wirtinger_to_code(two_gen_chain("x2", "x1"));
    CHECK(a.crossings == std::vector<long long>{2, -1, 1, -2});
    CHECK(a.signs == std::vector<int>{1, 1});

    KnotCode b = cyclic_wirtinger_to_code(two_gen_chain("x2", "x2^-1"));
    CHECK(b.crossings == std::vector<long long>{-1, 1, 2, -2});
    CHECK(b.signs == std::vector<int>{1, -1});

    // all-trivial conjugators collapse to the trivial code
    WirtingerPresentation t = make_wirtinger(
        {"x1", "x2", "x3"},
        {{0, Word(), 1}, {1, Word(), 2}, {2, Word(), 0}}, true);
    CHECK(cyclic_wirtinger_to_code(t).is_trivial());

    // partially trivial conjugators are eliminated before synthesis
    WirtingerPresentation partial = make_wirtinger(
        {"x1", "x2", "x3"},
        {{0, Word(), 1}, {1, parse_word("x2 x3"), 2}, {2, parse_word("x3"), 0}}, true);
    KnotCode c = cyclic_wirtinger_to_code(partial);
    CHECK_FALSE(c.is_trivial());
    CHECK(c.size() == 3);
    CHECK(abelian_invariants(over_presentation(c).base) == AbelianInvariants{1, {}});

    // non-chain input is rejected
    WirtingerPresentation bad;
    bad.base.generators = {"x1", "x2"};
    bad.links = {{0, parse_word("x2"), 1}, {1, parse_word("x1"), 0}};
    bad.cyclic = false;
    CHECK_THROWS_AS(cyclic_wirtinger_to_code(bad), precondition_error);
}

TEST_CASE("synthesis round trips through the over presentation") {
    for (int i = 0; i < 60; ++i) {
        std::size_t n = static_cast<std::size_t>(rand_int(1, 4));
        WirtingerPresentation wp = random_cyclic_wirtinger(n);
        KnotCode k = cyclic_wirtinger_to_code(wp);
        WirtingerPresentation over = over_presentation(k);
        REQUIRE(over.base.generators.size() == n);
        std::map<std::string, std::string> rename;
        for (std::size_t g = 0; g < n; ++g)
            rename["y" + std::to_string(g + 1)] = wp.base.generators[g];
        REQUIRE(over.links.size() == wp.links.size());
        for (std::size_t t = 0; t < n; ++t) {
            CHECK(over.links[t].from == wp.links[t].from);
            CHECK(over.links[t].to == wp.links[t].to);
            CHECK(rename_generators(over.links[t].conjugator, rename) ==
                  wp.links[t].conjugator);
        }
    }
}

TEST_CASE("deficiency-one closure fixtures") {
    WirtingerPresentation chain =
        make_wirtinger({"x1", "x2"}, {{0, parse_word("x2"), 1}}, false);
    WirtingerPresentation closed = close_deficiency_one(chain);
    CHECK(closed.cyclic);
    REQUIRE(closed.links.size() == 2);
    CHECK(closed.links[1] == WirtingerLink{1, parse_word("x2^-1"), 0});

    // single generator, no relators: closes to the trivial chain
    WirtingerPresentation solo = make_wirtinger({"x1"}, {}, false);
    WirtingerPresentation closed_solo = close_deficiency_one(solo);
    REQUIRE(closed_solo.links.size() == 1);
    CHECK(closed_solo.links[0].conjugator.is_identity());
    CHECK(cyclic_wirtinger_to_code(closed_solo).is_trivial());

    CHECK_THROWS_AS(close_deficiency_one(two_gen_chain("x2", "x1")),
                    precondition_error);
    WirtingerPresentation crooked = make_wirtinger(
        {"x1", "x2", "x3"}, {{0, parse_word("x2"), 1}, {0, parse_word("x2"), 1}}, false);
    CHECK_THROWS_AS(close_deficiency_one(crooked), precondition_error);
}

TEST_CASE("closed chains synthesize codes with trivial longitude") {
    for (int i = 0; i < 80; ++i) {
        std::size_t n = static_cast<std::size_t>(rand_int(2, 4));
        std::vector<std::string> gens;
        for (std::size_t g = 1; g <= n; ++g) gens.push_back("x" + std::to_string(g));
        std::vector<WirtingerLink> links;
        for (std::size_t g = 0; g + 1 < n; ++g)
            links.push_back({g, random_word(gens, 4, 2), g + 1});
        WirtingerPresentation closed =
            close_deficiency_one(make_wirtinger(gens, links, false));
        KnotCode k = cyclic_wirtinger_to_code(closed);
        if (k.is_trivial()) continue;  // all conjugators collapsed
        PeripheralPair pp = peripheral_pair(k);
        CHECK(pp.longitude.is_identity());
        CHECK(pp.writhe_p == 0);
    }
}

TEST_CASE("one-relator to chain fixtures") {
    // BS(m, m+1) relator: k = 2, conjugators from V = y2 y1^-1
    for (long long m : {1LL, 2LL, 3LL}) {
        Word r = parse_word("x y^" + std::to_string(m) + " x^-1 y^-" +
                            std::to_string(m + 1));
        WirtingerPresentation wp = onerel_to_cyclic_wirtinger(r, "x", "y");
        CHECK_FALSE(wp.cyclic);
        CHECK(wp.base.generators == std::vector<std::string>{"x", "y1", "y2"});
        REQUIRE(wp.links.size() == 2);
        Word V = parse_word("y2 y1^-1");
        CHECK(wp.links[0] == WirtingerLink{0, V, 1});
        CHECK(wp.links[1] == WirtingerLink{1, V.pow(m), 2});
    }

    // r = x y^-1: the relator eliminates y outright
    WirtingerPresentation z = onerel_to_cyclic_wirtinger(parse_word("x y^-1"), "x", "y");
    CHECK(z.base.generators == std::vector<std::string>{"x", "y1"});
    REQUIRE(z.links.size() == 1);
    CHECK(z.links[0] == WirtingerLink{0, parse_word("y1^-1"), 1});

    // r = x^2 y x^-1 y^-2: two alternation blocks
    WirtingerPresentation q =
        onerel_to_cyclic_wirtinger(parse_word("x^2 y x^-1 y^-2"), "x", "y");
    CHECK(q.base.generators.size() == 3);
    Word Vq = parse_word("y2 y1^-2");
    REQUIRE(q.links.size() == 2);
    CHECK(q.links[0].conjugator == Vq);
    CHECK(q.links[1].conjugator == Vq);  // V^{-l*m_1} = V^{+1} since l=-1, m_1=1

    CHECK_THROWS_AS(onerel_to_cyclic_wirtinger(parse_word("x y^2"), "x", "y"),
                    precondition_error);
    CHECK_THROWS_AS(onerel_to_cyclic_wirtinger(parse_word("y"), "x", "y"),
                    precondition_error);
    CHECK_THROWS_AS(onerel_to_cyclic_wirtinger(Word(), "x", "y"), precondition_error);
    CHECK_THROWS_AS(onerel_to_cyclic_wirtinger(parse_word("x z y"), "x", "y"),
                    precondition_error);
}

TEST_CASE("one-relator conversion preserves the group") {
    // compare homomorphism counts into small symmetric groups before and
    // after the rewrite; they agree for isomorphic groups
    std::vector<std::string> relators{
        "x y x^-1 y^-2",        // BS(1, 2)
        "x y^2 x^-1 y^-3",      // BS(2, 3)
        "x y x y^-1 x^-1 y^-1", // trefoil
        "x^2 y x^-1 y^-2",
        "x y^-1",
    };
    for (const auto& rtext : relators) {
        Presentation orig = one_relator(rtext);
        WirtingerPresentation chain =
            onerel_to_cyclic_wirtinger(orig.relators[0], "x", "y");
        WirtingerPresentation closed = close_deficiency_one(chain);
        CHECK(hom_count(closed.base, 3) == hom_count(orig, 3));
        if (closed.base.generators.size() <= 3)
            CHECK(hom_count(closed.base, 4) == hom_count(orig, 4));
    }
}

TEST_CASE("bs pipeline fixtures") {
    BSVirtualKnot one = bs_virtual_code(1);
    CHECK(one.presentation.base.generators == std::vector<std::string>{"y1", "y2"});
    CHECK(one.presentation.links[0].conjugator == parse_word("y2^-1 y1"));
    CHECK(one.closed.links[1].conjugator == parse_word("y1^-1 y2"));
    CHECK(one.code.crossings ==
          std::vector<long long>{2, 3, -1, -2, 1, 4, -3, -4});
    CHECK(one.code.signs == std::vector<int>{-1, 1, -1, 1});

    CHECK_THROWS_AS(bs_virtual_code(0), precondition_error);
}

TEST_CASE("bs pipeline properties") {
    for (long long m : {1LL, 2LL, 3LL, 4LL, -1LL, -2LL}) {
        BSVirtualKnot bs = bs_virtual_code(m);
        long long absm = m < 0 ? -m : m;
        CHECK(bs.code.size() == static_cast<std::size_t>(4 * absm));
        BridgeDecomposition bd = bridge_decomposition(bs.code);
        CHECK(bd.segment_count == 2);
        PeripheralPair pp = peripheral_pair(bs.code);
        CHECK(pp.longitude.is_identity());
        CHECK(abelian_invariants(over_presentation(bs.code).base) ==
              AbelianInvariants{1, {}});
    }
}

TEST_CASE("bs pipeline groups match the one-relator form") {
    for (long long m : {1LL, 2LL}) {
        BSVirtualKnot bs = bs_virtual_code(m);
        Presentation over = over_presentation(bs.code).base;
        Presentation direct = one_relator("x y^" + std::to_string(m) + " x^-1 y^-" +
                                          std::to_string(m + 1));
        CHECK(hom_count(over, 3) == hom_count(direct, 3));
        CHECK(hom_count(over, 4) == hom_count(direct, 4));
    }
}
