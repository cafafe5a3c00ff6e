// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "helix/error.hpp"
#include "helix/rng.hpp"
#include "helix/sigma_map.hpp"
#include "oracles.hpp"

using namespace helix;

TEST_CASE("block table") {
    for (int v = 0; v < 11; ++v) {
        CHECK(kTrinucleotideBlocks[v] == oracle::block(v));
        CHECK(block_symbol(oracle::block(v)) == Z11(v));
    }
    CHECK(!block_symbol("GGG"));
    CHECK(!block_symbol("CC"));
}

TEST_CASE("phi and its inverse") {
    CHECK(phi(Word{0}).str() == "CCC");
    CHECK(phi(Word{4, 1, 9, 0}).str() == "ACCCCACTCCCC");
    CHECK(phi_inv(DnaSeq("TCA")) == Word{10});
    CHECK(phi_inv(DnaSeq("AAACCC")) == Word{7, 0});
    try {
        phi_inv(DnaSeq("CCCGGG"));
        FAIL("expected NotInAlphabet");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInAlphabet);
        CHECK(std::string(e.what()).find('2') != std::string::npos);
    }
    CHECK_THROWS_AS(phi_inv(DnaSeq("CCCC")), Error);
    CHECK(is_block_word(DnaSeq("TCACCC")));
    CHECK(!is_block_word(DnaSeq("TCAGGG")));
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const Word w = random_word(rng, uniform_below(rng, 20));
        CHECK(phi_inv(phi(w)) == w);
    }
}

TEST_CASE("induced metric") {
    const auto& m = InducedMetric::instance();
    for (int a = 0; a < 11; ++a)
        for (int b = 0; b < 11; ++b)
            CHECK(m(a, b) == static_cast<int>(oracle::hamming(oracle::block(a), oracle::block(b))));
    CHECK(induced_distance(Word::parse("0000"), Word::parse("4190")) == 3);
    CHECK(induced_distance(Word::parse("0000000000"), Word::parse("0010060006")) == 5);
    // after f the same pair is much further apart
    const DnaSeq fx = f_flip(phi(Word::parse("0000000000")));
    const DnaSeq fy = f_flip(phi(Word::parse("0010060006")));
    CHECK(hamming_distance(fx, fy) == 11);
    CHECK(oracle::hamming(oracle::flip(oracle::phi(std::vector<int>(10, 0))),
                          oracle::flip(oracle::phi({0, 0, 1, 0, 0, 6, 0, 0, 0, 6}))) == 11);
    CHECK_THROWS_AS(induced_distance(Word(2), Word(3)), Error);
}

TEST_CASE("induced distance is the Hamming distance of the images") {
    Rng rng(9);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + uniform_below(rng, 64);
        const Word x = random_word(rng, n);
        const Word y = random_word(rng, n);
        CHECK(induced_distance(x, y) == hamming_distance(phi(x), phi(y)));
        CHECK(induced_distance(x, x) == 0);
    }
}

TEST_CASE("run-breaking map") {
    CHECK(f_flip(DnaSeq("ACCACCCCCCCAAAAAAA")).str() == "ACCACCCTCCCAAATAAA");
    CHECK(f_flip(DnaSeq("CCCCCC")).str() == "CCCTCC");
    CHECK(f_flip(DnaSeq("ACACAC")).str() == "ACACAC");
    CHECK(f_flip(DnaSeq("CCCCCCCCCCCC")).str() == "CCCTCCCTCCCT");
    CHECK(f_flip(DnaSeq("CCCCC"), 6).str() == "CCCCC");
    // not injective: two distinct images collide
    CHECK(f_flip(phi(Word{7, 4})) == f_flip(phi(Word{7, 8})));
    Rng rng(4);
    for (int t = 0; t < 300; ++t) {
        const DnaSeq x = phi(random_word(rng, 1 + uniform_below(rng, 20)));
        const DnaSeq fx = f_flip(x);
        CHECK(fx.str() == oracle::flip(x.str()));
        CHECK(fx.size() == x.size());
        CHECK(max_homopolymer_run(fx).length <= 4);
        CHECK(f_flip(fx) == fx);
    }
}
