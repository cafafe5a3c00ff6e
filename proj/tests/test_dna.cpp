// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <set>

#include "helix/dna.hpp"
#include "helix/error.hpp"
#include "helix/rng.hpp"
#include "oracles.hpp"

using namespace helix;

namespace {

DnaSeq random_dna(Rng& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
        s += "ACGT"[uniform_below(rng, 4)];
    return DnaSeq(s);
}

} // namespace

TEST_CASE("parsing") {
    CHECK(DnaSeq("acgt").str() == "ACGT");
    CHECK(DnaSeq("").empty());
    try {
        DnaSeq("ACNT");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find('3') != std::string::npos);
    }
}

TEST_CASE("complement, reverse, reverse complement") {
    CHECK(complement(DnaSeq("ACGT")).str() == "TGCA");
    CHECK(reverse_complement(DnaSeq("AAC")).str() == "GTT");
    CHECK(reverse(DnaSeq("AAC")).str() == "CAA");
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 40));
        CHECK(reverse_complement(reverse_complement(x)) == x);
        CHECK(complement(complement(x)) == x);
        CHECK(reverse_complement(x).str() == oracle::reversed(oracle::complemented(x.str())));
    }
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(DnaSeq("ACC"), DnaSeq("ACC")) == 0);
    CHECK(hamming_distance(DnaSeq("CCC"), DnaSeq("CCA")) == 1);
    CHECK(hamming_distance(DnaSeq("CCC"), DnaSeq("AAC")) == 2);
    CHECK_THROWS_AS(hamming_distance(DnaSeq("CC"), DnaSeq("C")), Error);
}

TEST_CASE("gc content") {
    CHECK(gc_content(DnaSeq("GGCC")).value() == 1.0);
    CHECK(gc_content(DnaSeq("ATAT")).value() == 0.0);
    const auto g = gc_content(DnaSeq("CCA"));
    CHECK(g.gc == 2);
    CHECK(g.length == 3);
    CHECK_THROWS_AS(gc_content(DnaSeq("")), Error);
}

TEST_CASE("homopolymer runs") {
    CHECK(max_homopolymer_run(DnaSeq("AAAA")).length == 4);
    CHECK(max_homopolymer_run(DnaSeq("ACGT")).length == 1);
    const Run r = max_homopolymer_run(DnaSeq("ACGCCCCCGTG"));
    CHECK(r.length == 5);
    CHECK(r.start == 3);
    CHECK(r.base == Base::C);
    // earliest of equal runs
    CHECK(max_homopolymer_run(DnaSeq("AACC")).start == 0);
    CHECK_THROWS_AS(max_homopolymer_run(DnaSeq("")), Error);
    Rng rng(11);
    for (int t = 0; t < 300; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 30));
        CHECK(max_homopolymer_run(x).length == oracle::longest_run(x.str()));
    }
}

TEST_CASE("secondary-complement pairs") {
    CHECK(is_sc_pair(Base::C, Base::G));
    CHECK(is_sc_pair(Base::T, Base::G));
    CHECK(!is_sc_pair(Base::A, Base::A));
    CHECK(!is_sc_pair(Base::C, Base::T));
    // exactly the pairs with negative energy
    for (Base a : {Base::A, Base::C, Base::G, Base::T})
        for (Base b : {Base::A, Base::C, Base::G, Base::T})
            CHECK(is_sc_pair(a, b) == (oracle::mu(to_char(a), to_char(b)) < 0));
}

TEST_CASE("secondary-complement sets") {
    const auto cc = secondary_complements(DnaSeq("CC"));
    CHECK(cc.size() == 1);
    CHECK(cc.at(0).str() == "GG");
    const auto tg = secondary_complements(DnaSeq("TG"));
    CHECK(tg.size() == 4);
    std::set<std::string> members;
    tg.for_each([&](const DnaSeq& y) { members.insert(y.str()); });
    CHECK(members == std::set<std::string>{"CA", "CG", "TA", "TG"});
    CHECK(secondary_complements(DnaSeq("ATTCA")).contains(DnaSeq("TGGAT")));
    CHECK(!secondary_complements(DnaSeq("ATTCA")).contains(DnaSeq("TGGAA")));
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 10));
        const auto sc = secondary_complements(x);
        CHECK(sc.at(0) == reverse_complement(x));
        // each member pairs position-wise with the reversed source
        sc.for_each([&](const DnaSeq& y) {
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(is_sc_pair(x[i], y[x.size() - 1 - i]));
        });
    }
}
