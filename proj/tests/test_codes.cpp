// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <set>

#include "helix/codes.hpp"
#include "helix/error.hpp"
#include "helix/rng.hpp"
#include "helix/sigma_map.hpp"
#include "oracles.hpp"

using namespace helix;

namespace {

std::vector<std::vector<int>> rows_of(const Matrix& g) {
    std::vector<std::vector<int>> out(g.rows(), std::vector<int>(g.cols()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            out[r][c] = g(r, c).value();
    return out;
}

std::size_t oracle_min_weight(const Matrix& g) {
    std::size_t best = g.cols() + 1;
    for (const auto& cw : oracle::span(rows_of(g))) {
        std::size_t w = 0;
        for (int v : cw)
            w += v != 0;
        if (w > 0)
            best = std::min(best, w);
    }
    return best;
}

} // namespace

TEST_CASE("family spec strings") {
    CHECK(to_string(parse_family("family1:k=3")) == "family1:k=3");
    CHECK(to_string(parse_family("hamming:r=2")) == "hamming:r=2");
    CHECK(to_string(parse_family("rs:delta=3")) == "rs:delta=3,alpha=2,a=0");
    CHECK(to_string(parse_family("rs:delta=4,alpha=6,a=1")) == "rs:delta=4,alpha=6,a=1");
    CHECK_THROWS_AS(parse_family("bch:t=2"), Error);
    CHECK_THROWS_AS(parse_family("family1:k="), Error);
    CHECK_THROWS_AS(parse_family("family1"), Error);
    CHECK_THROWS_AS(parse_family("rs:delta=3,beta=1"), Error);
}

TEST_CASE("family 1 generators") {
    const LinearCode c2 = family1(2);
    REQUIRE(c2.generator());
    CHECK(c2.generator()->row(0) == Word{1, 1, 1, 1});
    CHECK(c2.generator()->row(1) == Word{1, 5, 9, 10});
    const LinearCode c3 = family1(3);
    CHECK(c3.length() == 16);
    CHECK(c3.dimension() == 3);
    CHECK(c3.generator()->row(0) == Word{1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4});
    CHECK(family1(5).length() == 256);
    CHECK_THROWS_AS(family1(1), Error);
    CHECK_THROWS_AS(family1(6), Error);
    for (int k = 2; k <= 4; ++k) {
        const LinearCode c = family1(k);
        CHECK(c.generator()->rank() == static_cast<std::size_t>(k));
        CHECK((*c.generator() * c.parity_check()->transpose()).is_zero());
    }
}

TEST_CASE("hamming codes") {
    const LinearCode h2 = hamming(2);
    CHECK(h2.length() == 12);
    CHECK(h2.dimension() == 10);
    CHECK(is_codeword(h2, Word::parse("000000000191")));
    CHECK(is_codeword(h2, Word(12)));
    Word unit(12);
    unit[0] = 1;
    CHECK(!is_codeword(h2, unit));
    CHECK_THROWS_AS(is_codeword(h2, Word(3)), Error);
    // no two columns of H are dependent
    const Matrix& h = *h2.parity_check();
    for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = a + 1; b < 12; ++b) {
            Matrix pair(2, 2);
            for (std::size_t r = 0; r < 2; ++r) {
                pair(r, 0) = h(r, a);
                pair(r, 1) = h(r, b);
            }
            CHECK(pair.rank() == 2);
        }
    const LinearCode h3 = hamming(3);
    CHECK(h3.length() == 133);
    CHECK(h3.dimension() == 130);
    const LinearCode h5 = hamming(5);
    CHECK(h5.length() == 16105);
    CHECK(h5.dimension() == 16100);
    CHECK(!h5.generator());
    // systematic encoding through H lands in the code
    Rng rng(2);
    for (int t = 0; t < 3; ++t) {
        const Word cw = h5.encode(random_word(rng, h5.dimension()));
        CHECK(is_codeword(h5, cw));
    }
    CHECK_THROWS_AS(hamming(1), Error);
}

TEST_CASE("reed-solomon codes") {
    CHECK(reed_solomon_generator(3) == Poly({8, 5, 1}));
    const LinearCode rs3 = reed_solomon(3);
    CHECK(rs3.length() == 10);
    CHECK(rs3.dimension() == 8);
    for (int delta : {8, 9, 10}) {
        const LinearCode c = reed_solomon(delta);
        CHECK(c.dimension() == static_cast<std::size_t>(11 - delta));
        CHECK(oracle_min_weight(*c.generator()) == static_cast<std::size_t>(delta));
        const DistanceCert cert = min_distance(c, Metric::HammingZ11);
        CHECK(cert.exact());
        CHECK(cert.value() == static_cast<std::size_t>(delta));
    }
    // generator roots are consecutive powers of alpha
    const Poly g = reed_solomon_generator(5, 2, 1);
    for (int i = 1; i <= 4; ++i)
        CHECK(poly_eval(g, Z11(2).pow(1 + i)) == Z11(0));
    CHECK_THROWS_AS(reed_solomon(3, 3), Error); // 3 is not primitive mod 11
    CHECK_THROWS_AS(reed_solomon(1), Error);
    CHECK_THROWS_AS(reed_solomon(11), Error);
    // G and H agree
    const LinearCode rs4 = reed_solomon(4);
    CHECK((*rs4.generator() * rs4.parity_check()->transpose()).is_zero());
}

TEST_CASE("enumeration") {
    const LinearCode c2 = family1(2);
    const auto words = enumerate(c2);
    CHECK(words.size() == 121);
    CHECK(words.front() == Word(4));
    CHECK(words[1] == encode(Word{0, 1}, *c2.generator()));
    CHECK(std::set<Word>(words.begin(), words.end()).size() == 121);
    CHECK(message_at(2, 12) == Word{1, 1});
    CHECK(*codeword_count(c2, 1000) == 121);
    CHECK(!codeword_count(c2, 100));
    CHECK_THROWS_AS(enumerate(hamming(5)), Error);
    try {
        enumerate(hamming(5));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BudgetExceeded);
    }
    // against the independent span
    const auto ref = oracle::span(rows_of(*c2.generator()));
    for (std::size_t i = 0; i < ref.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(words[i][j].value() == ref[i][j]);
}

TEST_CASE("griesmer") {
    CHECK(griesmer_check(4, 2, 3));
    CHECK(!griesmer_check(16, 3, 12));
    CHECK(griesmer_check(1, 1, 1));
}

TEST_CASE("low weight search") {
    const auto rs3 = low_weight_search(reed_solomon(3));
    CHECK(rs3.found_weight == 3);
    CHECK(rs3.lower_bound == 3);
    REQUIRE(!rs3.codewords.empty());
    for (const auto& w : rs3.codewords) {
        CHECK(w.weight() == 3);
        CHECK(is_codeword(reed_solomon(3), w));
    }
    const auto h2 = low_weight_search(hamming(2));
    CHECK(h2.found_weight == 3);
}

TEST_CASE("distance certificates on family 1") {
    const LinearCode c2 = family1(2);
    const DistanceCert ind = min_distance(c2, Metric::Induced);
    CHECK(ind.exact());
    CHECK(ind.value() == 3);
    REQUIRE(ind.witness);
    CHECK(induced_distance(ind.witness->first, ind.witness->second) == 3);

    // independent scan over the images
    std::vector<std::string> images, flipped;
    for (const auto& cw : oracle::span(rows_of(*c2.generator()))) {
        images.push_back(oracle::phi(cw));
        flipped.push_back(oracle::flip(images.back()));
    }
    std::size_t direct = 99, after_f = 99, rev = 99, rc = 99;
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i; j < images.size(); ++j) {
            if (i != j) {
                direct = std::min(direct, oracle::hamming(images[i], images[j]));
                after_f = std::min(after_f, oracle::hamming(flipped[i], flipped[j]));
            }
            const std::size_t r = oracle::hamming(images[i], oracle::reversed(images[j]));
            if (r > 0)
                rev = std::min(rev, r);
            const std::size_t q = oracle::hamming(images[i], oracle::reversed(oracle::complemented(images[j])));
            if (q > 0)
                rc = std::min(rc, q);
        }
    CHECK(direct == 3);
    CHECK(after_f == 2);
    CHECK(min_distance(c2, Metric::DnaHammingAfterF).value() == after_f);
    CHECK(min_distance(c2, Metric::Reverse).value() == rev);
    CHECK(min_distance(c2, Metric::ReverseComplement).value() == rc);
    CHECK(min_distance(c2, Metric::DnaHamming).value() == direct);
    CHECK(rev == 1);
}

TEST_CASE("bounded certificates when enumeration is out of reach") {
    DistanceOptions opts;
    opts.enumeration_cap = 10;
    const DistanceCert h = min_distance(hamming(2), Metric::Induced, opts);
    CHECK(h.lower == 3);
    CHECK(h.upper == 3);
    CHECK(h.exact());
    const DistanceCert hz = min_distance(hamming(2), Metric::HammingZ11, opts);
    CHECK(hz.exact());
    CHECK(hz.value() == 3);
    const DistanceCert f = min_distance(reed_solomon(3), Metric::DnaHammingAfterF);
    CHECK(!f.exact());
    CHECK(f.lower == 0);
    REQUIRE(f.witness);
    CHECK(is_codeword(reed_solomon(3), f.witness->first));
    CHECK(is_codeword(reed_solomon(3), f.witness->second));
    CHECK(oracle::hamming(f_flip(phi(f.witness->first)).str(), f_flip(phi(f.witness->second)).str()) == f.upper);
    CHECK(std::string(to_string(Metric::DnaHammingAfterF)) == "dna_hamming_after_f");
}
