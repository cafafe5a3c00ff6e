// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "helix/error.hpp"
#include "helix/folding.hpp"
#include "helix/rng.hpp"
#include "helix/sigma_map.hpp"
#include "oracles.hpp"

using namespace helix;

namespace {

DnaSeq random_dna(Rng& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
        s += "ACGT"[uniform_below(rng, 4)];
    return DnaSeq(s);
}

std::vector<DnaSeq> blocks() {
    std::vector<DnaSeq> out;
    for (auto b : kTrinucleotideBlocks)
        out.emplace_back(b);
    return out;
}

} // namespace

TEST_CASE("energy model") {
    const auto m = EnergyModel::nussinov_jackson();
    CHECK(m(Base::C, Base::G) == -5);
    CHECK(m(Base::T, Base::A) == -4);
    CHECK(m(Base::G, Base::T) == -1);
    CHECK(m(Base::A, Base::C) == 0);
    CHECK(m.is_symmetric());
}

TEST_CASE("block energies") {
    CHECK(min_free_energy(DnaSeq("TCA")) == -4);
    CHECK(min_free_energy(DnaSeq("CCC")) == 0);
    CHECK(min_free_energy(DnaSeq("CCA")) == 0);
    CHECK(min_free_energy(DnaSeq("TCATCA")) == -8);
    CHECK(min_free_energy(DnaSeq("A")) == 0);
    CHECK(min_free_energy(DnaSeq("AT")) == 0); // adjacent pairs never count
    CHECK_THROWS_AS(min_free_energy(DnaSeq("")), Error);
    std::string tca;
    for (int k = 1; k <= 8; ++k) {
        tca += "TCA";
        CHECK(min_free_energy(DnaSeq(tca)) == -4 * k);
    }
}

TEST_CASE("energy agrees with the recursive matching oracle") {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 11));
        CHECK(min_free_energy(x) == oracle::energy(x.str()));
    }
    // every word of up to three alphabet blocks
    const auto b = blocks();
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j)
            for (std::size_t k = 0; k < 11; ++k) {
                const DnaSeq x = b[i] + b[j] + b[k];
                CHECK(min_free_energy(x) == oracle::energy(x.str()));
            }
}

TEST_CASE("energy symmetries") {
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 30));
        CHECK(min_free_energy(reverse(x)) == min_free_energy(x));
        // arbitrary sequences of length 3n stay above -5 floor(3n/2)
        CHECK(min_free_energy(x) >= -5 * static_cast<long long>(x.size() / 2));
    }
}

TEST_CASE("fold returns a structure achieving the energy") {
    Rng rng(12);
    const auto m = EnergyModel::nussinov_jackson();
    for (int t = 0; t < 100; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 25));
        const FoldReport r = fold(x);
        long long sum = 0;
        std::vector<int> used(x.size() + 1, 0);
        for (const auto& [i, j] : r.structure) {
            CHECK(i < j);
            CHECK(j - i >= 2);
            sum += m(x[i - 1], x[j - 1]);
            used[i]++;
            used[j]++;
        }
        for (std::size_t p = 1; p <= x.size(); ++p)
            CHECK(used[p] <= 1);
        // non-crossing
        for (const auto& a : r.structure)
            for (const auto& b : r.structure)
                CHECK(!(a.first < b.first && b.first < a.second && a.second < b.second));
        CHECK(sum == r.min_free_energy);
        CHECK(dot_bracket(x.size(), r.structure).size() == x.size());
    }
    CHECK(dot_bracket(6, {{1, 3}, {4, 6}}) == "(.)(.)");
}

TEST_CASE("stems") {
    CHECK(max_stem_length(DnaSeq("CCC")).length == 0);
    CHECK(max_stem_length(DnaSeq("CCC")).witness.empty());
    const auto s = max_stem_length(DnaSeq("CCATCCCCATCC"));
    CHECK(s.length == 2);
    REQUIRE(s.witness.size() == 2);
    CHECK(s.witness[0] == PairPos{3, 10});
    CHECK(s.witness[1] == PairPos{4, 9});
    const auto fig = max_stem_length(DnaSeq("ATTCAAAATGGATCCGTAATGGAT"));
    CHECK(fig.length >= 5);
    CHECK(max_stem_length(DnaSeq("AT")).length == 1);
}

TEST_CASE("stem DP agrees with brute force") {
    Rng rng(33);
    const auto m = EnergyModel::nussinov_jackson();
    for (int t = 0; t < 400; ++t) {
        const DnaSeq x = random_dna(rng, 1 + uniform_below(rng, 20));
        const StemResult r = max_stem_length(x);
        CHECK(r.length == oracle::stem(x.str()));
        CHECK(max_stem_value(x.view(), m) == r.length);
        REQUIRE(r.witness.size() == r.length);
        for (std::size_t t2 = 0; t2 < r.witness.size(); ++t2) {
            const auto [i, j] = r.witness[t2];
            CHECK(m.pairs(x[i - 1], x[j - 1]));
            if (t2 > 0) {
                CHECK(i == r.witness[t2 - 1].first + 1);
                CHECK(j == r.witness[t2 - 1].second - 1);
            }
        }
    }
}

TEST_CASE("disjoint secondary-complement subsequences") {
    const auto fig = has_disjoint_sc_subsequence(DnaSeq("ATTCAAAATGGATCCGTAATGGAT"), 5);
    REQUIRE(fig);
    CHECK(!has_disjoint_sc_subsequence(DnaSeq("CCCCCC"), 1));
    const auto w = has_disjoint_sc_subsequence(DnaSeq("CCATCCCCATCC"), 2);
    REQUIRE(w);
    CHECK(w->i == 3);
    CHECK(w->j == 9);
    CHECK_THROWS_AS(has_disjoint_sc_subsequence(DnaSeq("CCCC"), 3), Error);
    CHECK_THROWS_AS(has_disjoint_sc_subsequence(DnaSeq("CCCC"), 0), Error);
}

TEST_CASE("a stem of length L implies an sc subsequence of length L") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const DnaSeq x = random_dna(rng, 4 + uniform_below(rng, 16));
        const std::size_t len = max_stem_length(x).length;
        if (len >= 1 && len <= x.size() / 2)
            CHECK(has_disjoint_sc_subsequence(x, len));
    }
}

TEST_CASE("window certification") {
    const auto b = blocks();
    const CertReport one = certify_concatenations(b, 1, 2);
    CHECK(one.complete);
    CHECK(one.max_stem_found == 1);
    CHECK(one.total_count == 11);
    REQUIRE(one.witness_word.size() == 1);
    CHECK(one.witness_word[0] == 10);

    const CertReport ccc = certify_concatenations({DnaSeq("CCC")}, 6, 2);
    CHECK(ccc.max_stem_found == 0);
    CHECK(ccc.within_limit());

    // the certifier against a direct loop over 121 windows
    const CertReport two = certify_concatenations(b, 2, 2);
    std::size_t best = 0;
    std::size_t first = 0;
    for (std::size_t i = 0; i < 11; ++i)
        for (std::size_t j = 0; j < 11; ++j) {
            const std::size_t v = oracle::stem((b[i] + b[j]).str());
            if (v > best) {
                best = v;
                first = i * 11 + j;
            }
        }
    CHECK(two.max_stem_found == best);
    CHECK(two.witness_index == first);
    CHECK(two.enumerated_count == 121);
}

TEST_CASE("certification is resumable and thread independent") {
    const auto b = blocks();
    const CertReport full = certify_concatenations(b, 3, 2);
    CertifyOptions opts;
    opts.budget = 500;
    CertReport part = certify_concatenations(b, 3, 2, opts);
    CHECK(!part.complete);
    CHECK(part.next_index == 500);
    int rounds = 0;
    while (!part.complete && rounds++ < 10) {
        CertifyOptions next;
        next.budget = 500;
        parse_resume_token(part.resume_token(), next);
        part = certify_concatenations(b, 3, 2, next);
    }
    CHECK(part.complete);
    CHECK(part.max_stem_found == full.max_stem_found);
    CHECK(part.witness_index == full.witness_index);

    CertifyOptions threaded;
    threaded.threads = 3;
    const CertReport t3 = certify_concatenations(b, 3, 2, threaded);
    CHECK(t3.max_stem_found == full.max_stem_found);
    CHECK(t3.witness_index == full.witness_index);

    CertifyOptions bad;
    CHECK_THROWS_AS(parse_resume_token("garbage", bad), Error);
}

TEST_CASE("energy bound on alphabet words") {
    CHECK(check_energy_bound(DnaSeq("TCATCATCA")));
    CHECK(check_energy_bound(DnaSeq("CCCCCC")));
    CHECK_THROWS_AS(check_energy_bound(DnaSeq("GGG")), Error);
}
