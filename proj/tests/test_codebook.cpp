// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <cmath>

#include "helix/codebook.hpp"
#include "helix/error.hpp"
#include "helix/sigma_map.hpp"
#include "oracles.hpp"

using namespace helix;

namespace {

CodebookSpec spec_for(const char* family, bool f, bool augment = false) {
    CodebookSpec s;
    s.family = parse_family(family);
    s.apply_f = f;
    s.augment_complement = augment;
    return s;
}

} // namespace

TEST_CASE("rates") {
    CHECK(code_rate(10, false, 36) == doctest::Approx(0.480477).epsilon(1e-6));
    CHECK(code_rate(16100, false, 48315) == doctest::Approx(0.576393).epsilon(1e-6));
    CHECK(code_rate(8, false, 30) == doctest::Approx(0.461258).epsilon(1e-6));
    CHECK(code_rate(10, true, 36) == doctest::Approx(0.494366).epsilon(1e-6));
    CHECK(kLog4Of11 == doctest::Approx(std::log(11.0) / std::log(4.0)).epsilon(1e-15));
    CHECK(rate_factor() == doctest::Approx(0.576572).epsilon(1e-6));
    CHECK_THROWS_AS(code_rate(1, false, 0), Error);
}

TEST_CASE("rate table") {
    const auto rows = rate_table();
    auto find = [&](const std::string& name) -> const RateEntry* {
        for (const auto& r : rows)
            if (r.name == name)
                return &r;
        return nullptr;
    };
    REQUIRE(find("f(phi(H5)) over Z11"));
    CHECK(find("f(phi(H5)) over Z11")->rate == doctest::Approx(0.57639).epsilon(1e-4));
    CHECK(find("f(phi(H5)) over Z11")->n_dna == 48315);
    CHECK(find("C u C^c, C=f(phi(H2)) over Z11")->rate == doctest::Approx(0.494365).epsilon(1e-5));
    CHECK(find("f(phi(C2)) over Z11")->rate == doctest::Approx(0.28828).epsilon(1e-4));
    CHECK(find("f(phi(RS(10,8,3))) over Z11")->provenance == "computed");
    std::size_t external = 0;
    for (const auto& r : rows)
        external += r.provenance == "external";
    CHECK(external == 11);
    // factor row: DNA rate over symbol rate
    for (const auto& r : rows)
        if (r.provenance == "computed" && r.size_exponent > 0 && r.name.find("C^c") == std::string::npos) {
            const double symbol_rate = static_cast<double>(r.size_exponent) / static_cast<double>(r.n_dna / 3);
            CHECK(r.rate / symbol_rate == doctest::Approx(rate_factor()).epsilon(1e-9));
        }
}

TEST_CASE("building explicit books") {
    const DnaCodebook book = build(spec_for("family1:k=2", true));
    CHECK(book.dna_length == 12);
    CHECK(book.size_exponent == 2);
    CHECK(book.rate == doctest::Approx(0.28829).epsilon(1e-4));
    REQUIRE(book.explicit_book());
    CHECK(book.sequences->size() == 121);
    CHECK(book.duplicate_sequences == 0);
    for (std::size_t i = 0; i < 121; ++i)
        CHECK(book.sequences->at(i).str() == oracle::flip(phi(book.words->at(i)).str()));

    const DnaCodebook aug = build(spec_for("family1:k=2", false, true));
    REQUIRE(aug.explicit_book());
    CHECK(aug.sequences->size() == 242);
    CHECK(aug.sequences->at(121) == complement(aug.sequences->at(0)));
    CHECK(aug.rate == doctest::Approx((2 * kLog4Of11 + 0.5) / 12).epsilon(1e-12));
}

TEST_CASE("implicit books") {
    const DnaCodebook h2 = build(spec_for("hamming:r=2", true));
    CHECK(!h2.explicit_book());
    CHECK(h2.dna_length == 36);
    CHECK(h2.size_exponent == 10);
    CHECK(h2.rate == doctest::Approx(0.48047).epsilon(1e-5));
    const DnaCodebook h2a = build(spec_for("hamming:r=2", true, true));
    CHECK(h2a.rate == doctest::Approx(0.494365).epsilon(1e-5));
}

TEST_CASE("augmentation guard") {
    // the repetition-like code RS delta=10 has distance 10 = n, so the guard holds
    CHECK_NOTHROW(build(spec_for("rs:delta=10", false, true)));
    CodebookSpec tight = spec_for("rs:delta=10", false, true);
    CHECK(build(tight).sequences->size() == 22);
}

TEST_CASE("spec validation") {
    CodebookSpec s = spec_for("family1:k=2", false);
    s.thresholds.max_run = 0;
    CHECK_THROWS_AS(build(s), Error);
    s = spec_for("family1:k=2", false);
    s.flip_threshold = 1;
    CHECK_THROWS_AS(build(s), Error);
}

TEST_CASE("flip interval") {
    const auto iv = flip_distance_interval(4, 3);
    CHECK(iv.lower == 3);
    CHECK(iv.upper == 6);
    CHECK(flip_distance_interval(12, 3).upper == 12);
    CHECK(flip_distance_interval(10, 4).lower == 3);
}

TEST_CASE("distance certification over books") {
    DnaCodebook book = build(spec_for("family1:k=2", true));
    certify_distances(book, {Metric::Induced, Metric::DnaHamming, Metric::DnaHammingAfterF, Metric::Reverse,
                             Metric::ReverseComplement});
    CHECK(book.distances.at(Metric::Induced).value() == 3);
    CHECK(book.distances.at(Metric::DnaHamming).value() == 2);
    CHECK(book.distances.at(Metric::DnaHammingAfterF).value() == 2);
    REQUIRE(book.distances.at(Metric::DnaHamming).witness_indices);

    DnaCodebook aug = build(spec_for("family1:k=2", false, true));
    certify_distances(aug, {Metric::DnaHamming});
    // complements sit at distance >= n from every original
    std::size_t cross = 99;
    for (std::size_t i = 0; i < 121; ++i)
        for (std::size_t j = 121; j < 242; ++j)
            cross = std::min(cross, oracle::hamming(aug.sequences->at(i).str(), aug.sequences->at(j).str()));
    CHECK(cross >= 4);
    CHECK(aug.distances.at(Metric::DnaHamming).value() == std::min<std::size_t>(3, cross));

    DnaCodebook rs = build(spec_for("rs:delta=3", false));
    certify_distances(rs, {Metric::ReverseComplement, Metric::DnaHamming});
    CHECK(!rs.explicit_book());
    CHECK(rs.distances.at(Metric::ReverseComplement).lower == 10);
    CHECK(rs.distances.at(Metric::DnaHamming).lower == 3);
}

TEST_CASE("constraint verification") {
    const DnaCodebook book = build(spec_for("family1:k=2", true));
    const ConstraintReport r = verify_constraints(book);
    CHECK(r.exhaustive);
    CHECK(r.find("homopolymer_run")->status == CheckStatus::Pass);
    CHECK(r.find("homopolymer_run")->worst_value <= 4);
    CHECK(r.find("stem_length")->status == CheckStatus::Pass);
    CHECK(r.find("stem_length")->worst_value == 2);
    CHECK(!r.any_hard_failure());

    // without f the all-zero codeword is one long C run
    const DnaCodebook plain = build(spec_for("family1:k=2", false));
    const ConstraintReport p = verify_constraints(plain);
    const ConstraintResult* run = p.find("homopolymer_run");
    CHECK(run->status == CheckStatus::Fail);
    CHECK(run->worst_value == 12);
    CHECK(!run->claimed);
    REQUIRE(run->witness);
    CHECK(run->witness->index == 0);
    CHECK(run->witness->positions.front() == PairPos{1, 12});
    CHECK(p.find("energy_floor")->status == CheckStatus::Pass);
    CHECK(p.find("energy_floor")->sample_count == 121);
    CHECK(p.gc.max == 1.0);

    CodebookSpec sampled = spec_for("rs:delta=3", true);
    sampled.sample_count = 200;
    const ConstraintReport s = verify_constraints(build(sampled));
    CHECK(!s.exhaustive);
    CHECK(s.find("homopolymer_run")->status == CheckStatus::Sampled);
    CHECK(s.find("homopolymer_run")->sample_count == 200);
    // same seed, same sample
    const ConstraintReport s2 = verify_constraints(build(sampled));
    CHECK(s2.find("stem_length")->worst_value == s.find("stem_length")->worst_value);
    CHECK(s2.gc.mean == s.gc.mean);
}

TEST_CASE("verifying arbitrary sequences") {
    const ConstraintReport r = verify_sequences({DnaSeq("CCCCCCC")}, Thresholds{});
    const ConstraintResult* run = r.find("homopolymer_run");
    CHECK(run->status == CheckStatus::Fail);
    REQUIRE(run->witness);
    CHECK(run->witness->positions.front().first == 1);
    const ConstraintReport fig = verify_sequences({DnaSeq("ATTCAAAATGGATCCGTAATGGAT")}, Thresholds{});
    CHECK(fig.find("stem_length")->worst_value >= 5);
    CHECK(fig.find("energy_floor")->status == CheckStatus::Skipped);
    CHECK_THROWS_AS(verify_sequences({}, Thresholds{}), Error);
}
