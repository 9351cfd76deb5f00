#include <doctest.h>

#include <random>

#include "ramseykit/detect.hpp"
#include "ramseykit/scan.hpp"

#include "oracle.hpp"

using namespace ramsey;

TEST_CASE("serial and parallel subset scans return the same witness") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        int n = 6 + static_cast<int>(rng() % 6);
        Graph g = oracle::random_graph(rng, n, 0.6);
        EdgeColouring c = oracle::random_colouring(rng, g, 2);
        int k = 3 + static_cast<int>(rng() % 2);
        for (int colour = 0; colour < 2; ++colour) {
            auto serial = scan::find_mono_clique_subsets(g, c, colour, k, scan::Mode::serial);
            auto parallel = scan::find_mono_clique_subsets(g, c, colour, k, scan::Mode::parallel);
            REQUIRE(serial.has_value() == parallel.has_value());
            if (serial) {
                CHECK(serial->vertices == parallel->vertices);
                CHECK(validate_witness(g, c, *serial));
            }
        }
    }
}

TEST_CASE("subset scan agrees with the branch-and-bound finder") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 40; ++round) {
        int n = 6 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_graph(rng, n, 0.55);
        EdgeColouring c = oracle::random_colouring(rng, g, 3);
        for (int colour = 0; colour < 3; ++colour) {
            auto scanned = scan::find_mono_clique_subsets(g, c, colour, 3, scan::Mode::parallel);
            auto searched = detect::find_mono_clique(g, c, colour, 3, VertexSet::range(n));
            REQUIRE(scanned.has_value() == searched.has_value());
            if (scanned) CHECK(scanned->vertices == searched->vertices);
        }
    }
}

TEST_CASE("pair scans match the pair search") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 25; ++round) {
        int n = 7 + static_cast<int>(rng() % 3);
        Graph g = oracle::random_graph(rng, n, 0.65);
        EdgeColouring c = oracle::random_colouring(rng, g, 2);
        auto serial = scan::find_mono_pair_any(g, c, 3, scan::Mode::serial);
        auto parallel = scan::find_mono_pair_any(g, c, 3, scan::Mode::parallel);
        REQUIRE(serial.has_value() == parallel.has_value());
        if (serial) {
            CHECK(serial->big == parallel->big);
            CHECK(serial->small == parallel->small);
            CHECK(validate_witness(g, c, *serial));
        }
        bool searched = false;
        for (int colour = 0; colour < 2 && !searched; ++colour)
            searched = detect::find_mono_pair(g, c, colour, 3).has_value();
        CHECK(serial.has_value() == searched);
    }
}

TEST_CASE("exhaustive colouring enumeration: serial and parallel agree") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 15; ++round) {
        int n = 4 + static_cast<int>(rng() % 2);
        Graph g = oracle::random_graph(rng, n, 0.8);
        auto target = scan::AvoidTarget::clique(3);
        auto serial = scan::exhaustive_avoiding_colouring(g, 2, target, std::uint64_t{1} << 40,
                                                          scan::Mode::serial);
        auto parallel = scan::exhaustive_avoiding_colouring(g, 2, target, std::uint64_t{1} << 40,
                                                            scan::Mode::parallel);
        CHECK(serial.status == parallel.status);
        if (serial.status == scan::ExhaustiveResult::Status::found) {
            CHECK(serial.index == parallel.index);
            CHECK(*serial.colouring == *parallel.colouring);
            CHECK(scan::colouring_avoids(g, *serial.colouring, target));
        }
    }
}

TEST_CASE("exhaustive enumeration ground truth on K_5 and K_6") {
    auto target = scan::AvoidTarget::clique(3);
    auto k5 = scan::exhaustive_avoiding_colouring(complete_graph(5), 2, target,
                                                  std::uint64_t{1} << 40, scan::Mode::parallel);
    CHECK(k5.status == scan::ExhaustiveResult::Status::found);

    auto k6 = scan::exhaustive_avoiding_colouring(complete_graph(6), 2, target,
                                                  std::uint64_t{1} << 40, scan::Mode::parallel);
    CHECK(k6.status == scan::ExhaustiveResult::Status::absent);
    CHECK(k6.inspected == (std::uint64_t{1} << 15));

    // a limit below the space size cannot prove absence
    auto capped = scan::exhaustive_avoiding_colouring(complete_graph(6), 2, target, 1000,
                                                      scan::Mode::serial);
    CHECK(capped.status == scan::ExhaustiveResult::Status::capped);
}

TEST_CASE("colouring space size saturates") {
    CHECK(scan::colouring_space_size(2, 15) == (std::uint64_t{1} << 15));
    CHECK(scan::colouring_space_size(3, 3) == 27);
    CHECK(scan::colouring_space_size(2, 200) == (std::uint64_t{1} << 63));
}
