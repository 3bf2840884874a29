#include <doctest.h>

#include "pairorbits/errors.hpp"
#include "pairorbits/partition.hpp"

using namespace pairorbits;

TEST_CASE("construction and queries") {
    const Partition p = parse_partition("5,4,4,2,1");
    CHECK(p.weight() == 16);
    CHECK(p.largest() == 5);
    CHECK(p.multiplicity(4) == 2);
    CHECK(p.multiplicity(3) == 0);
    CHECK(p.has_part(2));
    CHECK(p.distinct_parts() == std::vector<long>{5, 4, 2, 1});
    CHECK(p.parts() == std::vector<long>{5, 4, 4, 2, 1});
    CHECK(to_string(p) == "5,4^2,2,1");
    CHECK(to_display_string(p) == "(5, 4, 4, 2, 1)");
    CHECK(Partition::from_parts({1, 4, 2, 4, 5}) == p);
    CHECK_THROWS_AS(Partition({{2, 1}, {3, 1}}), InputError);
    CHECK_THROWS_AS(Partition({{2, 0}}), InputError);
}

TEST_CASE("parsing") {
    CHECK(parse_partition("5,4^2,2,1") == parse_partition("5,4,4,2,1"));
    CHECK(parse_partition(" (3, 1) ") == parse_partition("3,1"));
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("1,3") == parse_partition("3,1"));
    CHECK_THROWS_AS(parse_partition("3,x"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,0"), ParseError);
    CHECK_THROWS_AS(parse_partition("3,-1"), ParseError);
    CHECK_THROWS_AS(parse_partition("2^"), ParseError);
    CHECK_THROWS_AS(parse_partition("2,,1"), ParseError);
}

TEST_CASE("cap_multiplicities") {
    CHECK(cap_multiplicities(parse_partition("2,1,1,1"), 2) == parse_partition("2,1,1"));
    const Partition p = parse_partition("5,4^3,1^2");
    CHECK(cap_multiplicities(p, 1000) == p);
    CHECK(cap_multiplicities(parse_partition("3^5"), 2) == parse_partition("3,3"));
}

TEST_CASE("remove_parts") {
    CHECK(remove_parts(parse_partition("5,4,4,2,1"), {4, 1}) == parse_partition("5,4,2"));
    CHECK(remove_parts(parse_partition("2"), {2}).empty());
    CHECK_THROWS_AS(remove_parts(parse_partition("2"), {3}), InputError);
}

TEST_CASE("partitions_of") {
    CHECK(partitions_of(2) == std::vector<Partition>{parse_partition("2"), parse_partition("1,1")});
    CHECK(partitions_of(4) == std::vector<Partition>{parse_partition("4"), parse_partition("3,1"), parse_partition("2,2"),
                                                     parse_partition("2,1,1"), parse_partition("1,1,1,1")});
    REQUIRE(partitions_of(0).size() == 1);
    CHECK(partitions_of(0).front().empty());

    const std::size_t counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
    for (long n = 0; n < 16; ++n) {
        const auto all = partitions_of(n);
        CHECK(all.size() == counts[n]);
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].weight() == n);
            if (i > 0) CHECK(all[i - 1].parts() > all[i].parts());
        }
    }
}
