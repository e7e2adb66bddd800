#include "doctest.h"

#include "bitset.hpp"

using namespace scenbdd;

TEST_CASE("scenario string round trip") {
    Scenario s = Scenario::from_string("10110");
    CHECK(s.width() == 5);
    CHECK(s.count() == 3);
    CHECK(s.test(1));
    CHECK_FALSE(s.test(2));
    CHECK(s.to_string() == "10110");
    CHECK_THROWS_AS(Scenario::from_string("10x"), Error);
}

TEST_CASE("subset and complement") {
    Scenario a = Scenario::from_string("1010");
    Scenario b = Scenario::from_string("1011");
    CHECK(a.is_subset_of(b));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(a.is_subset_of(a));
    CHECK(a.complement().to_string() == "0101");
    CHECK(a.complement().complement() == a);
}

TEST_CASE("wide scenarios cross the block boundary") {
    std::string bits(70, '0');
    bits[0] = bits[65] = '1';
    Scenario s = Scenario::from_string(bits);
    CHECK(s.test(1));
    CHECK(s.test(66));
    CHECK(s.count() == 2);
    CHECK(s.to_string() == bits);
    CHECK(s.complement().count() == 68);
}

TEST_CASE("minimize_family drops supersets and duplicates") {
    auto fam = minimize_family({Scenario::from_string("110"), Scenario::from_string("100"),
                                Scenario::from_string("111"), Scenario::from_string("100")});
    REQUIRE(fam.size() == 1);
    CHECK(fam[0].to_string() == "100");
    CHECK(is_antichain(fam));

    auto incomparable = minimize_family({Scenario::from_string("110"),
                                         Scenario::from_string("011")});
    CHECK(incomparable.size() == 2);
    CHECK(is_antichain(incomparable));
    CHECK_FALSE(is_antichain({Scenario::from_string("110"), Scenario::from_string("111")}));
}
