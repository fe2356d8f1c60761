#include <doctest.h>

#include "core/errors.hpp"
#include "core/partition.hpp"

using namespace ssmthom;

TEST_CASE("partition validation") {
  CHECK_NOTHROW(Partition(std::vector<int>{}));
  CHECK_NOTHROW(Partition({3, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK_THROWS_AS(Partition({-1}), Error);
}

TEST_CASE("weight and multiplicity form are consistent with parts") {
  Partition p({4, 3, 3, 2, 1, 1, 1});
  CHECK(p.weight() == 15);
  CHECK(p.multiplicities() ==
        std::vector<std::pair<int, int>>{{4, 1}, {3, 2}, {2, 1}, {1, 3}});
  CHECK(Partition().weight() == 0);
  CHECK(Partition().multiplicities().empty());
}

TEST_CASE("graded order sorts by weight, then largest parts first") {
  Partition empty, one({1}), three({3}), twoone({2, 1}), ones({1, 1, 1});
  CHECK(empty < one);
  CHECK(one < three);
  CHECK(three < twoone);
  CHECK(twoone < ones);
  CHECK_FALSE(ones < twoone);
}

TEST_CASE("partitions_of enumerates in canonical order") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135};
  for (int n = 0; n <= 14; ++n) CHECK(partitions_of(n).size() == (std::size_t)counts[n]);
}

TEST_CASE("rendering follows the printed style") {
  CHECK(Partition().render() == "0");
  CHECK(Partition({2, 1, 1}).render() == "211");
  CHECK(Partition({10, 1}).render() == "10,1");
  CHECK(Partition({3, 1, 1}).render(true) == "31^2");
  CHECK(Partition({2, 1, 1, 1}).render(true) == "21^3");
  CHECK(Partition({1, 1, 1, 1, 1}).render(true) == "1^5");
}
