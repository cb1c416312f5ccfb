#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_checks.hpp"

using namespace fhsforge::testing;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

void expect_clean(const Tally& t, unsigned at_least)
{
    CAPTURE(t.first_failure);
    CHECK(t.instances >= at_least);
    CHECK(t.failures == 0);
}

} // namespace

TEST_CASE("correlation symmetry")
{
    expect_clean(check_symmetry(kSeed, 2000), 2000);
}

TEST_CASE("convolution identity")
{
    expect_clean(check_convolution(kSeed + 1, 2000), 2000);
}

TEST_CASE("rotation invariance")
{
    expect_clean(check_rotation_invariance(kSeed + 2, 1000), 1000);
}

TEST_CASE("least rotation and period")
{
    expect_clean(check_least_rotation(kSeed + 3, 5000), 5000);
}

TEST_CASE("class sizes divide n")
{
    expect_clean(check_class_sizes(kSeed + 4, 1000), 1000);
}
