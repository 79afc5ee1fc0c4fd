#include <doctest.h>
TEST_CASE("placeholder_lfunc") { CHECK(true); }
