#include <doctest.h>
TEST_CASE("placeholder_interval") { CHECK(true); }
