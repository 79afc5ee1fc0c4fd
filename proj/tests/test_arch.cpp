#include <doctest.h>
TEST_CASE("placeholder_arch") { CHECK(true); }
