#include <doctest.h>
TEST_CASE("placeholder_special") { CHECK(true); }
