#include <doctest.h>
TEST_CASE("placeholder_testfn") { CHECK(true); }
