#include <doctest.h>
TEST_CASE("placeholder_certify") { CHECK(true); }
