#include <doctest.h>
TEST_CASE("placeholder_primesum") { CHECK(true); }
