#include <doctest.h>

#include "property_checks.hpp"

namespace {

void require_clean(const props::Tally& t, std::size_t min_cases) {
    INFO(t.first_failure);
    CHECK(t.cases >= min_cases);
    CHECK(t.failures == 0);
}

}  // namespace

TEST_CASE("invariance under random unimodular conjugation") {
    require_clean(props::conjugation_invariance(240, 4, 101), 240);
}

TEST_CASE("congruence is symmetric and transitive") {
    require_clean(props::congruence_equivalence(200, 202), 200);
}

TEST_CASE("group laws for every catalog group of order at most 1152") {
    require_clean(props::group_laws(4, 1152), 26);
}

TEST_CASE("elementarity: gcd criterion matches the definition") {
    require_clean(props::elementarity_definition(200, 303), 200);
}
