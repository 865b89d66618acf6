#pragma once

#include <json.hpp>

#include "witt/artin_hasse.hpp"
#include "witt/big_witt.hpp"
#include "witt/lt_fixtures.hpp"
#include "witt/p_witt.hpp"
#include "witt/series.hpp"

namespace witt {

// Deterministic JSON forms: field order fixed, numeric values carried
// as decimal strings, structural parameters (primes, truncations,
// lengths) as plain JSON numbers.

using Json = nlohmann::ordered_json;

Json ring_to_json(const RingSpec& r);
RingSpec ring_from_json(const Json& j);

Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j);

Json big_witt_to_json(const BigWittVec& w);
BigWittVec big_witt_from_json(const Json& j);

Json p_witt_to_json(const PWittVec& w);
PWittVec p_witt_from_json(const Json& j);

Json artin_hasse_to_json(const ArtinHasseElement& ah);

Json fixture_to_json(const QuotientPresentation& q);
QuotientPresentation fixture_from_json(const Json& j);

Json fixture_report_to_json(const FixtureReport& rep);
Json ah_check_report_to_json(const AhCheckReport& rep);

} // namespace witt
