#pragma once

#include <string>

#include "dimers.hpp"
#include "json.hpp"  // vendored nlohmann/json
#include "projection.hpp"
#include "structure.hpp"

namespace ltc {

using Json = nlohmann::json;

Json cell_to_json(Cell c);
Cell cell_from_json(const Json& j);

Json placement_to_json(const Placement& p);
Placement placement_from_json(const Json& j);

// {"placements":[{"kind":"T3","anchor":[0,0]},...]}
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

// {"size":n,"missing":[r,c]|null,"dominoes":[[[r,c],[r,c]],...],"monomers":[[r,c],...]}
Json image_to_json(const ImageTiling& img);
ImageTiling image_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Json crack_report_to_json(const CrackReport& r);
Json crack_verdict_to_json(const CrackVerdict& v);

// {"distinct_cracks":N,"weighted_cracks":W,"cracks":[{"cells":...,"tilings":t},...]}
Json census_to_json(const CensusReport& r);

// {"n":2,"N":[2,4,1]}
Json profile_to_json(const DiagonalProfile& p);

// Counts serialize as JSON numbers while they fit 64 bits, else as decimal
// strings.
Json bigcount_to_json(const BigCount& v);

LiftChoices choices_from_json(const Json& j);
Json choices_to_json(const LiftChoices& c);

}  // namespace ltc
