#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "facering/complex.hpp"
#include "facering/exact_matrix.hpp"
#include "facering/lefschetz.hpp"
#include "facering/polynomial.hpp"
#include "facering/subdivision.hpp"

namespace facering {

using Json = nlohmann::ordered_json;

/// {"name", "vertices", "facets", "meta": {"is_simplicial_sphere", "declared_collapsible"}}.
/// Throws ParseError on malformed input.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c);
SimplicialComplex load_complex(const std::string& path);

/// {"rows": m, "cols": n, "triplets": [[i, j, "num/den"], ...]}.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

/// Either a JSON array of polynomial strings or one string (semicolon-separated).
std::vector<Polynomial> polynomials_from_json(const Json& j);
Json polynomials_to_json(const std::vector<Polynomial>& ps);

Json fh_to_json(const FHProfile& p);
Json homology_to_json(const HomologyReport& h);
Json coloring_to_json(const Coloring& c);
Json collapse_to_json(const CollapseCertificate& c);
Json hesd_to_json(const HesdComplex& h);
Json incidence_to_json(const IncidenceComplex& ic);
Json map_rank_to_json(const MapRank& r);
Json wlp_to_json(const WlpReport& r);
Json slp_to_json(const SlpReport& r);
Json sop_to_json(const SopCandidate& s);
Json unexpected_to_json(const UnexpectedReport& r);

/// Reads a whole file; InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace facering
