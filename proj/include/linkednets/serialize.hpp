#pragma once

// JSON forms of nets, reports, certificates, decompositions and generator
// specs. Rationals are written as integers when they are integral and fit in
// 64 bits, and as "p/q" strings otherwise. Parsers reject unknown fields.

#include <string>
#include <vector>

#include <json.hpp>

#include "linkednets/analysis.hpp"
#include "linkednets/gen.hpp"
#include "linkednets/net.hpp"

namespace linkednets {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const Json& j, int n);
Json type_set_to_json(TypeSet s);
TypeSet type_set_from_json(const Json& j, int n);
Json matrix_to_json(const RMatrix& m);
/// `cols` is used when the matrix has no rows.
RMatrix matrix_from_json(const Json& j, std::size_t cols);
Json vector_to_json(const RVector& x);
RVector vector_from_json(const Json& j);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);
Json frame_to_json(const MultidegreeFrame& f);
MultidegreeFrame frame_from_json(const Json& j);

/// Net file fields: n, window, dims, generators, arrows, and optionally
/// labels, frame and boundary_zero_arrows.
Json net_to_json(const NetPresentation& p);
NetPresentation net_from_json(const Json& j);
std::string dump_net(const NetPresentation& p, bool pretty = false);
/// Throws InvalidInput on malformed text.
NetPresentation parse_net(const std::string& text);

Json report_to_json(const CheckReport& r);
Json certificate_to_json(const ViolationCertificate& c);
ViolationCertificate certificate_from_json(const Json& j, int n);
Json profile_to_json(const KernelProfile& k);
Json summand_to_json(const SimpleSummand& s);

/// The net file plus a `summands` array.
Json decomposition_to_json(const NetPresentation& p, const DecompositionResult& d);

Json gen_spec_to_json(const GenSpec& s);
GenSpec gen_spec_from_json(const Json& j);

/// Parses text into JSON, converting parse errors to InvalidInput.
Json parse_json(const std::string& text);
std::string dump_json(const Json& j, bool pretty = false);

}  // namespace linkednets
