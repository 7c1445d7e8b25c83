#ifndef CHROMHESS_JSON_IO_HPP
#define CHROMHESS_JSON_IO_HPP

#include <json.hpp>

#include "chromhess/cancellation.hpp"
#include "chromhess/hessenberg.hpp"
#include "chromhess/qpoly.hpp"
#include "chromhess/qsym.hpp"
#include "chromhess/sym.hpp"

namespace chromhess {

using Json = nlohmann::ordered_json;

/// {"num": ["a/b", ...], "den": ["a/b", ...]}: dense coefficient lists by
/// ascending power of q, each entry a canonical fraction string.
Json to_json(const QRational& x);
QRational qrational_from_json(const Json& j);

/// {"basis": "M", "terms": [{"index": [...], "coeff": {...}}, ...]},
/// terms sorted by index.
Json to_json(const QSymElement& x);
/// Same schema with basis "p".
Json to_json(const SymElementP& x);

/// The symmetric-function schema plus {"h": [...], "ring": "L"|"R"}
/// metadata, for golden files.
Json frobenius_json(const SymElementP& x, const HessenbergFunction& h,
                    const char* ring);

Json to_json(const CancellationReport& report);

}  // namespace chromhess

#endif
