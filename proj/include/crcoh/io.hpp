#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "crcoh/cr_ring.hpp"
#include "crcoh/localization.hpp"
#include "crcoh/quotient.hpp"

namespace crcoh::io {

using Json = nlohmann::json;

/// Version written into emitted datum documents and accepted on input.
inline constexpr int kDatumFormatVersion = 1;

// ---- Datum files -----------------------------------------------------------
//
// {
//   "version": 1,                       (optional on input)
//   "n": 6,
//   "weights": [1, 2, 2, 3, 3, 3],
//   "finite": [{"order": 3, "phases": [0, 1, 2, 0, 0, 0]}],   (optional)
//   "chamber": "positive"
// }
//
// Malformed documents throw Error(InvalidDatum); the result still has to go
// through validate_datum.

QuotientDatum parse_datum(const Json& doc);
QuotientDatum parse_datum_text(std::string_view text);
QuotientDatum read_datum_file(const std::string& path);
Json to_json(const QuotientDatum& d);

// ---- Labels, classes, tables ----------------------------------------------

Json to_json(const SectorLabel& t);
SectorLabel parse_label(const ValidatedDatum& d, const Json& doc);

/// Command-line label syntax: "c=p/q[,a=k1:k2:...]" or "id".
/// Throws std::invalid_argument for syntax errors, Error(InvalidLabel) when
/// the finite part does not fit the datum.
SectorLabel parse_label_flag(const ValidatedDatum& d, std::string_view text);

Json to_json(const BasisElement& b);
BasisElement parse_basis_element(const ValidatedDatum& d, const Json& doc);

/// List of {sector, eta_power, coeff} records.
Json to_json(const CRClass& cls);
CRClass parse_class(const ValidatedDatum& d, const Json& doc);

/// {basis, degrees, pairing, products}; products lists only nonzero cells.
Json to_json(const StructureTable& table);
StructureTable parse_table(const ValidatedDatum& d, const Json& doc);

Json to_json(const SectorInfo& info);
Json to_json(const WallCrossingReport& report);
Json to_json(const AxiomReport& report);

/// Canonical text form of a document: two-space indent, trailing newline.
std::string dump(const Json& doc);

// ---- TSV -------------------------------------------------------------------

/// Coordinates are printed one-based, e.g. "{4,5,6}".
std::string index_set_string(const IndexSet& set);

std::string sectors_tsv(const std::vector<SectorInfo>& sectors);
std::string basis_tsv(const std::vector<BasisElement>& basis, const std::vector<Rational>& degrees);
std::string table_tsv(const StructureTable& table);

}  // namespace crcoh::io
