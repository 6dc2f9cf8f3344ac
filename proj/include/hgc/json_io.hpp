#pragma once

#include <string>

#include "hgc/double.hpp"
#include "json.hpp"

namespace hgc {

/// One shared file format with a "kind" discriminator.  Emission is
/// canonical: object members are written in a fixed order, sparse entries
/// are sorted on their indices, scalars are printed in their canonical text
/// form, and the byte stream ends with a newline — so
/// emit(parse(emit(x))) == emit(x) holds byte-for-byte.  Parsers validate shapes and index ranges and throw
/// Error("SchemaViolation", <json path>: <reason>); numeric values are not
/// judged at load time, so corrupted constants load fine and fall to the
/// verification suites.
using Json = nlohmann::ordered_json;

/// The validated "kind" member of a document; one of hopf_gc,
/// graded_algebra, graded_module, doihopf_datum, yd_module,
/// drinfeld_double.
std::string kind_of(const Json& doc);

Json emit_hopf(const HopfGC& h);
HopfGC parse_hopf(const Json& doc);

Json emit_graded_algebra(const GradedAlgebra& a);
GradedAlgebra parse_graded_algebra(const Json& doc);

Json emit_graded_module(const GradedModule& m);
GradedModule parse_graded_module(const Json& doc);

Json emit_doihopf_datum(const DoiHopfDatumTk& d);
DoiHopfDatumTk parse_doihopf_datum(const Json& doc);

Json emit_yd_module(const YDModule& m);
YDModule parse_yd_module(const Json& doc);

Json emit_double(const DrinfeldDouble& d);
DrinfeldDouble parse_double(const Json& doc);

/// Canonical byte form of a document (sorted keys, two-space indent,
/// trailing newline).
std::string to_bytes(const Json& doc);

/// Parses document text; throws Error("ParseError") on malformed JSON.
Json from_bytes(const std::string& text);

/// File front ends; throw Error("IoError") when the path cannot be
/// read or written.
Json load_file(const std::string& path);
void save_file(const std::string& path, const Json& doc);

}  // namespace hgc
