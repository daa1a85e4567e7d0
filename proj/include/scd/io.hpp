#pragma once

#include <string>

#include "json.hpp"
#include "scd/cyclotomic.hpp"
#include "scd/hopf.hpp"
#include "scd/matrix.hpp"
#include "scd/oracle.hpp"
#include "scd/partition.hpp"
#include "scd/report.hpp"
#include "scd/superchar.hpp"

namespace scd {

using Json = nlohmann::ordered_json;

/// Parses a file or string; throws malformed_input with the parser's message.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// {"q": q} plus "modulus" when r > 1.
void write_field(Json& j, const Field& field);
/// Reads "q" and the optional "modulus".
FieldPtr read_field(const Json& j);

/// {"family","n","q",("modulus"),"plus":[[i,j,label],...]}
Json to_json(const LabelledPartition& lambda);
LabelledPartition partition_from_json(const Json& j);
/// Same, reusing an existing field (which must match the document's q).
LabelledPartition partition_from_json(const Json& j, const FieldPtr& field);

/// {"size","q",("modulus"),"entries":[row-major codes]}
Json to_json(const UTMatrix& m);
UTMatrix matrix_from_json(const Json& j);

/// {"scale":"1/3","coeffs":[...]} with value = scale * sum coeffs[k] zeta^k.
Json to_json(const CycValue& v);
CycValue cyc_from_json(const Json& j, unsigned p);
/// "scale|c0 c1 ..." for CSV cells.
std::string to_csv_cell(const CycValue& v);

/// {"basis","family","q",("modulus"),"terms":[{"coef","label"}]}
Json to_json(const SCElement& x);
SCElement element_from_json(const Json& j);
/// Terms carry "left" and "right" labels.
Json to_json(const TensorElement& t);
TensorElement tensor_from_json(const Json& j);

Json to_json(const CharTable& table);
CharTable table_from_json(const Json& j);
std::string to_csv(const CharTable& table);

/// Class census: labels, sizes and representative matrices.
Json census_to_json(const GroupTable& table);

/// Timings are left out so reports are byte-identical across runs.
Json to_json(const Report& report);
Report report_from_json(const Json& j);

Json error_json(ErrorKind kind, const std::string& message);

}  // namespace scd
