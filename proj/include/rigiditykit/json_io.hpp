#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rigiditykit/bounds.hpp"
#include "rigiditykit/certificate.hpp"
#include "rigiditykit/shadow.hpp"
#include "rigiditykit/trinomial.hpp"

namespace rigiditykit {

/// Field order in emitted documents follows insertion order.
using Json = nlohmann::ordered_json;

/// Rationals are always written as "p/q" strings, integers included ("1/1").
Json rat_to_json(const Rat& r);
/// Accepts a "p" or "p/q" string or a JSON integer. Throws SchemaError otherwise.
Rat rat_from_json(const Json& j);

Json to_json(const Certificate& cert);
Json to_json(const MsReport& report);
Json to_json(const GenMsReport& report);
Json to_json(const ShadowReport& report);

/// Pretty-printed certificate, two-space indent, trailing newline.
std::string emit_certificate(const Certificate& cert);

/// [{"coefficient": "p/q", "factors": [{"base": "<expr>", "exponent": k}]}].
/// All bases must use the same single variable (or none), reported through
/// `variable` when non-null.
std::vector<TermDecomp> terms_from_json(const Json& j, std::string* variable = nullptr);
Json terms_to_json(const std::vector<TermDecomp>& terms, std::string_view variable = "t");

/// {"A": [[b, c], ...], "L": [[l_01, ...], ...], "n": [...], "names": [[...], ...]}.
/// "n" and "names" are optional; "n" defaults to the row lengths of "L".
TrinomialData trinomial_from_json(const Json& j);

/// Throws IoError when unreadable and SchemaError when not valid JSON.
Json read_json_file(const std::string& path);
/// Throws IoError.
std::string read_text_file(const std::string& path);

}  // namespace rigiditykit
