#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "utt/basis.hpp"
#include "utt/padic.hpp"
#include "utt/qcalc.hpp"
#include "utt/utmat.hpp"

// Canonical serialization. JSON output has sorted keys, residues as decimal
// strings and no insignificant whitespace, so equal values give equal bytes.
namespace utt::emit {

enum class Format { Json, Csv, Pretty };

/// "json", "csv" or "pretty"; ParseError otherwise.
Format parse_format(std::string_view name);

nlohmann::json to_json(const PadicInt& x);
nlohmann::json to_json(const PadicScaled& x);
nlohmann::json to_json(const QPoly& f);
nlohmann::json to_json(const UTWindow& w);
nlohmann::json to_json(const basis::BivarPoly& f);

/// The parsers check p and N against ctx and throw ParseError on any
/// malformed or out-of-range field.
PadicInt padic_from_json(const PadicContext& ctx, const nlohmann::json& j);
PadicScaled scaled_from_json(const PadicContext& ctx, const nlohmann::json& j);
QPoly qpoly_from_json(const nlohmann::json& j);
UTWindow window_from_json(const PadicContext& ctx, const nlohmann::json& j);
basis::BivarPoly poly_from_json(const PadicContext& ctx, const nlohmann::json& j);

std::string emit(const UTWindow& w, Format format);
std::string emit(const basis::BivarPoly& f, Format format);
std::string emit(const QPoly& f, Format format);

}  // namespace utt::emit
