#include "utt/emit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace utt::emit {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(Errc::ParseError, what);
}

std::uint64_t parse_decimal(const json& j) {
  if (!j.is_string()) parse_fail("expected a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    parse_fail("bad decimal string '" + s + "'");
  return value;
}

PadicInt residue_from(const PadicContext& ctx, const json& j) {
  const std::uint64_t r = parse_decimal(j);
  if (r >= ctx.modulus()) parse_fail("residue " + std::to_string(r) + " not reduced");
  return ctx.from_residue(r);
}

void check_header(const PadicContext& ctx, const json& j) {
  if (!j.is_object()) parse_fail("expected an object");
  if (j.value("p", std::uint64_t{0}) != ctx.prime() ||
      j.value("N", -1) != ctx.precision())
    parse_fail("p or N does not match context " + ctx.describe());
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    parse_fail(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "pretty") return Format::Pretty;
  parse_fail("unknown format '" + std::string(name) + "'");
}

json to_json(const PadicInt& x) {
  return json{{"N", x.context().precision()},
              {"p", x.context().prime()},
              {"residue", x.to_string()}};
}

json to_json(const PadicScaled& x) {
  if (x.is_zero()) return json{{"unit", "0"}, {"val", "inf"}};
  json j{{"unit", x.unit().to_string()}, {"val", x.valuation()}};
  if (x.digits() < x.context().precision()) j["digits"] = x.digits();
  return j;
}

json to_json(const QPoly& f) {
  json arr = json::array();
  for (auto c : f.coeffs()) arr.push_back(c);
  return arr;
}

json to_json(const UTWindow& w) {
  json rows = json::array();
  for (int i = 0; i < w.size(); ++i) {
    json row = json::array();
    for (int j = i; j < w.size(); ++j) row.push_back(w(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"N", w.context().precision()},
              {"W", w.size()},
              {"p", w.context().prime()},
              {"rows", std::move(rows)}};
}

json to_json(const basis::BivarPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    json t = to_json(c);
    t["a"] = e.first;
    t["b"] = e.second;
    terms.push_back(std::move(t));
  }
  const auto w = f.weight();
  return json{{"terms", std::move(terms)},
              {"weight", w ? json(*w) : json(nullptr)}};
}

PadicInt padic_from_json(const PadicContext& ctx, const json& j) {
  check_header(ctx, j);
  if (!j.contains("residue")) parse_fail("missing residue");
  return residue_from(ctx, j.at("residue"));
}

PadicScaled scaled_from_json(const PadicContext& ctx, const json& j) {
  if (!j.is_object() || !j.contains("val") || !j.contains("unit"))
    parse_fail("scaled value needs 'val' and 'unit'");
  const PadicInt unit = residue_from(ctx, j.at("unit"));
  if (j.at("val").is_string()) {
    if (j.at("val").get<std::string>() != "inf" || !unit.is_zero())
      parse_fail("only the zero form may have val \"inf\"");
    return PadicScaled::zero(ctx);
  }
  const int val = get_int(j, "val");
  const int digits = j.contains("digits") ? get_int(j, "digits") : ctx.precision();
  if (unit.is_zero()) parse_fail("nonzero form with zero unit");
  try {
    const PadicScaled x = PadicScaled::make(val, unit, digits);
    if (x.unit() != unit) parse_fail("unit not reduced to its significant digits");
    return x;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    parse_fail(e.what());
  }
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) parse_fail("QPoly must be an array");
  std::vector<std::int64_t> c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) parse_fail("QPoly coefficient must be an integer");
    c.push_back(x.get<std::int64_t>());
  }
  QPoly f(c);
  if (static_cast<std::size_t>(f.degree() + 1) != c.size())
    parse_fail("QPoly has trailing zeros");
  return f;
}

UTWindow window_from_json(const PadicContext& ctx, const json& j) {
  check_header(ctx, j);
  const int w = get_int(j, "W");
  if (w < 1) parse_fail("W must be positive");
  if (!j.contains("rows") || !j.at("rows").is_array() ||
      static_cast<int>(j.at("rows").size()) != w)
    parse_fail("rows must hold W arrays");
  UTWindow out(ctx, w);
  for (int i = 0; i < w; ++i) {
    const auto& row = j.at("rows").at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != w - i)
      parse_fail("row " + std::to_string(i) + " must hold W - i entries");
    for (int k = 0; k < w - i; ++k)
      out.set(i, i + k, residue_from(ctx, row.at(static_cast<std::size_t>(k))));
  }
  return out;
}

basis::BivarPoly poly_from_json(const PadicContext& ctx, const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    parse_fail("polynomial needs a 'terms' array");
  basis::BivarPoly f(ctx);
  for (const auto& t : j.at("terms")) {
    const int a = get_int(t, "a");
    const int b = get_int(t, "b");
    if (a < 0 || b < 0) parse_fail("negative exponent");
    const PadicScaled c = scaled_from_json(ctx, t);
    if (c.is_zero()) parse_fail("stored zero coefficient");
    f += basis::BivarPoly::monomial(a, b, c);
  }
  if (f.terms().size() != j.at("terms").size()) parse_fail("duplicate term");
  return f;
}

std::string emit(const UTWindow& w, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(w).dump() + "\n";
    case Format::Csv: {
      std::ostringstream out;
      for (int i = 0; i < w.size(); ++i) {
        for (int j = 0; j < w.size(); ++j) out << (j ? "," : "") << w(i, j).to_string();
        out << "\n";
      }
      return out.str();
    }
    case Format::Pretty: {
      std::size_t width = 1;
      for (int i = 0; i < w.size(); ++i)
        for (int j = i; j < w.size(); ++j)
          width = std::max(width, w(i, j).to_string().size());
      std::ostringstream out;
      out << "W=" << w.size() << " p=" << w.context().prime()
          << " N=" << w.context().precision() << "\n";
      for (int i = 0; i < w.size(); ++i) {
        for (int j = 0; j < w.size(); ++j)
          out << (j ? " " : "") << pad_left(w(i, j).to_string(), width);
        out << "\n";
      }
      return out.str();
    }
  }
  return {};
}

std::string emit(const basis::BivarPoly& f, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(f).dump() + "\n";
    case Format::Csv: {
      std::ostringstream out;
      out << "a,b,val,unit\n";
      for (const auto& [e, c] : f.terms())
        out << e.first << "," << e.second << "," << c.valuation() << ","
            << c.unit().to_string() << "\n";
      return out.str();
    }
    case Format::Pretty: {
      if (f.is_zero()) return "0\n";
      std::ostringstream out;
      bool first = true;
      for (const auto& [e, c] : f.terms()) {
        out << (first ? "" : " + ") << "(" << c.to_string() << ")";
        if (e.first) out << " u^" << e.first;
        if (e.second) out << " v^" << e.second;
        first = false;
      }
      out << "\n";
      return out.str();
    }
  }
  return {};
}

std::string emit(const QPoly& f, Format format) {
  switch (format) {
    case Format::Json:
      return to_json(f).dump() + "\n";
    case Format::Csv: {
      std::ostringstream out;
      for (int k = 0; k <= f.degree(); ++k) out << (k ? "," : "") << f.coeff(k);
      out << "\n";
      return out.str();
    }
    case Format::Pretty:
      return f.to_string() + "\n";
  }
  return {};
}

}  // namespace utt::emit
