// Copyright 2026 The netsteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "netsteer/report_io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "netsteer/errors.hpp"

namespace netsteer {

namespace {

using Fields = std::vector<std::string>;
using nlohmann::json;

std::string opt_form(const std::optional<Form>& form) { return form ? to_string(*form) : ""; }

std::optional<Form> parse_opt_form(std::string_view text) {
  if (text.empty()) return std::nullopt;
  return parse_form(text);
}

json form_json(const std::optional<Form>& form) {
  return form ? json(to_string(*form)) : json(nullptr);
}

std::optional<Form> form_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_form(j.get<std::string>());
}

template <class Int>
Int parse_int(std::string_view text) {
  Int value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ValidationError("expected an integer, got \"" + std::string(text) + "\"");
  return value;
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ValidationError("expected true or false, got \"" + std::string(text) + "\"");
}

template <class Row>
struct Codec;

template <>
struct Codec<InequalityReport> {
  static Fields columns() { return {"id", "n", "settings", "form", "lhs", "bound", "margin", "violated"}; }
  static Fields to_fields(const InequalityReport& r) {
    return {to_string(r.id),       std::to_string(r.n),     std::to_string(r.settings_count),
            opt_form(r.form),      format_number(r.lhs),    format_number(r.bound),
            format_number(r.margin), r.violated ? "true" : "false"};
  }
  static InequalityReport from_fields(const Fields& f) {
    return {parse_inequality_id(f[0]), parse_int<std::size_t>(f[1]), parse_int<int>(f[2]),
            parse_opt_form(f[3]),       parse_number(f[4]),          parse_number(f[5]),
            parse_number(f[6]),         parse_bool(f[7])};
  }
  static json to_json(const InequalityReport& r) {
    return {{"id", to_string(r.id)}, {"n", r.n},         {"settings", r.settings_count},
            {"form", form_json(r.form)}, {"lhs", r.lhs}, {"bound", r.bound},
            {"margin", r.margin},    {"violated", r.violated}};
  }
  static InequalityReport from_json(const json& j) {
    return {parse_inequality_id(j.at("id").get<std::string>()), j.at("n").get<std::size_t>(),
            j.at("settings").get<int>(),                      form_from_json(j.at("form")),
            j.at("lhs").get<double>(),                        j.at("bound").get<double>(),
            j.at("margin").get<double>(),                     j.at("violated").get<bool>()};
  }
};

template <>
struct Codec<ScanRow> {
  using Inner = Codec<InequalityReport>;
  static Fields columns() {
    Fields c{"p"};
    for (auto& s : Inner::columns()) c.push_back(s);
    return c;
  }
  static Fields to_fields(const ScanRow& r) {
    Fields f{format_number(r.p)};
    for (auto& s : Inner::to_fields(r.report)) f.push_back(s);
    return f;
  }
  static ScanRow from_fields(const Fields& f) {
    return {parse_number(f[0]), Inner::from_fields(Fields(f.begin() + 1, f.end()))};
  }
  static json to_json(const ScanRow& r) {
    json j = Inner::to_json(r.report);
    j["p"] = r.p;
    return j;
  }
  static ScanRow from_json(const json& j) { return {j.at("p").get<double>(), Inner::from_json(j)}; }
};

template <>
struct Codec<ThresholdRow> {
  static Fields columns() { return {"family", "n", "settings", "form", "p_star", "bound", "source_tag"}; }
  static Fields to_fields(const ThresholdRow& r) {
    return {r.family,
            std::to_string(r.n),
            std::to_string(r.settings),
            opt_form(r.form),
            format_number(r.p_star),
            r.bound ? format_number(*r.bound) : "",
            to_string(r.source_tag)};
  }
  static ThresholdRow from_fields(const Fields& f) {
    return {f[0],
            parse_int<std::size_t>(f[1]),
            parse_int<int>(f[2]),
            parse_opt_form(f[3]),
            parse_number(f[4]),
            f[5].empty() ? std::nullopt : std::optional<double>(parse_number(f[5])),
            parse_source_tag(f[6])};
  }
  static json to_json(const ThresholdRow& r) {
    return {{"family", r.family},
            {"n", r.n},
            {"settings", r.settings},
            {"form", form_json(r.form)},
            {"p_star", r.p_star},
            {"bound", r.bound ? json(*r.bound) : json(nullptr)},
            {"source_tag", to_string(r.source_tag)}};
  }
  static ThresholdRow from_json(const json& j) {
    const json& b = j.at("bound");
    return {j.at("family").get<std::string>(),
            j.at("n").get<std::size_t>(),
            j.at("settings").get<int>(),
            form_from_json(j.at("form")),
            j.at("p_star").get<double>(),
            b.is_null() ? std::nullopt : std::optional<double>(b.get<double>()),
            parse_source_tag(j.at("source_tag").get<std::string>())};
  }
};

template <>
struct Codec<OracleRow> {
  static Fields columns() {
    return {"model", "id", "n", "restarts", "seed", "hidden_values", "best", "bound", "best_restart"};
  }
  static Fields to_fields(const OracleRow& r) {
    return {r.model,
            to_string(r.id),
            std::to_string(r.n),
            std::to_string(r.restarts),
            std::to_string(r.seed),
            std::to_string(r.hidden_values),
            format_number(r.best),
            format_number(r.bound),
            std::to_string(r.best_restart)};
  }
  static OracleRow from_fields(const Fields& f) {
    return {f[0],
            parse_inequality_id(f[1]),
            parse_int<std::size_t>(f[2]),
            parse_int<int>(f[3]),
            parse_int<std::uint64_t>(f[4]),
            parse_int<int>(f[5]),
            parse_number(f[6]),
            parse_number(f[7]),
            parse_int<int>(f[8])};
  }
  static json to_json(const OracleRow& r) {
    return {{"model", r.model},       {"id", to_string(r.id)}, {"n", r.n},
            {"restarts", r.restarts}, {"seed", r.seed},        {"hidden_values", r.hidden_values},
            {"best", r.best},         {"bound", r.bound},      {"best_restart", r.best_restart}};
  }
  static OracleRow from_json(const json& j) {
    return {j.at("model").get<std::string>(),
            parse_inequality_id(j.at("id").get<std::string>()),
            j.at("n").get<std::size_t>(),
            j.at("restarts").get<int>(),
            j.at("seed").get<std::uint64_t>(),
            j.at("hidden_values").get<int>(),
            j.at("best").get<double>(),
            j.at("bound").get<double>(),
            j.at("best_restart").get<int>()};
  }
};

template <>
struct Codec<LemmaResult> {
  static Fields columns() {
    return {"n", "lemma", "operator_norm", "unit_terms", "total", "bound", "method"};
  }
  static Fields to_fields(const LemmaResult& r) {
    return {std::to_string(r.n),        to_string(r.which),    format_number(r.operator_norm),
            format_number(r.unit_terms), format_number(r.total), format_number(r.bound),
            r.method};
  }
  static LemmaResult from_fields(const Fields& f) {
    return {parse_int<std::size_t>(f[0]), parse_lemma(f[1]), parse_number(f[2]),
            parse_number(f[3]),           parse_number(f[4]), parse_number(f[5]),
            f[6]};
  }
  static json to_json(const LemmaResult& r) {
    return {{"n", r.n},
            {"lemma", to_string(r.which)},
            {"operator_norm", r.operator_norm},
            {"unit_terms", r.unit_terms},
            {"total", r.total},
            {"bound", r.bound},
            {"method", r.method}};
  }
  static LemmaResult from_json(const json& j) {
    return {j.at("n").get<std::size_t>(),         parse_lemma(j.at("lemma").get<std::string>()),
            j.at("operator_norm").get<double>(),  j.at("unit_terms").get<double>(),
            j.at("total").get<double>(),          j.at("bound").get<double>(),
            j.at("method").get<std::string>()};
  }
};

std::string join(const Fields& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].find_first_of(",\n\"") != std::string::npos)
      throw ValidationError("CSV field contains a delimiter: \"" + fields[i] + "\"");
    if (i) line += ',';
    line += fields[i];
  }
  return line;
}

Fields split(std::string_view line) {
  Fields out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string to_string(Format format) { return format == Format::json ? "json" : "csv"; }

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  throw ValidationError("format must be json or csv, got \"" + std::string(text) + "\"");
}

std::string format_number(double value) {
  if (!std::isfinite(value)) throw ValidationError("cannot serialize a non-finite number");
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  if (ec != std::errc()) throw InternalError("number formatting failed");
  return std::string(buf, end);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ValidationError("expected a number, got \"" + std::string(text) + "\"");
  return value;
}

template <class Row>
std::string write_rows(const std::vector<Row>& rows, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(Codec<Row>::to_json(r));
    return arr.dump(2) + "\n";
  }
  std::string out = join(Codec<Row>::columns()) + "\n";
  for (const auto& r : rows) out += join(Codec<Row>::to_fields(r)) + "\n";
  return out;
}

template <class Row>
std::vector<Row> read_rows(std::string_view text, Format format) {
  std::vector<Row> rows;
  if (format == Format::json) {
    try {
      const json arr = json::parse(text);
      if (!arr.is_array()) throw ValidationError("report JSON must be an array");
      for (const auto& j : arr) rows.push_back(Codec<Row>::from_json(j));
    } catch (const json::exception& e) {
      throw ValidationError(std::string("malformed report JSON: ") + e.what());
    }
    return rows;
  }
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || split(line) != Codec<Row>::columns())
    throw ValidationError("CSV header does not match " + join(Codec<Row>::columns()));
  const std::size_t width = Codec<Row>::columns().size();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Fields fields = split(line);
    if (fields.size() != width)
      throw ValidationError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                            std::to_string(width));
    rows.push_back(Codec<Row>::from_fields(fields));
  }
  return rows;
}

#define NETSTEER_INSTANTIATE_ROWS(Row)                                              \
  template std::string write_rows<Row>(const std::vector<Row>&, Format);           \
  template std::vector<Row> read_rows<Row>(std::string_view, Format);

NETSTEER_INSTANTIATE_ROWS(InequalityReport)
NETSTEER_INSTANTIATE_ROWS(ScanRow)
NETSTEER_INSTANTIATE_ROWS(ThresholdRow)
NETSTEER_INSTANTIATE_ROWS(OracleRow)
NETSTEER_INSTANTIATE_ROWS(LemmaResult)

#undef NETSTEER_INSTANTIATE_ROWS

}  // namespace netsteer
