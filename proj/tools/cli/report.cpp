/*
   Copyright 2026 The wstack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "wstack/motive.hpp"

namespace wstack::cli {

using nlohmann::json;

Format parse_format(std::string_view text) {
    if (text == "json") return Format::Json;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw Error(ErrorCode::Parse, "unknown format '" + std::string(text) + "'");
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

json optional_rational(const std::optional<mpq_class>& v) { return v ? json(rational_string(*v)) : json(nullptr); }

std::optional<mpq_class> read_optional_rational(const json& j) {
    if (j.is_null()) return std::nullopt;
    return parse_rational(j.get<std::string>());
}

GroupKind parse_group(const std::string& s) {
    for (GroupKind g : {GroupKind::GL2, GroupKind::PGL2, GroupKind::Gm})
        if (group_kind_name(g) == s) return g;
    throw Error(ErrorCode::Parse, "unknown group '" + s + "'");
}

std::string cell(const std::optional<mpq_class>& v) { return v ? rational_string(*v) : ""; }
std::string cell(const std::optional<bool>& v) { return v ? (*v ? "true" : "false") : ""; }

}  // namespace

json report_to_json(const CountReport& r, bool timing) {
    json model = {
        {"kind", std::string(model_kind_name(r.model.kind))},
        {"lambda", r.model.lam.weights()},
        {"n", r.model.n},
        {"stratum", std::string(stratum_name(r.model.stratum))},
    };
    json j = {
        {"model", model},
        {"q", r.q},
        {"field", r.field},
        {"method", std::string(method_name(r.method))},
        {"raw_cone_count", r.raw_cone_count.get_str()},
        {"group", std::string(group_kind_name(r.group))},
        {"group_order", r.group_order.get_str()},
        {"weighted_count", rational_string(r.weighted_count)},
        {"predicted", optional_rational(r.predicted)},
        {"match", r.match ? json(*r.match) : json(nullptr)},
        {"empirical", r.empirical},
        {"formula_value", optional_rational(r.formula_value)},
        {"ok", r.ok()},
    };
    if (r.bounds)
        j["bounds"] = {{"lower", rational_string(r.bounds->lower)},
                       {"upper", rational_string(r.bounds->upper)},
                       {"satisfied", r.bounds->satisfied}};
    else
        j["bounds"] = nullptr;
    if (timing && r.wall_time) j["wall_time"] = *r.wall_time;
    return j;
}

CountReport report_from_json(const json& j) {
    try {
        const json& m = j.at("model");
        const auto kind = m.at("kind").get<std::string>();
        const Stratum s = parse_stratum(m.at("stratum").get<std::string>());
        const unsigned n = m.at("n").get<unsigned>();
        CountModel model = kind == model_kind_name(ModelKind::SelfMap)
                               ? CountModel::selfmap(n, s)
                               : CountModel::hom(WeightVector(m.at("lambda").get<std::vector<unsigned>>()), n, s);
        if (kind != model_kind_name(ModelKind::SelfMap) && kind != model_kind_name(ModelKind::HomWeighted))
            throw Error(ErrorCode::Parse, "unknown model kind '" + kind + "'");
        CountReport r{model,
                      j.at("q").get<std::uint64_t>(),
                      j.at("field").get<std::string>(),
                      parse_method(j.at("method").get<std::string>()),
                      mpz_class(j.at("raw_cone_count").get<std::string>()),
                      parse_group(j.at("group").get<std::string>()),
                      mpz_class(j.at("group_order").get<std::string>()),
                      parse_rational(j.at("weighted_count").get<std::string>()),
                      read_optional_rational(j.at("predicted")),
                      {},
                      {},
                      j.at("empirical").get<bool>(),
                      read_optional_rational(j.at("formula_value")),
                      {}};
        if (!j.at("match").is_null()) r.match = j.at("match").get<bool>();
        if (const json& b = j.at("bounds"); !b.is_null())
            r.bounds = BoundCheck{parse_rational(b.at("lower").get<std::string>()),
                                  parse_rational(b.at("upper").get<std::string>()), b.at("satisfied").get<bool>()};
        if (j.contains("wall_time")) r.wall_time = j.at("wall_time").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed report: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::Parse, std::string("malformed integer in report: ") + e.what());
    }
}

std::string emit_reports(const std::vector<CountReport>& reports, Format format, bool timing) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            if (reports.size() == 1) return dump_json(report_to_json(reports.front(), timing));
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r, timing));
            return dump_json(arr);
        }
        case Format::Csv: {
            os << "model,q,field,method,raw_cone_count,group_order,weighted_count,predicted,match,bounds_lower,"
                  "bounds_upper,bounds_satisfied,empirical,formula_value,ok";
            if (timing) os << ",wall_time";
            os << "\n";
            for (const auto& r : reports) {
                os << '"' << r.model.to_string() << "\"," << r.q << ',' << r.field << ',' << method_name(r.method)
                   << ',' << r.raw_cone_count << ',' << r.group_order << ',' << rational_string(r.weighted_count)
                   << ',' << cell(r.predicted) << ',' << cell(r.match) << ','
                   << (r.bounds ? rational_string(r.bounds->lower) : "") << ','
                   << (r.bounds ? rational_string(r.bounds->upper) : "") << ','
                   << (r.bounds ? cell(std::optional<bool>(r.bounds->satisfied)) : "") << ','
                   << (r.empirical ? "true" : "false") << ',' << cell(r.formula_value) << ','
                   << (r.ok() ? "true" : "false");
                if (timing) os << ',' << (r.wall_time ? std::to_string(*r.wall_time) : "");
                os << "\n";
            }
            return os.str();
        }
        case Format::Text: {
            for (const auto& r : reports) {
                os << "model:          " << r.model.to_string() << "\n"
                   << "field:          " << r.field << "\n"
                   << "method:         " << method_name(r.method) << "\n"
                   << "raw cone count: " << r.raw_cone_count << "\n"
                   << "group order:    " << r.group_order << " (" << group_kind_name(r.group) << ")\n"
                   << "weighted count: " << rational_string(r.weighted_count) << "\n";
                if (r.predicted)
                    os << "predicted:      " << rational_string(*r.predicted) << (*r.match ? " (match)" : " (MISMATCH)")
                       << "\n";
                if (r.bounds)
                    os << "bounds:         " << rational_string(r.bounds->lower) << " <= count <= "
                       << rational_string(r.bounds->upper) << (r.bounds->satisfied ? " (satisfied)" : " (VIOLATED)")
                       << "\n";
                if (r.empirical)
                    os << "empirical:      parity outside the proven range"
                       << (r.formula_value ? ", formula gives " + rational_string(*r.formula_value) : std::string())
                       << "\n";
                if (timing && r.wall_time) os << "wall time:      " << *r.wall_time << " s\n";
                os << "\n";
            }
            return os.str();
        }
    }
    return {};
}

}  // namespace wstack::cli
