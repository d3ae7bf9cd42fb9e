#include "ldpc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ldpc/errors.hpp"

namespace ldpc {

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

namespace {

std::int64_t require_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw Error(what + " must be an integer, got " + j.dump());
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const Json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) throw Error(what + " must be a nonempty array");
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(require_int(item, what + " entry"));
    return out;
}

}  // namespace

DegreeSequence degree_sequence_from_json(const Json& j) {
    if (!j.is_object()) throw Error("degree sequence must be a JSON object");
    if (j.contains("lambda") || j.contains("rho")) {
        if (!j.contains("lambda") || !j.contains("rho"))
            throw Error("degree sequence needs both \"lambda\" and \"rho\"");
        return DegreeSequence::validate(int_list(j.at("lambda"), "lambda"),
                                        int_list(j.at("rho"), "rho"));
    }
    if (j.contains("n") && j.contains("dv") && j.contains("dc")) {
        return DegreeSequence::regular(require_int(j.at("n"), "n"),
                                       require_int(j.at("dv"), "dv"),
                                       require_int(j.at("dc"), "dc"));
    }
    throw Error("degree sequence needs {\"lambda\", \"rho\"} or {\"n\", \"dv\", \"dc\"}");
}

std::vector<DegreeSequence> degree_sequence_family_from_json(const Json& j) {
    std::vector<DegreeSequence> family;
    if (j.is_array()) {
        if (j.empty()) throw Error("degree sequence family must be nonempty");
        for (const auto& item : j) family.push_back(degree_sequence_from_json(item));
    } else {
        family.push_back(degree_sequence_from_json(j));
    }
    return family;
}

Multigraph multigraph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("edges"))
        throw Error("multigraph needs {\"n\", \"m\", \"edges\"}");
    Multigraph graph;
    graph.n_left = require_int(j.at("n"), "n");
    graph.n_right = require_int(j.at("m"), "m");
    if (graph.n_left < 1 || graph.n_right < 1)
        throw Error("multigraph needs n >= 1 and m >= 1");
    if (!j.at("edges").is_array()) throw Error("\"edges\" must be an array");
    for (const auto& entry : j.at("edges")) {
        if (!entry.is_array() || entry.size() != 3)
            throw Error("each edge must be [left, right, multiplicity]");
        const std::int64_t a = require_int(entry[0], "edge left endpoint");
        const std::int64_t b = require_int(entry[1], "edge right endpoint");
        const std::int64_t mult = require_int(entry[2], "edge multiplicity");
        if (a < 0 || a >= graph.n_left || b < 0 || b >= graph.n_right)
            throw Error("edge endpoint out of range: " + entry.dump());
        if (mult < 1) throw Error("edge multiplicity must be >= 1");
        graph.edge_mult[{a, b}] += mult;
    }
    return graph;
}

Json to_json(const Multigraph& graph) {
    Json j;
    j["n"] = graph.n_left;
    j["m"] = graph.n_right;
    Json edges = Json::array();
    for (const auto& [edge, mult] : graph.edge_mult)
        edges.push_back(Json::array({edge.first, edge.second, mult}));
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const Rational& r) {
    Json j;
    j["num"] = r.num();
    j["den"] = r.den();
    j["value"] = r.to_double();
    return j;
}

Json to_json(const EnsembleStats& stats) {
    Json j;
    j["n"] = stats.n;
    j["m"] = stats.m;
    j["edges"] = stats.edges;
    j["delta_l"] = to_json(stats.delta_l);
    j["sigma_l"] = to_json(stats.sigma_l);
    j["delta_r"] = to_json(stats.delta_r);
    j["sigma_r"] = to_json(stats.sigma_r);
    j["delta"] = to_json(stats.delta);
    j["sigma"] = to_json(stats.sigma);
    j["delta_n"] = stats.delta_n;
    j["sigma_n"] = stats.sigma_n;
    j["fewer_left_than_right"] = stats.fewer_left_than_right;
    return j;
}

std::string side_hex(const std::vector<std::uint8_t>& side) {
    static const char* kDigits = "0123456789abcdef";
    std::string out;
    out.reserve((side.size() + 3) / 4);
    for (std::size_t base = 0; base < side.size(); base += 4) {
        int nibble = 0;
        for (std::size_t bit = 0; bit < 4 && base + bit < side.size(); ++bit)
            nibble |= (side[base + bit] & 1) << bit;
        out.push_back(kDigits[nibble]);
    }
    return out;
}

Json to_json(const BisectionResult& result) {
    Json j;
    j["width"] = result.width;
    j["exact"] = result.exact;
    j["vertices"] = result.side.size();
    j["assignment_hex"] = side_hex(result.side);
    return j;
}

Json to_json(const EnumerationReport& report) {
    Json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["edges"] = report.edges;
    j["sigma_n"] = report.sigma_n;
    j["total_configs"] = report.total_configs;
    j["mbw_histogram"] = report.mbw_histogram;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["a"] = row.a;
        r["count_leq"] = row.count_leq;
        r["empirical"] = static_cast<double>(row.count_leq) /
                         static_cast<double>(report.total_configs);
        if (row.admissible) {
            r["admissible"] = true;
            r["log_bound"] = row.log_bound;
            r["bound_clamped"] = row.bound_clamped;
        } else {
            r["admissible"] = false;
            r["note"] = "condition violated: a >= sigma_n";
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const BoundReport& report) {
    Json j;
    Json inputs;
    inputs["n"] = report.n;
    inputs["m"] = report.m;
    inputs["edges"] = report.edges;
    inputs["lambda_w"] = report.lambda_w;
    inputs["xi_tech"] = report.xi_tech;
    inputs["iterations"] = report.iterations;
    inputs["eta"] = report.eta;
    inputs["rate"] = report.rate;
    inputs["block_b"] = report.block_b;
    inputs["sason_c"] = report.sason_c;
    if (report.beta_override)
        inputs["beta_override"] = *report.beta_override;
    else
        inputs["beta_override"] = nullptr;
    j["inputs"] = std::move(inputs);
    j["condition"] = report.condition;
    j["condition_met"] = report.condition_met;
    if (report.beta)
        j["beta"] = *report.beta;
    else
        j["beta"] = nullptr;
    j["beta_used"] = report.beta_used;
    if (report.a) {
        j["a"] = *report.a;
        if (report.log_prob_small_bisection) {
            j["log_prob_small_bisection"] = *report.log_prob_small_bisection;
            j["prob_small_bisection"] = *report.prob_small_bisection;
        } else {
            j["log_prob_small_bisection"] = nullptr;
            j["prob_small_bisection"] = nullptr;
        }
    }
    j["thompson_area"] = report.thompson_area;
    j["nested_area"] = report.nested_area;
    j["energy_ccn"] = report.energy_ccn;
    j["n_min"] = report.n_min;
    j["area_direct"] = report.area_direct;
    j["energy_direct"] = report.energy_direct;
    j["energy_per_bit"] = report.energy_per_bit;
    j["fewer_left_than_right"] = report.fewer_left_than_right;
    return j;
}

Json to_json(const GapScalingReport& report) {
    Json j;
    j["eta"] = report.eta;
    j["n_min"] = report.n_min;
    j["area_direct"] = report.area_direct;
    j["energy_direct"] = report.energy_direct;
    j["energy_per_bit"] = report.energy_per_bit;
    return j;
}

Json to_json(const TrialRecord& rec) {
    Json j;
    j["seed"] = rec.seed;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["mbw"] = rec.mbw;
    j["exact"] = rec.exact;
    j["mbw_simplified"] = rec.mbw_simplified;
    j["multi_edge_units_removed"] = rec.multi_edge_units_removed;
    j["beta_n_threshold"] = rec.beta_n_threshold;
    j["condition_met"] = rec.condition_met;
    j["passed"] = rec.passed;
    return j;
}

Json to_json(const TrendSummary& sum) {
    Json j;
    j["n"] = sum.n;
    j["m"] = sum.m;
    j["beta"] = sum.beta;
    j["condition_met"] = sum.condition_met;
    j["trials"] = sum.trials;
    j["exact_trials"] = sum.exact_trials;
    j["exact_passes"] = sum.exact_passes;
    j["fraction_exact_pass"] = sum.fraction_exact_pass;
    j["mean_removed_fraction"] = sum.mean_removed_fraction;
    return j;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (const char c : raw) {
        quoted.push_back(c);
        if (c == '"') quoted.push_back('"');
    }
    quoted.push_back('"');
    return quoted;
}

std::string trial_records_csv(const std::vector<TrialRecord>& records) {
    std::string out =
        "seed,n,m,mbw,exact,mbw_simplified,multi_edge_units_removed,"
        "beta_n_threshold,condition_met,passed\n";
    for (const auto& rec : records) {
        out += std::to_string(rec.seed) + ',' + std::to_string(rec.n) + ',' +
               std::to_string(rec.m) + ',' + std::to_string(rec.mbw) + ',' +
               (rec.exact ? "true" : "false") + ',' + std::to_string(rec.mbw_simplified) +
               ',' + std::to_string(rec.multi_edge_units_removed) + ',' +
               format_double(rec.beta_n_threshold) + ',' +
               (rec.condition_met ? "true" : "false") + ',' +
               (rec.passed ? "true" : "false") + '\n';
    }
    return out;
}

std::string gap_reports_csv(const std::vector<GapScalingReport>& reports) {
    std::string out = "eta,n_min,area_direct,energy_direct,energy_per_bit\n";
    for (const auto& rep : reports) {
        out += format_double(rep.eta) + ',' + format_double(rep.n_min) + ',' +
               format_double(rep.area_direct) + ',' + format_double(rep.energy_direct) + ',' +
               format_double(rep.energy_per_bit) + '\n';
    }
    return out;
}

}  // namespace ldpc
