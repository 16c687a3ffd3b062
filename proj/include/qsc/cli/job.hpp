#pragma once

/**
 * @file job.hpp
 * @brief Job descriptions read by the command-line front end.
 *
 * A job is one JSON document:
 *
 *     { "variety": {"type": "product_projective", "dims": [1, 1]},
 *       "bundle":  {"type": "tangent"}
 *                | {"type": "tangent_deformation_p1p1", "epsilon": ["1","0","0"], "gamma": ["0","0","0"]}
 *                | {"type": "twist_list", "classes": [[1,0], [1,0], [0,1], [0,1]]}
 *                | {"type": "matrix", "rows": [["x0","0"], ...]},
 *       "ring":    "classical" | "quantum" | "qsc",
 *       "trace":   {"reference": "psi*psit", "value": "1"},
 *       "queries": [["H^2", "H^2", "H"], ...] }
 *
 * Rationals are strings so that no value passes through a float.
 */

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsc/cohomology_rings.hpp"
#include "qsc/error.hpp"
#include "qsc/rational.hpp"

namespace qsc::cli {

enum class BundleKind { tangent, deformation_p1p1, twist_list, matrix };
enum class RingKind { classical, quantum, qsc };

struct Job {
    std::vector<int> dims;
    BundleKind bundle = BundleKind::tangent;
    ParameterTriple epsilon{0, 0, 0};
    ParameterTriple gamma{0, 0, 0};
    std::vector<DivisorClass> twists;
    std::vector<std::vector<std::string>> matrix_rows;
    RingKind ring = RingKind::quantum;
    std::optional<std::pair<std::string, Rational>> trace;
    std::vector<std::array<std::string, 3>> queries;
};

namespace detail {

inline Rational rational_field(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw invalid_input(where + ": rationals must be strings like \"2/3\" or integers");
}

inline ParameterTriple triple_field(const nlohmann::json& b, const char* key) {
    if (!b.contains(key)) return {0, 0, 0};
    const auto& arr = b.at(key);
    if (!arr.is_array() || arr.size() != 3) throw invalid_input(std::string(key) + " must list three rationals");
    return {rational_field(arr[0], key), rational_field(arr[1], key), rational_field(arr[2], key)};
}

}  // namespace detail

inline Job parse_job(const nlohmann::json& doc) {
    try {
        Job job;
        if (!doc.is_object()) throw invalid_input("job must be a JSON object");
        if (!doc.contains("variety")) throw invalid_input("job has no variety");
        const auto& var = doc.at("variety");
        if (var.value("type", "") != "product_projective")
            throw invalid_input("variety type must be product_projective");
        job.dims = var.at("dims").get<std::vector<int>>();
        if (job.dims.empty()) throw invalid_input("variety dims must be nonempty");
        for (int n : job.dims)
            if (n < 1) throw invalid_input("variety dims must be positive");

        if (doc.contains("bundle")) {
            const auto& b = doc.at("bundle");
            std::string type = b.value("type", "");
            if (type == "tangent") {
                job.bundle = BundleKind::tangent;
            } else if (type == "tangent_deformation_p1p1") {
                job.bundle = BundleKind::deformation_p1p1;
                job.epsilon = detail::triple_field(b, "epsilon");
                job.gamma = detail::triple_field(b, "gamma");
                if (job.dims != std::vector<int>{1, 1})
                    throw invalid_input("tangent_deformation_p1p1 requires variety dims [1,1]");
            } else if (type == "twist_list") {
                job.bundle = BundleKind::twist_list;
                job.twists = b.at("classes").get<std::vector<DivisorClass>>();
                for (const auto& c : job.twists)
                    if (c.size() != job.dims.size())
                        throw invalid_input("twist classes need one entry per projective factor");
            } else if (type == "matrix") {
                job.bundle = BundleKind::matrix;
                job.matrix_rows = b.at("rows").get<std::vector<std::vector<std::string>>>();
            } else {
                throw invalid_input("unknown bundle type '" + type + "'");
            }
        }

        std::string ring = doc.value("ring", "quantum");
        if (ring == "classical")
            job.ring = RingKind::classical;
        else if (ring == "quantum")
            job.ring = RingKind::quantum;
        else if (ring == "qsc")
            job.ring = RingKind::qsc;
        else
            throw invalid_input("unknown ring '" + ring + "'");
        if (job.ring == RingKind::qsc && job.bundle != BundleKind::deformation_p1p1)
            throw invalid_input("ring qsc requires variety [1,1] and a tangent_deformation_p1p1 bundle");

        if (doc.contains("trace")) {
            const auto& t = doc.at("trace");
            job.trace = std::make_pair(t.at("reference").get<std::string>(),
                                       t.contains("value") ? detail::rational_field(t.at("value"), "trace value")
                                                           : Rational(1));
        }
        if (doc.contains("queries"))
            for (const auto& q : doc.at("queries")) {
                auto v = q.get<std::vector<std::string>>();
                if (v.size() != 3) throw invalid_input("each correlator query needs three expressions");
                job.queries.push_back({v[0], v[1], v[2]});
            }
        return job;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("malformed job: ") + e.what());
    }
}

inline Job parse_job(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(std::string("job is not valid JSON: ") + e.what());
    }
    return parse_job(doc);
}

}  // namespace qsc::cli
