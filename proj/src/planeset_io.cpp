#include "grasspack/planeset_io.hpp"

#include "grasspack/errors.hpp"

#include <algorithm>
#include <fstream>

namespace grasspack {

using nlohmann::json;

json report_to_json(const PackingReport& r) {
    json spectrum = json::array();
    for (const auto& e : r.spectrum) spectrum.push_back({{"d2", e.value}, {"count", e.count}});
    json out = {
        {"N", r.N},
        {"mode", to_string(r.mode)},
        {"exact", r.exact},
        {"d2_min", r.d2_string()},
        {"d2_min_float", r.d2_min},
        {"worst_pair", {r.worst_pair.first, r.worst_pair.second}},
        {"pairs_checked", r.pairs_checked},
        {"spectrum", spectrum},
        {"simplex_bound", to_string(r.bounds.simplex)},
        {"orthoplex_bound", to_string(r.bounds.orthoplex)},
        {"D", r.bounds.D},
        {"orthoplex_applies", r.bounds.orthoplex_applies},
        {"status", to_string(r.status)},
        {"degenerate", r.degenerate},
        {"bound_violated", r.bound_violated},
        {"claim_violated", r.claim_violated},
    };
    if (r.mode == VerifyMode::Sampled) out["seed"] = r.seed;
    return out;
}

json planeset_to_json(const Packing& packing, const PackingReport* report) {
    const bool exact = packing.is_exact();
    const bool any_exact =
        std::any_of(packing.planes.begin(), packing.planes.end(), [](const Plane& p) { return p.is_exact(); });
    if (any_exact && !exact) throw UsageError("cannot serialize a packing mixing exact and float planes");
    json planes = json::array();
    for (const auto& plane : packing.planes) {
        json rows = json::array();
        if (exact) {
            const auto& proj = plane.exact_projection();
            for (int r = 0; r < proj.rows(); ++r) {
                json row = json::array();
                for (int c = 0; c < proj.cols(); ++c) row.push_back(proj.at(r, c));
                rows.push_back(std::move(row));
            }
            planes.push_back({{"half_scale", proj.half_scale()}, {"rows", std::move(rows)}});
        } else {
            const Eigen::MatrixXd basis = plane.basis();
            for (Eigen::Index r = 0; r < basis.rows(); ++r) {
                json row = json::array();
                for (Eigen::Index c = 0; c < basis.cols(); ++c) row.push_back(basis(r, c));
                rows.push_back(std::move(row));
            }
            planes.push_back({{"rows", std::move(rows)}});
        }
    }
    json doc = {
        {"format", kPlaneSetFormat},
        {"m", packing.m},
        {"n", packing.n},
        {"N", packing.planes.size()},
        {"provenance", packing.provenance},
        {"exactness", exact ? "exact" : "float"},
        {"representation", exact ? "projection" : "basis"},
        {"half_scale_convention", "value = entry * 2^(-half_scale/2)"},
        {"planes", std::move(planes)},
    };
    if (packing.claimed_d2) doc["claimed_d2"] = to_string(*packing.claimed_d2);
    if (report) doc["report"] = report_to_json(*report);
    return doc;
}

Packing planeset_from_json(const json& doc) {
    try {
        if (!doc.is_object() || doc.value("format", "") != kPlaneSetFormat) {
            throw UsageError(std::string("not a ") + kPlaneSetFormat + " document");
        }
        Packing packing;
        packing.m = doc.at("m").get<int>();
        packing.n = doc.at("n").get<int>();
        packing.provenance = doc.value("provenance", "");
        if (doc.contains("claimed_d2")) packing.claimed_d2 = parse_rational(doc.at("claimed_d2").get<std::string>());
        const auto exactness = doc.at("exactness").get<std::string>();
        if (exactness != "exact" && exactness != "float") throw UsageError("unknown exactness '" + exactness + "'");
        if (packing.m < 1 || packing.n < 0 || packing.n > packing.m) throw UsageError("invalid m, n");
        const auto& planes = doc.at("planes");
        if (!planes.is_array()) throw UsageError("planes must be an array");
        for (const auto& entry : planes) {
            const auto& rows = entry.at("rows");
            if (exactness == "exact") {
                if (rows.size() != static_cast<std::size_t>(packing.m)) throw UsageError("projection needs m rows");
                std::vector<std::int64_t> values;
                for (const auto& row : rows) {
                    if (row.size() != static_cast<std::size_t>(packing.m)) throw UsageError("projection needs m columns");
                    for (const auto& x : row) values.push_back(x.get<std::int64_t>());
                }
                ExactMatrix proj(packing.m, packing.m, entry.at("half_scale").get<int>(), std::move(values));
                Plane plane = Plane::from_projection(std::move(proj));
                if (plane.dim() != packing.n) throw UsageError("projection trace does not equal n");
                packing.planes.push_back(std::move(plane));
            } else {
                if (rows.size() != static_cast<std::size_t>(packing.n)) throw UsageError("basis needs n rows");
                Eigen::MatrixXd basis(packing.n, packing.m);
                for (int r = 0; r < packing.n; ++r) {
                    const auto& row = rows[static_cast<std::size_t>(r)];
                    if (row.size() != static_cast<std::size_t>(packing.m)) throw UsageError("basis rows need m entries");
                    for (int c = 0; c < packing.m; ++c) basis(r, c) = row[static_cast<std::size_t>(c)].get<double>();
                }
                packing.planes.push_back(Plane::from_orthonormal_basis(std::move(basis)));
            }
        }
        if (doc.at("N").get<std::size_t>() != packing.planes.size()) throw UsageError("N does not match the plane count");
        return packing;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed plane set: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("malformed plane set: ") + e.what());
    }
}

void write_planeset(const std::string& path, const Packing& packing, const PackingReport* report) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << planeset_to_json(packing, report).dump() << "\n";
}

Packing read_planeset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("'" + path + "' is not valid JSON: " + e.what());
    }
    return planeset_from_json(doc);
}

}  // namespace grasspack
