#include "toricode/json_io.hpp"

#include <sstream>

namespace toricode {

LatticePolytope PolytopeSpec::realize_polytope() const {
    if (descriptor) return realize(*descriptor);
    return LatticePolytope::from_vertices(raw_vertices->first, raw_vertices->second);
}

Json PolytopeSpec::to_json() const {
    Json j;
    if (descriptor) {
        if (descriptor->is_delta2) {
            j["constructor"] = "delta2";
        } else {
            j["constructor"] = "lawrence";
            j["a"] = descriptor->a;
        }
        j["pyramids"] = descriptor->pyramid_levels;
    } else {
        j["vertices"] = raw_vertices->second;
    }
    return j;
}

PolytopeSpec parse_polytope_spec(const Json& j) {
    if (!j.is_object()) fail(Errc::ParseError, "polytope spec must be a JSON object");
    PolytopeSpec spec;
    if (j.contains("constructor")) {
        const std::string ctor = j.at("constructor").get<std::string>();
        DegreeOneDescriptor desc;
        desc.pyramid_levels = j.value("pyramids", 0);
        if (ctor == "lawrence") {
            if (!j.contains("a")) fail(Errc::ParseError, "lawrence constructor needs \"a\"");
            desc.a = j.at("a").get<std::vector<long long>>();
        } else if (ctor == "delta2") {
            desc.is_delta2 = true;
        } else if (ctor == "interval") {
            if (!j.contains("c")) fail(Errc::ParseError, "interval constructor needs \"c\"");
            long long c = j.at("c").get<long long>();
            if (c < 0) fail(Errc::ParseError, "interval needs c >= 0");
            desc.a = {c + 1}; // [0, c+1] is the one-dimensional Lawrence prism L(c+1)
        } else {
            fail(Errc::ParseError, "unknown constructor \"" + ctor + "\"");
        }
        desc.validate();
        spec.descriptor = desc;
        return spec;
    }
    if (j.contains("vertices")) {
        auto verts = j.at("vertices").get<std::vector<Point>>();
        if (verts.empty()) fail(Errc::ParseError, "vertex list is empty");
        spec.raw_vertices = {int(verts[0].size()), std::move(verts)};
        return spec;
    }
    fail(Errc::ParseError, "polytope spec needs \"constructor\" or \"vertices\"");
}

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"e", f.e()}, {"modulus", f.modulus()}};
}

Json polytope_report(const LatticePolytope& p) {
    Json j;
    j["m"] = p.dim();
    j["lattice_point_count"] = p.lattice_point_count();
    j["h_star"] = p.h_star();
    j["normalized_volume"] = p.normalized_volume();
    j["codim"] = p.codim();
    j["is_degree_one"] = p.is_degree_one();
    return j;
}

Json mode_report_to_json(const ModeReport& r) {
    Json hist = Json::object();
    for (const auto& [w, count] : r.histogram) hist[std::to_string(w)] = count;
    if (r.unbounded_count > 0) hist["unbounded"] = r.unbounded_count;
    Json j;
    j["s"] = r.s;
    j["histogram"] = hist;
    if (r.mode_unbounded)
        j["mode"] = "unbounded";
    else
        j["mode"] = r.mode;
    j["sample_count"] = r.sample_count;
    j["exhaustive"] = r.exhaustive;
    j["seed"] = r.seed;
    j["max_extension"] = r.max_extension;
    j["field"] = Json{{"p", r.field_p}, {"e", r.field_e}};
    j["polytope"] = Json{{"m", r.polytope_dim}, {"lattice_point_count", r.polytope_points}};
    return j;
}

Json genericity_report_to_json(const GenericityReport& r) {
    Json j;
    j["tuple"] = r.tuple;
    j["span_rank"] = r.span_rank;
    j["points_in_span"] = r.points_in_span;
    j["condition1_ok"] = r.condition1_ok;
    j["proxy2_ok"] = r.proxy2_ok;
    j["proxy3_ok"] = r.proxy3_ok;
    return j;
}

Json table1_check_to_json(const Table1Check& c) {
    Json j;
    j["q"] = c.row.q;
    j["a"] = c.row.a;
    j["k_formula"] = c.k_formula;
    j["dmin_formula"] = c.dmin_formula;
    j["k_table"] = c.row.k;
    j["dmin_table"] = c.row.dmin;
    j["n_formula"] = c.n_formula;
    j["n_table"] = c.row.n;
    j["match"] = c.match;
    j["notes"] = c.notes;
    return j;
}

std::string matrix_to_csv(const Matrix& m) {
    std::ostringstream out;
    out << m.field.p() << "," << m.field.e() << "," << m.rows << "," << m.cols << "\n";
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) out << ",";
            out << m.at(i, j);
        }
        out << "\n";
    }
    return out.str();
}

} // namespace toricode
