#pragma once

// JSON builders for the command line tool. Key order is part of the output
// contract (golden tests compare whole documents), hence ordered_json
// throughout. Values that are provably integral are emitted as JSON
// integers; everything that can be a non-integral rational is emitted as an
// exact "p/q" string, never as a float.

#include <json.hpp>

#include <string>
#include <vector>

#include "tnorm/base_norms.hpp"
#include "tnorm/contfrac.hpp"
#include "tnorm/diagram.hpp"
#include "tnorm/fraction.hpp"
#include "tnorm/satellite.hpp"
#include "tnorm/thurston_ball.hpp"

namespace tnorm_cli {

using nlohmann::ordered_json;

inline long long json_int(const tnorm::Int& v) {
    return tnorm::detail::checked_small(v, "JSON integer value");
}

inline ordered_json fraction_json(const tnorm::Fraction& f) { return f.str(); }

inline ordered_json rational_json(const tnorm::Fraction& f) {
    if (!f.is_inf() && f.is_integer()) return json_int(f.num());
    return f.str();
}

inline ordered_json cf_json(const tnorm::RationalDiagram& d) {
    ordered_json arr = ordered_json::array();
    for (long long a : d.boxes.coeffs) arr.push_back(d.mirror ? -a : a);
    return arr;
}

inline ordered_json vertex_norms_json(const tnorm::VertexNorms& v) {
    ordered_json j;
    j["l1"] = json_int(v.x10);
    j["l2"] = json_int(v.x01);
    j["l1+l2"] = json_int(v.x11);
    j["l1-l2"] = json_int(v.x1m1);
    return j;
}

inline ordered_json rays_json(const tnorm::NormBall& ball) {
    ordered_json arr = ordered_json::array();
    for (const tnorm::Fraction& r : rays_of(ball)) arr.push_back(r.str());
    return arr;
}

// Shared tail of every ball-like document: norms at the four standard
// classes, then rays, face count and shape.
inline void append_ball_fields(ordered_json& j, const tnorm::NormBall& ball) {
    tnorm::VertexNorms norms;
    auto at = [&ball](long long a, long long b) {
        tnorm::Fraction v = evaluate(ball, tnorm::Fraction(a), tnorm::Fraction(b));
        if (!v.is_integer()) throw tnorm::InternalError("non-integral norm at an integer class");
        return v.num();
    };
    norms.x10 = at(1, 0);
    norms.x01 = at(0, 1);
    norms.x11 = at(1, 1);
    norms.x1m1 = at(1, -1);
    j["vertex_norms"] = vertex_norms_json(norms);
    j["rays"] = rays_json(ball);
    j["faces"] = face_count(ball);
    j["shape"] = shape_of(ball);
}

inline ordered_json ball_json(const tnorm::RationalDiagram& d) {
    tnorm::BallClassification cls = classify(d);
    ordered_json j;
    j["fraction"] = d.fraction().str();
    j["cf"] = cf_json(d);
    j["vertex_norms"] = vertex_norms_json(vertex_norms(d));
    ordered_json rays = ordered_json::array();
    for (const tnorm::Fraction& r : cls.rays) rays.push_back(r.str());
    j["rays"] = rays;
    j["faces"] = cls.faces;
    j["shape"] = cls.shape;
    j["base_type"] = cls.base_type;
    j["fibers_S10"] = cls.fibers_S10;
    return j;
}

inline ordered_json satellite_json(const tnorm::SatelliteInput& in,
                                   const tnorm::NormBall& composed) {
    ordered_json j;
    j["lk_companion"] = json_int(in.lk_companion);
    j["lk_pattern"] = json_int(in.lk_pattern);
    j["lk"] = json_int(in.lk_companion * in.lk_pattern);
    append_ball_fields(j, composed);
    return j;
}

inline ordered_json family_json(int faces, const tnorm::FaceCountResult& result) {
    ordered_json j;
    j["faces"] = faces;
    j["provenance"] = result.provenance;
    ordered_json chain = ordered_json::array();
    for (std::size_t i = 0; i < result.chain.size(); ++i) {
        const tnorm::FamilyStep& step = result.chain[i];
        ordered_json s;
        s["step"] = i;
        s["provenance"] = step.provenance;
        s["lk"] = json_int(step.lk);
        append_ball_fields(s, step.ball);
        chain.push_back(s);
    }
    j["chain"] = chain;
    ordered_json ball;
    append_ball_fields(ball, result.ball);
    j["ball"] = ball;
    return j;
}

inline ordered_json farey_path_json(const tnorm::Fraction& f,
                                    const std::vector<tnorm::Fraction>& path) {
    ordered_json j;
    j["fraction"] = f.str();
    ordered_json verts = ordered_json::array();
    for (const tnorm::Fraction& v : path) verts.push_back(v.str());
    j["path"] = verts;
    j["length"] = static_cast<long long>(path.size()) - 1;
    j["x10"] = static_cast<long long>(path.size()) - 2;
    return j;
}

} // namespace tnorm_cli
