#pragma once

// JSON interchange for configurations, threefold configurations and
// cover files. Ids are strings; dimension fields are plain integers;
// exact rational matrix entries are serialised as strings ("p/q") so no
// precision is ever lost. Serialisation is deterministic (object keys
// are emitted sorted), so identical inputs give byte-identical output.
//
// File kinds, selected by meta.kind:
//   "surface"   -> Configuration plus transfer overrides
//   "threefold" -> Configuration3
//   "cover"     -> CoverMap with embedded total and base configurations
//
// Malformed documents raise ParseError; semantic validation is a
// separate concern handled by the callers.

#include <degen/config.hpp>
#include <degen/cover.hpp>
#include <degen/cy3.hpp>
#include <degen/weight.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace degen {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

inline std::string fibre_class_name(FibreClass c) { return to_string(c); }

inline FibreClass fibre_class_from(const std::string& s) {
    if (s == "K3") return FibreClass::K3;
    if (s == "Enriques") return FibreClass::Enriques;
    if (s == "Abelian") return FibreClass::Abelian;
    if (s == "Bielliptic") return FibreClass::Bielliptic;
    throw ParseError("unknown surface class '" + s + "'");
}

inline ComponentType component_type_from(const std::string& s) {
    if (s == "K3") return ComponentType::K3;
    if (s == "Enriques") return ComponentType::Enriques;
    if (s == "Abelian") return ComponentType::Abelian;
    if (s == "Bielliptic") return ComponentType::Bielliptic;
    if (s == "Rational") return ComponentType::Rational;
    if (s == "EllipticRuled") return ComponentType::EllipticRuled;
    throw ParseError("unknown component type '" + s + "'");
}

inline CurveRole role_from(const std::string& s) {
    if (s == "Ruling") return CurveRole::Ruling;
    if (s == "TwoRuling") return CurveRole::TwoRuling;
    if (s == "CycleMember") return CurveRole::CycleMember;
    if (s == "EllipticOnRational") return CurveRole::EllipticOnRational;
    throw ParseError("unknown curve role '" + s + "'");
}

inline const Json& require(const Json& j, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field '" + key + "'");
    return *it;
}

inline std::string require_string(const Json& j, const std::string& key) {
    const Json& v = require(j, key);
    if (!v.is_string()) throw ParseError("field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal '" + s + "'");
    }
}

inline Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    Json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = rows;
    return out;
}

inline QMatrix matrix_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("matrix must be an object");
    std::size_t rows = require(j, "rows").get<std::size_t>();
    std::size_t cols = require(j, "cols").get<std::size_t>();
    const Json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows) throw ParseError("bad matrix entries");
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!entries[i].is_array() || entries[i].size() != cols)
            throw ParseError("bad matrix row");
        for (std::size_t j2 = 0; j2 < cols; ++j2)
            m(i, j2) = rat_from_string(entries[i][j2].get<std::string>());
    }
    return m;
}

// id table with duplicate / missing detection
class IdTable {
public:
    void add(const std::string& id) {
        if (!index_.emplace(id, index_.size()).second)
            throw ParseError("duplicate id '" + id + "'");
    }
    std::size_t at(const std::string& id) const {
        auto it = index_.find(id);
        if (it == index_.end()) throw ParseError("unknown id '" + id + "'");
        return it->second;
    }

private:
    std::map<std::string, std::size_t> index_;
};

} // namespace io_detail

inline Json to_json(const Configuration& c, const TransferTemplate& transfers = {}) {
    using namespace io_detail;
    Json j;
    j["meta"] = {{"kind", "surface"},
                 {"class", fibre_class_name(c.surface_class)},
                 {"field_char", c.field_char},
                 {"omega", c.omega == OmegaClass::Trivial ? "trivial" : "torsion"}};
    Json comps = Json::array();
    for (const auto& comp : c.components) {
        Json e;
        e["id"] = comp.id;
        e["type"] = to_string(comp.kind.type);
        if (!is_smooth_class(comp.kind.type) && !comp.kind.b2_defaulted) e["b2"] = comp.kind.b2;
        comps.push_back(e);
    }
    j["components"] = comps;
    Json curves = Json::array();
    for (const auto& curve : c.double_curves) {
        Json e;
        e["id"] = curve.id;
        e["genus"] = curve.genus;
        e["left"] = {{"component", c.components[curve.left.component].id},
                     {"role", to_string(curve.left.role)}};
        e["right"] = {{"component", c.components[curve.right.component].id},
                      {"role", to_string(curve.right.role)}};
        e["triple_point_count"] = curve.triple_point_count;
        curves.push_back(e);
    }
    j["double_curves"] = curves;
    Json triples = Json::array();
    for (const auto& tp : c.triple_points) {
        Json e;
        e["id"] = tp.id;
        Json cs = Json::array(), ps = Json::array();
        for (auto ci : tp.curves) cs.push_back(c.double_curves[ci].id);
        for (auto pi : tp.components) ps.push_back(c.components[pi].id);
        e["curves"] = cs;
        e["components"] = ps;
        triples.push_back(e);
    }
    j["triple_points"] = triples;
    Json overrides = Json::array();
    for (const auto& [key, m] : transfers.weight_h1) {
        Json e;
        e["curve"] = c.double_curves[key.first].id;
        e["side"] = key.second == 0 ? "left" : "right";
        e["weight_h1"] = matrix_to_json(m);
        auto it = transfers.coherent_h1.find(key);
        if (it != transfers.coherent_h1.end()) e["coherent_h1"] = it->second.str();
        overrides.push_back(e);
    }
    for (const auto& [key, r] : transfers.coherent_h1) {
        if (transfers.weight_h1.count(key)) continue;
        Json e;
        e["curve"] = c.double_curves[key.first].id;
        e["side"] = key.second == 0 ? "left" : "right";
        e["coherent_h1"] = r.str();
        overrides.push_back(e);
    }
    j["transfers"] = {{"overrides", overrides}};
    return j;
}

struct LoadedSurface {
    Configuration config;
    TransferTemplate transfers;
};

inline LoadedSurface surface_from_json(const Json& j) {
    using namespace io_detail;
    LoadedSurface out;
    const Json& meta = require(j, "meta");
    out.config.surface_class = fibre_class_from(require_string(meta, "class"));
    if (meta.contains("field_char")) out.config.field_char = meta["field_char"].get<unsigned>();
    if (meta.contains("omega")) {
        std::string omega = meta["omega"].get<std::string>();
        if (omega == "trivial") out.config.omega = OmegaClass::Trivial;
        else if (omega == "torsion") out.config.omega = OmegaClass::Torsion;
        else throw ParseError("omega must be 'trivial' or 'torsion'");
    }

    IdTable comp_ids;
    for (const Json& e : require(j, "components")) {
        std::string id = require_string(e, "id");
        comp_ids.add(id);
        std::optional<std::size_t> b2;
        if (e.contains("b2")) b2 = e["b2"].get<std::size_t>();
        ComponentKind kind;
        try {
            kind = ComponentKind::of(component_type_from(require_string(e, "type")), b2);
        } catch (const std::invalid_argument& err) {
            throw ParseError(err.what());
        }
        out.config.components.push_back({id, kind});
    }
    IdTable curve_ids;
    for (const Json& e : require(j, "double_curves")) {
        DoubleCurve curve;
        curve.id = require_string(e, "id");
        curve_ids.add(curve.id);
        curve.genus = require(e, "genus").get<unsigned>();
        auto side = [&](const char* key) {
            const Json& s = require(e, key);
            return CurveSide{comp_ids.at(require_string(s, "component")),
                             role_from(require_string(s, "role"))};
        };
        curve.left = side("left");
        curve.right = side("right");
        if (e.contains("triple_point_count"))
            curve.triple_point_count = e["triple_point_count"].get<std::size_t>();
        out.config.double_curves.push_back(curve);
    }
    if (j.contains("triple_points"))
        for (const Json& e : j["triple_points"]) {
            TriplePoint tp;
            tp.id = require_string(e, "id");
            const Json& cs = require(e, "curves");
            const Json& ps = require(e, "components");
            if (cs.size() != 3 || ps.size() != 3)
                throw ParseError("triple point '" + tp.id + "' needs 3 curves and 3 components");
            for (std::size_t i = 0; i < 3; ++i) {
                tp.curves[i] = curve_ids.at(cs[i].get<std::string>());
                tp.components[i] = comp_ids.at(ps[i].get<std::string>());
            }
            out.config.triple_points.push_back(tp);
        }
    if (j.contains("transfers") && j["transfers"].contains("overrides"))
        for (const Json& e : j["transfers"]["overrides"]) {
            std::size_t curve = curve_ids.at(require_string(e, "curve"));
            std::string side = require_string(e, "side");
            if (side != "left" && side != "right")
                throw ParseError("transfer side must be 'left' or 'right'");
            int s = side == "left" ? 0 : 1;
            if (e.contains("weight_h1"))
                out.transfers.weight_h1[{curve, s}] = matrix_from_json(e["weight_h1"]);
            if (e.contains("coherent_h1"))
                out.transfers.coherent_h1[{curve, s}] =
                    rat_from_string(e["coherent_h1"].get<std::string>());
        }
    return out;
}

inline Json to_json(const Configuration3& c) {
    Json j;
    j["meta"] = {{"kind", "threefold"}, {"class", "CY3"}, {"wmc_assumed", c.wmc_assumed}};
    Json comps = Json::array();
    for (const auto& comp : c.components)
        comps.push_back({{"id", comp.id},
                         {"mori_fibre_birational", comp.mori_fibre_birational},
                         {"base_unirational", comp.base_unirational}});
    j["components"] = comps;
    Json surfaces = Json::array();
    for (const auto& s : c.double_surfaces)
        surfaces.push_back({{"id", s.id},
                            {"components", {c.components[s.components[0]].id,
                                            c.components[s.components[1]].id}},
                            {"rational", s.rational}});
    j["double_surfaces"] = surfaces;
    Json curves = Json::array();
    for (const auto& t : c.triple_curves) {
        Json comps3 = Json::array(), surf3 = Json::array();
        for (auto x : t.components) comps3.push_back(c.components[x].id);
        for (auto x : t.surfaces) surf3.push_back(c.double_surfaces[x].id);
        curves.push_back(
            {{"id", t.id}, {"components", comps3}, {"surfaces", surf3}, {"rational", t.rational}});
    }
    j["triple_curves"] = curves;
    Json quads = Json::array();
    for (const auto& q : c.quadruple_points) {
        Json comps4 = Json::array(), curves4 = Json::array();
        for (auto x : q.components) comps4.push_back(c.components[x].id);
        for (auto x : q.curves) curves4.push_back(c.triple_curves[x].id);
        quads.push_back({{"id", q.id}, {"components", comps4}, {"curves", curves4}});
    }
    j["quadruple_points"] = quads;
    return j;
}

inline Configuration3 threefold_from_json(const Json& j) {
    using namespace io_detail;
    Configuration3 out;
    const Json& meta = require(j, "meta");
    if (meta.contains("wmc_assumed")) out.wmc_assumed = meta["wmc_assumed"].get<bool>();

    IdTable comp_ids, surface_ids, curve_ids;
    for (const Json& e : require(j, "components")) {
        Component3 comp;
        comp.id = require_string(e, "id");
        comp_ids.add(comp.id);
        if (e.contains("mori_fibre_birational"))
            comp.mori_fibre_birational = e["mori_fibre_birational"].get<bool>();
        if (e.contains("base_unirational"))
            comp.base_unirational = e["base_unirational"].get<bool>();
        out.components.push_back(comp);
    }
    for (const Json& e : require(j, "double_surfaces")) {
        DoubleSurface s;
        s.id = require_string(e, "id");
        surface_ids.add(s.id);
        const Json& cs = require(e, "components");
        if (cs.size() != 2) throw ParseError("double surface '" + s.id + "' needs 2 components");
        s.components = {comp_ids.at(cs[0].get<std::string>()),
                        comp_ids.at(cs[1].get<std::string>())};
        if (e.contains("rational")) s.rational = e["rational"].get<bool>();
        out.double_surfaces.push_back(s);
    }
    for (const Json& e : require(j, "triple_curves")) {
        TripleCurve t;
        t.id = require_string(e, "id");
        curve_ids.add(t.id);
        const Json& cs = require(e, "components");
        const Json& ss = require(e, "surfaces");
        if (cs.size() != 3 || ss.size() != 3)
            throw ParseError("triple curve '" + t.id + "' needs 3 components and 3 surfaces");
        for (std::size_t i = 0; i < 3; ++i) {
            t.components[i] = comp_ids.at(cs[i].get<std::string>());
            t.surfaces[i] = surface_ids.at(ss[i].get<std::string>());
        }
        if (e.contains("rational")) t.rational = e["rational"].get<bool>();
        out.triple_curves.push_back(t);
    }
    if (j.contains("quadruple_points"))
        for (const Json& e : j["quadruple_points"]) {
            QuadruplePoint q;
            q.id = require_string(e, "id");
            const Json& cs = require(e, "components");
            const Json& ts = require(e, "curves");
            if (cs.size() != 4 || ts.size() != 4)
                throw ParseError("quadruple point '" + q.id + "' needs 4 components and 4 curves");
            for (std::size_t i = 0; i < 4; ++i) {
                q.components[i] = comp_ids.at(cs[i].get<std::string>());
                q.curves[i] = curve_ids.at(ts[i].get<std::string>());
            }
            out.quadruple_points.push_back(q);
        }
    return out;
}

inline Json to_json(const CoverMap& m) {
    Json j;
    j["meta"] = {{"kind", "cover"}};
    j["degree"] = m.degree;
    j["total"] = to_json(m.total);
    j["base"] = to_json(m.base, m.base_transfers);
    Json comp_map = Json::array();
    for (std::size_t i = 0; i < m.component_map.size(); ++i) {
        const auto& cc = m.component_map[i];
        comp_map.push_back({{"total", m.total.components[i].id},
                            {"base", m.base.components[cc.base].id},
                            {"behavior", to_string(cc.behavior)},
                            {"degree", cc.degree}});
    }
    j["component_map"] = comp_map;
    Json curve_map = Json::array();
    for (std::size_t i = 0; i < m.curve_map.size(); ++i)
        curve_map.push_back({{"total", m.total.double_curves[i].id},
                             {"base", m.base.double_curves[m.curve_map[i]].id}});
    j["curve_map"] = curve_map;
    return j;
}

inline CoverMap cover_from_json(const Json& j) {
    using namespace io_detail;
    CoverMap m;
    m.degree = require(j, "degree").get<std::size_t>();
    m.total = surface_from_json(require(j, "total")).config;
    auto base = surface_from_json(require(j, "base"));
    m.base = base.config;
    m.base_transfers = base.transfers;

    IdTable total_comp, base_comp, total_curve, base_curve;
    for (const auto& c : m.total.components) total_comp.add(c.id);
    for (const auto& c : m.base.components) base_comp.add(c.id);
    for (const auto& c : m.total.double_curves) total_curve.add(c.id);
    for (const auto& c : m.base.double_curves) base_curve.add(c.id);

    m.component_map.resize(m.total.components.size());
    std::vector<bool> seen(m.total.components.size(), false);
    for (const Json& e : require(j, "component_map")) {
        std::size_t i = total_comp.at(require_string(e, "total"));
        if (seen[i]) throw ParseError("component map lists a total component twice");
        seen[i] = true;
        ComponentCover cc;
        cc.base = base_comp.at(require_string(e, "base"));
        std::string behavior = require_string(e, "behavior");
        if (behavior == "IrreducibleCover") cc.behavior = FibreBehavior::IrreducibleCover;
        else if (behavior == "SplitCopies") cc.behavior = FibreBehavior::SplitCopies;
        else throw ParseError("unknown fibre behavior '" + behavior + "'");
        cc.degree = e.contains("degree") ? e["degree"].get<std::size_t>()
                                         : (cc.behavior == FibreBehavior::SplitCopies ? 1 : 2);
        m.component_map[i] = cc;
    }
    for (bool s : seen)
        if (!s) throw ParseError("component map misses a total component");

    m.curve_map.resize(m.total.double_curves.size());
    std::vector<bool> curve_seen(m.total.double_curves.size(), false);
    for (const Json& e : require(j, "curve_map")) {
        std::size_t i = total_curve.at(require_string(e, "total"));
        if (curve_seen[i]) throw ParseError("curve map lists a total curve twice");
        curve_seen[i] = true;
        m.curve_map[i] = base_curve.at(require_string(e, "base"));
    }
    for (bool s : curve_seen)
        if (!s) throw ParseError("curve map misses a total curve");
    return m;
}

enum class FileKind { Surface, Threefold, Cover };

struct LoadedFile {
    FileKind kind = FileKind::Surface;
    std::optional<LoadedSurface> surface;
    std::optional<Configuration3> threefold;
    std::optional<CoverMap> cover;
};

inline LoadedFile parse_document(const Json& j) {
    using namespace io_detail;
    if (!j.is_object()) throw ParseError("document root must be an object");
    std::string kind = require_string(require(j, "meta"), "kind");
    LoadedFile out;
    if (kind == "surface") {
        out.kind = FileKind::Surface;
        out.surface = surface_from_json(j);
    } else if (kind == "threefold") {
        out.kind = FileKind::Threefold;
        out.threefold = threefold_from_json(j);
    } else if (kind == "cover") {
        out.kind = FileKind::Cover;
        out.cover = cover_from_json(j);
    } else {
        throw ParseError("unknown file kind '" + kind + "'");
    }
    return out;
}

inline LoadedFile load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_document(j);
}

inline std::string dump_document(const Json& j) { return j.dump(2) + "\n"; }

inline void save_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << dump_document(j);
}

} // namespace degen
