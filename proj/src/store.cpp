#include <rr5/store.hpp>

#include <cstdlib>
#include <fstream>

namespace rr5 {

using nlohmann::json;

json poly_to_json(const UniPoly<Int>& p, const std::string& var) {
    json j;
    j["var"] = var;
    json coeffs = json::array();
    for (const Int& c : p.c) coeffs.push_back(c.get_str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

UniPoly<Int> poly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw store_error("polynomial JSON lacks a coeffs array");
    UniPoly<Int> p;
    for (const auto& c : j["coeffs"]) {
        if (!c.is_string()) throw store_error("polynomial coefficients must be decimal strings");
        p.c.emplace_back(c.get<std::string>());
    }
    p.trim();
    return p;
}

json bipoly_to_json(const BiPoly<Int>& p) {
    json j;
    j["vars"] = {"x", "y"};
    json rows = json::array();
    for (const auto& row : p.c) {
        json r = json::array();
        for (const Int& c : row) r.push_back(c.get_str());
        rows.push_back(std::move(r));
    }
    j["coeffs"] = std::move(rows);
    return j;
}

BiPoly<Int> bipoly_from_json(const json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw store_error("bivariate JSON lacks a coeffs matrix");
    BiPoly<Int> p;
    long i = 0;
    for (const auto& row : j["coeffs"]) {
        long k = 0;
        for (const auto& c : row) {
            if (!c.is_string())
                throw store_error("polynomial coefficients must be decimal strings");
            Int v(c.get<std::string>());
            if (!is_zero(v)) p.set(i, k, v);
            ++k;
        }
        ++i;
    }
    p.trim();
    return p;
}

json series_to_json(const PuiseuxSeries& s) {
    json j;
    j["unit"] = "q^(1/5)";
    j["order"] = s.order;
    json coeffs = json::object();
    for (long e = 0; e < s.order; ++e)
        if (!is_zero(s.c[e])) coeffs[std::to_string(e)] = s.c[e].get_str();
    j["coeffs"] = std::move(coeffs);
    return j;
}

json pd_to_json(const PdRecord& r) {
    json j;
    j["kind"] = "pd";
    j["d"] = r.d.get_str();
    j["h"] = r.h;
    j["provenance"] = r.provenance;
    j["verified"] = {{"divides_into", r.verified.divides_into},
                     {"h_match", r.verified.h_match},
                     {"invariance", r.verified.invariance},
                     {"disc_checked", r.verified.disc_checked}};
    j["poly"] = poly_to_json(r.poly);
    return j;
}

PdRecord pd_from_json(const json& j) {
    if (j.value("kind", "") != "pd") throw store_error("not a pd record");
    PdRecord r;
    r.d = Int(j.at("d").get<std::string>());
    r.h = j.at("h").get<long>();
    r.provenance = j.value("provenance", "");
    const auto& v = j.at("verified");
    r.verified.divides_into = v.value("divides_into", "");
    r.verified.h_match = v.value("h_match", false);
    r.verified.invariance = v.value("invariance", false);
    r.verified.disc_checked = v.value("disc_checked", false);
    r.poly = poly_from_json(j.at("poly"));
    // cheap re-validation
    if (!r.poly.is_monic()) throw store_error("stored p_d is not monic");
    long expect = (r.d == 4) ? 2 : 4 * r.h;
    if (r.poly.degree() != expect) throw store_error("stored p_d has wrong degree");
    return r;
}

Store::Store(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_ / "pd");
    std::filesystem::create_directories(root_ / "td");
    std::filesystem::create_directories(root_ / "hilbert");
    std::filesystem::create_directories(root_ / "tower");
}

Store Store::from_env_or(const std::filesystem::path& fallback) {
    const char* env = std::getenv("RR5_STORE");
    return Store(env && *env ? std::filesystem::path(env) : fallback);
}

void Store::write_atomic(const std::filesystem::path& path,
                         const std::string& content) const {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw store_error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) throw store_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<json> Store::read_json(const std::filesystem::path& path) const {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw store_error("corrupt store file " + path.string() + ": " + e.what());
    }
    return j;
}

void Store::put_pd(const PdRecord& r, bool force) {
    if (!r.is_verified() && !force)
        throw store_error("refusing to store an unverified p_d record (use force)");
    write_atomic(root_ / "pd" / (r.d.get_str() + ".json"), pd_to_json(r).dump(1));
}

std::optional<PdRecord> Store::get_pd(const Int& d) const {
    auto j = read_json(root_ / "pd" / (d.get_str() + ".json"));
    if (!j) return std::nullopt;
    PdRecord r = pd_from_json(*j);
    if (r.d != d) throw store_error("pd record filename/content mismatch");
    return r;
}

void Store::put_td(const TdRecord& r, bool force) {
    if (!r.relation_checked && !force)
        throw store_error("refusing to store an unverified t_d record (use force)");
    json j;
    j["kind"] = "td";
    j["d"] = r.d.get_str();
    j["h"] = r.h;
    j["relation_checked"] = r.relation_checked;
    j["poly"] = poly_to_json(r.poly);
    write_atomic(root_ / "td" / (r.d.get_str() + ".json"), j.dump(1));
}

std::optional<TdRecord> Store::get_td(const Int& d) const {
    auto j = read_json(root_ / "td" / (d.get_str() + ".json"));
    if (!j) return std::nullopt;
    if (j->value("kind", "") != "td") throw store_error("not a td record");
    TdRecord r;
    r.d = Int(j->at("d").get<std::string>());
    r.h = j->at("h").get<long>();
    r.relation_checked = j->value("relation_checked", false);
    r.poly = poly_from_json(j->at("poly"));
    if (!r.poly.is_monic() || r.poly.degree() != 2 * r.h)
        throw store_error("stored t_d fails cheap invariants");
    return r;
}

void Store::put_hilbert(const Int& d, long h, const UniPoly<Int>& poly) {
    json j;
    j["kind"] = "hilbert";
    j["d"] = d.get_str();
    j["h"] = h;
    j["poly"] = poly_to_json(poly, "X");
    write_atomic(root_ / "hilbert" / (d.get_str() + ".json"), j.dump(1));
}

std::optional<UniPoly<Int>> Store::get_hilbert(const Int& d) const {
    auto j = read_json(root_ / "hilbert" / (d.get_str() + ".json"));
    if (!j) return std::nullopt;
    if (j->value("kind", "") != "hilbert") throw store_error("not a hilbert record");
    UniPoly<Int> p = poly_from_json(j->at("poly"));
    if (!p.is_monic() || p.degree() != j->at("h").get<long>())
        throw store_error("stored Hilbert polynomial fails cheap invariants");
    return p;
}

void Store::put_tower(const TowerPoly& t) {
    json j;
    j["kind"] = "tower";
    j["tower"] = tower_kind_name(t.kind);
    j["n"] = t.n;
    j["provenance"] = t.provenance;
    j["poly"] = poly_to_json(t.poly);
    write_atomic(root_ / "tower" / (tower_kind_name(t.kind) + std::to_string(t.n) + ".json"),
                 j.dump(1));
}

std::optional<TowerPoly> Store::get_tower(TowerKind kind, int n) const {
    auto j = read_json(root_ / "tower" /
                       (tower_kind_name(kind) + std::to_string(n) + ".json"));
    if (!j) return std::nullopt;
    if (j->value("kind", "") != "tower") throw store_error("not a tower record");
    TowerPoly t;
    t.kind = kind;
    t.n = j->at("n").get<int>();
    t.provenance = j->value("provenance", "");
    t.poly = poly_from_json(j->at("poly"));
    if (t.n != n) throw store_error("tower record filename/content mismatch");
    return t;
}

std::vector<PdRecord> Store::all_pd() const {
    std::vector<PdRecord> out;
    for (const auto& ent : std::filesystem::directory_iterator(root_ / "pd")) {
        if (ent.path().extension() != ".json") continue;
        auto j = read_json(ent.path());
        if (j) out.push_back(pd_from_json(*j));
    }
    return out;
}

}  // namespace rr5
