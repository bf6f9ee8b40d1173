#ifndef RR5_STORE_HPP
#define RR5_STORE_HPP

#include <rr5/qseries.hpp>
#include <rr5/tower.hpp>

#include <filesystem>
#include <optional>

#include <json.hpp>

namespace rr5 {

struct PdVerification {
    std::string divides_into;  // e.g. "P2", "R4"; empty if unchecked
    bool h_match = false;      // 5-adic Hilbert identification confirmed
    bool invariance = false;   // U- and T-invariance verified
    bool disc_checked = false;
};

// A verified class-invariant polynomial p_d.
struct PdRecord {
    Int d;
    long h = 0;
    UniPoly<Int> poly;
    std::string provenance;  // seed | padic-reconstruction | p2-resultant | ...
    PdVerification verified;

    bool is_verified() const {
        return verified.invariance && (verified.h_match || !verified.divides_into.empty());
    }
};

struct TdRecord {
    Int d;
    long h = 0;
    UniPoly<Int> poly;        // degree 2h
    bool relation_checked = false;  // x^2h t(x-1/x) = p_d verified
};

nlohmann::json poly_to_json(const UniPoly<Int>& p, const std::string& var = "x");
UniPoly<Int> poly_from_json(const nlohmann::json& j);
nlohmann::json bipoly_to_json(const BiPoly<Int>& p);
BiPoly<Int> bipoly_from_json(const nlohmann::json& j);
nlohmann::json series_to_json(const PuiseuxSeries& s);

nlohmann::json pd_to_json(const PdRecord& r);
PdRecord pd_from_json(const nlohmann::json& j);

// Single-writer on-disk store: store/pd/<d>.json, store/td/<d>.json,
// store/hilbert/<d>.json, store/tower/<kind><n>.json.  Writes are atomic
// (temp file + rename); reads re-validate the schema and cheap invariants.
class Store {
  public:
    explicit Store(std::filesystem::path root);
    // honors the RR5_STORE environment override
    static Store from_env_or(const std::filesystem::path& fallback);

    const std::filesystem::path& root() const { return root_; }

    void put_pd(const PdRecord& r, bool force = false);
    std::optional<PdRecord> get_pd(const Int& d) const;

    void put_td(const TdRecord& r, bool force = false);
    std::optional<TdRecord> get_td(const Int& d) const;

    void put_hilbert(const Int& d, long h, const UniPoly<Int>& poly);
    std::optional<UniPoly<Int>> get_hilbert(const Int& d) const;

    void put_tower(const TowerPoly& t);
    std::optional<TowerPoly> get_tower(TowerKind kind, int n) const;

    std::vector<PdRecord> all_pd() const;

  private:
    std::filesystem::path root_;
    void write_atomic(const std::filesystem::path& path,
                      const std::string& content) const;
    std::optional<nlohmann::json> read_json(const std::filesystem::path& path) const;
};

}  // namespace rr5

#endif
