#pragma once

// Machine-checked reproduction of the classification tables and the example
// families: every entry pairs a construction recipe with expected values and
// reports PASS/FAIL per field.

#include <string>
#include <vector>

#include "geodesic/design.hpp"
#include "geodesic/families.hpp"

namespace geodesic {

// Resolution order: GEODESIC_DATA_DIR, then the compiled-in default.
std::string default_data_dir();

struct CatalogEntry {
    std::string id;
    std::string source; // table row or example this entry reproduces
    std::string recipe;
    std::string status; // verified | design-only | unverified-subgroup-variant | out-of-scope
    std::string expected_json; // raw JSON object with per-field provenance tags
};

struct EntryCheck {
    std::string field;
    std::string expected;
    std::string computed;
    std::string provenance;
    bool pass = false;
};

struct EntryReport {
    std::string id;
    std::string source;
    std::string status; // effective status after data-availability degradation
    std::string note;
    std::vector<EntryCheck> checks;
    bool failed = false; // any check failed (engine errors count as failures)
};

struct CatalogReport {
    std::vector<EntryReport> entries; // sorted by id
    size_t verified = 0, design_only = 0, skipped = 0, failed = 0;
    bool ok() const { return failed == 0; }
    std::string to_json() const;
    std::string to_text() const;
};

class Catalog {
public:
    explicit Catalog(const std::string& data_dir = default_data_dir());

    const std::string& data_dir() const { return data_dir_; }
    const std::vector<CatalogEntry>& entries() const { return entries_; }

    EntryReport run_entry(const CatalogEntry& entry) const;
    CatalogReport run_all(const std::string& filter = "") const;

private:
    std::string data_dir_;
    std::vector<CatalogEntry> entries_;
};

// Development of the quadratic-residue difference set mod p (p = 7 gives the
// 2-(7,3,1) plane presentation, p = 11 the 2-(11,5,2) biplane).
Design qr_difference_development(int p);

} // namespace geodesic
