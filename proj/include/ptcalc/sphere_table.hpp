#pragma once

/**
 * @file sphere_table.hpp
 * @brief Table of homotopy groups of spheres and stable stems.
 *
 * Lookups resolve in a fixed order:
 *   1. m < n            -> 0
 *   2. m = n            -> Z
 *   3. n = 1, m >= 2    -> 0
 *   4. m <= 2n - 2      -> stable stem m - n, if tabulated
 *   5. tabulated pi_m(S^n)
 *   6. symbolic "π_m(S^n)"
 */

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ptcalc/abelian.hpp"
#include "ptcalc/default_table_data.hpp"
#include "ptcalc/errors.hpp"

namespace ptc {

struct TableEntry {
    KnownGroup group;
    std::string provenance;
    int line = 0;
};

class SphereTable {
public:
    const std::map<int, TableEntry>& stable_stems() const noexcept { return stable_; }
    const std::map<std::pair<int, int>, TableEntry>& unstable_entries() const noexcept { return unstable_; }

    const TableEntry* stable_entry(int k) const {
        auto it = stable_.find(k);
        return it == stable_.end() ? nullptr : &it->second;
    }

    const TableEntry* unstable_entry(int m, int n) const {
        auto it = unstable_.find({m, n});
        return it == unstable_.end() ? nullptr : &it->second;
    }

    /// Parses the line format; `source` names the input in error messages
    /// and default provenance strings.
    static SphereTable parse(std::istream& in, const std::string& source) {
        SphereTable t;
        std::string raw;
        int lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            std::string provenance;
            if (auto hash = raw.find('#'); hash != std::string::npos) {
                provenance = trim(raw.substr(hash + 1));
                raw.resize(hash);
            }
            std::istringstream ls(raw);
            std::string kind;
            if (!(ls >> kind)) continue;
            auto fail = [&](const std::string& what) -> void {
                throw parse_error(source + ":" + std::to_string(lineno) + ": " + what);
            };
            std::vector<std::int64_t> nums;
            std::string tok;
            while (ls >> tok) {
                std::size_t used = 0;
                std::int64_t v = 0;
                try {
                    v = std::stoll(tok, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != tok.size()) fail("not an integer: '" + tok + "'");
                nums.push_back(v);
            }
            if (provenance.empty()) provenance = source + ":" + std::to_string(lineno);

            std::size_t head = 0;
            if (kind == "stable") head = 1;
            else if (kind == "unstable") head = 2;
            else fail("unknown entry kind '" + kind + "'");

            if (nums.size() < head + 1) fail("missing fields for '" + kind + "' entry");
            for (std::size_t i = 0; i < head; ++i)
                if (nums[i] < 0 || nums[i] > 100000) fail("degree out of range");
            std::int64_t rank = nums[head];
            if (rank < 0 || rank > 100000) fail("rank out of range");
            std::vector<std::int64_t> torsion(nums.begin() + static_cast<std::ptrdiff_t>(head) + 1, nums.end());
            for (auto x : torsion)
                if (x < 2) fail("torsion orders must be >= 2");
            TableEntry entry{normal_form(static_cast<int>(rank), torsion), provenance, lineno};

            if (head == 1) {
                int k = static_cast<int>(nums[0]);
                if (!t.stable_.emplace(k, std::move(entry)).second)
                    fail("duplicate stable entry for k=" + std::to_string(k));
            } else {
                int m = static_cast<int>(nums[0]);
                int n = static_cast<int>(nums[1]);
                if (n < 1) fail("sphere dimension must be >= 1");
                if (!t.unstable_.emplace(std::pair{m, n}, std::move(entry)).second)
                    fail("duplicate unstable entry for (" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
        }
        t.validate(source);
        return t;
    }

    static SphereTable parse_string(const std::string& text, const std::string& source) {
        std::istringstream in(text);
        return parse(in, source);
    }

private:
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    // Unstable entries inside the stable range must agree with their stem.
    void validate(const std::string& source) const {
        for (const auto& [key, entry] : unstable_) {
            auto [m, n] = key;
            if (m > 2 * n - 2) continue;
            const TableEntry* stem = stable_entry(m - n);
            if (stem == nullptr || stem->group == entry.group) continue;
            throw parse_error(source + ": inconsistent entries: unstable " + std::to_string(m) + " " +
                              std::to_string(n) + " (line " + std::to_string(entry.line) + ", " +
                              render(entry.group) + ") lies in the stable range but stable " +
                              std::to_string(m - n) + " (line " + std::to_string(stem->line) + ") is " +
                              render(stem->group));
        }
    }

    std::map<int, TableEntry> stable_;
    std::map<std::pair<int, int>, TableEntry> unstable_;
};

inline SphereTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table file '" + path + "'");
    return SphereTable::parse(in, path);
}

/// The table compiled in from data/sphere_table.txt.
inline const SphereTable& default_table() {
    static const SphereTable table = SphereTable::parse_string(kDefaultSphereTable, "<default table>");
    return table;
}

/// pi_m(S^n) under the fixed resolution order.
inline FgAbelianGroup lookup_pi(int m, int n, const SphereTable& t) {
    if (n < 1) throw std::invalid_argument("lookup_pi needs n >= 1");
    if (m < 0) throw std::invalid_argument("lookup_pi needs m >= 0");
    if (m < n) return FgAbelianGroup::zero();
    if (m == n) return FgAbelianGroup::integers();
    if (n == 1) return FgAbelianGroup::zero();
    if (m <= 2 * n - 2)
        if (const TableEntry* e = t.stable_entry(m - n)) return e->group;
    if (const TableEntry* e = t.unstable_entry(m, n)) return e->group;
    return FgAbelianGroup::symbolic("π_" + std::to_string(m) + "(S^" + std::to_string(n) + ")");
}

/// The stable stem pi_k of the sphere spectrum; zero for k < 0.
inline FgAbelianGroup stable_stem(int k, const SphereTable& t) {
    if (k < 0) return FgAbelianGroup::zero();
    if (const TableEntry* e = t.stable_entry(k)) return e->group;
    if (k == 0) return FgAbelianGroup::integers();
    return FgAbelianGroup::symbolic("π_" + std::to_string(k) + "𝕊");
}

} // namespace ptc
