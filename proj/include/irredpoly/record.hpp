/*
   Copyright 2026 the irredpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file record.hpp
 * @brief ConstructionRecord serialization (one JSON object per line) and the
 *        append-only result cache.
 *
 * Records for the same (p, k, d, modulus, version) are bit-identical, so
 * duplicate cache lines are benign; the last one wins on read. Corrupt
 * lines are skipped with a warning and never served. Appends are single
 * whole-line writes.
 */

#ifndef IRREDPOLY_RECORD_HPP
#define IRREDPOLY_RECORD_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "json.hpp"

#include "irredpoly/construct.hpp"

namespace irredpoly {

inline nlohmann::json record_to_json(const ConstructionRecord& rec) {
    nlohmann::json j;
    j["p"] = natural_to_string(rec.p);
    j["k"] = rec.k;
    j["d"] = rec.d;
    if (rec.modulus_text)
        j["modulus"] = *rec.modulus_text;
    else
        j["modulus"] = nullptr;
    j["poly"] = rec.poly_text;
    j["verified"] = rec.verified;
    j["seeds_consumed"] = rec.seeds_consumed;
    j["version"] = rec.version;
    return j;
}

/// One-line serialization; nlohmann orders keys deterministically, so equal
/// records produce identical bytes.
inline std::string record_to_line(const ConstructionRecord& rec) {
    return record_to_json(rec).dump();
}

inline std::optional<ConstructionRecord> record_from_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    try {
        ConstructionRecord rec;
        rec.p = parse_natural(j.at("p").get<std::string>());
        rec.k = j.at("k").get<unsigned>();
        rec.d = j.at("d").get<unsigned>();
        if (j.at("modulus").is_null())
            rec.modulus_text = std::nullopt;
        else
            rec.modulus_text = j.at("modulus").get<std::string>();
        rec.poly_text = j.at("poly").get<std::string>();
        rec.verified = j.at("verified").get<bool>();
        rec.seeds_consumed = j.at("seeds_consumed").get<std::uint64_t>();
        rec.version = j.at("version").get<std::string>();
        if (rec.k < 1 || rec.d < 1) return std::nullopt;
        if ((rec.k == 1) != !rec.modulus_text) return std::nullopt;
        return rec;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Re-runs Rabin's test on a record's polynomial over its stated field.
/// Any parse or verification problem yields false; a cache hit is only
/// served after this passes.
inline bool verify_record(const ConstructionRecord& rec) {
    try {
        const Fp P(rec.p);
        if (rec.k == 1) {
            Poly<Fp> f = poly_from_text(P, rec.poly_text);
            return f.degree() == static_cast<int>(rec.d) && f.is_monic() &&
                   rabin_is_irreducible(f);
        }
        Poly<Fp> h = poly_from_text(P, *rec.modulus_text);
        if (h.degree() != static_cast<int>(rec.k) || !h.is_monic() || !rabin_is_irreducible(h))
            return false;
        const FpExt ctx(P, h, /*verify_irreducible=*/false);
        Poly<FpExt> f = poly_from_text(ctx, rec.poly_text);
        return f.degree() == static_cast<int>(rec.d) && f.is_monic() && rabin_is_irreducible(f);
    } catch (const std::exception&) {
        return false;
    }
}

inline bool same_cache_key(const ConstructionRecord& a, const ConstructionRecord& b) {
    return a.p == b.p && a.k == b.k && a.d == b.d && a.modulus_text == b.modulus_text &&
           a.version == b.version;
}

/// Scans the JSON-lines cache for the newest record matching the key fields
/// of `key`. Corrupt lines produce a warning on `warn` and are skipped.
inline std::optional<ConstructionRecord> cache_lookup(const std::string& path,
                                                      const ConstructionRecord& key,
                                                      std::ostream& warn = std::cerr) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::optional<ConstructionRecord> hit;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto rec = record_from_line(line);
        if (!rec) {
            warn << "irredpoly: skipping corrupt cache line " << lineno << " in " << path
                 << "\n";
            continue;
        }
        if (same_cache_key(*rec, key)) hit = std::move(rec);
    }
    return hit;
}

/// Appends one record as a whole line. Whole-line appends keep concurrent
/// writers from interleaving within a line.
inline void cache_append(const std::string& path, const ConstructionRecord& rec) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw InvalidInputError("cannot open cache file for append: " + path);
    out << record_to_line(rec) << '\n';
    out.flush();
}

}  // namespace irredpoly

#endif
