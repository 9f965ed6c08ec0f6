#pragma once

// Shared test corpus: the fan families used across the unit and acceptance suites.

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "toric/constructions.hpp"
#include "toric/io.hpp"

#ifndef TORIC_DATA_DIR
#error "TORIC_DATA_DIR must point at the data/ directory"
#endif

namespace toric::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline std::vector<DatabaseEntry> fano3_database() {
    return parse_database(read_file(std::string(TORIC_DATA_DIR) + "/fano3.jsonl"));
}

/// Twenty bundles with d <= 5 and twist sum <= 4, spread over every (m, n).
inline std::vector<BundleSpec> corpus_bundles() {
    std::vector<BundleSpec> all;
    for (std::size_t d = 2; d <= 5; ++d) {
        for (std::size_t m = 2; m <= d; ++m) {
            for (auto& s : bundle_specs(m, d + 2 - m, 4)) all.push_back(std::move(s));
        }
    }
    std::vector<BundleSpec> picked;
    const std::size_t stride = all.size() / 20;
    for (std::size_t i = 0; picked.size() < 20; i += stride) picked.push_back(all[i]);
    return picked;
}

/// P^d (d <= 4), P1xP3, P2xP2, the del Pezzo surfaces and the corpus bundles.
inline std::vector<NamedFan> surface_corpus() {
    std::vector<NamedFan> out;
    for (std::size_t d = 1; d <= 4; ++d) out.push_back({"P" + std::to_string(d), projective_space(d)});
    out.push_back({"P1xP3", product(projective_space(1), projective_space(3))});
    out.push_back({"P2xP2", product(projective_space(2), projective_space(2))});
    for (auto& dp : del_pezzo_database()) out.push_back(std::move(dp));
    for (const auto& spec : corpus_bundles()) out.push_back({"bundle " + spec.str(), kleinschmidt_bundle(spec)});
    return out;
}

/// surface_corpus plus the bundled Fano threefolds.
inline std::vector<NamedFan> full_corpus() {
    auto out = surface_corpus();
    for (auto& e : fano3_database()) out.push_back({e.name, *e.fan});
    return out;
}

}  // namespace toric::testing
