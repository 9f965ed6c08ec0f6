#include "toric/fano.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace toric {

namespace {

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

FanoCheck is_fano(const Fan& fan) {
    for (const auto& w : walls(fan)) {
        Integer degree = wall_relation(fan, w.cone).anticanonical_degree();
        if (degree <= 0) return FanoCheck{false, w.cone, std::move(degree)};
    }
    return FanoCheck{true, std::nullopt, std::nullopt};
}

LemmaCheck lemma_filter(const Fan& fan) {
    if (fan.dim() < 2) return LemmaCheck{};
    const ChernDegrees chern = chern_degrees(fan);
    return LemmaCheck{*chern.lemma_value >= 0, chern.lemma_value};
}

FanoReport is_two_fano(const Fan& fan, const TwoFanoOptions& options) {
    FanoReport report;
    report.dim = fan.dim();
    report.picard = fan.picard_number();

    const ChernDegrees chern = chern_degrees(fan);
    report.c1_top = chern.c1_top;
    report.euler = chern.euler;
    report.lemma_value = chern.lemma_value;
    report.lemma_pass = !chern.lemma_value || *chern.lemma_value >= 0;

    const FanoCheck fano = is_fano(fan);
    report.is_fano = fano.is_fano;
    report.fano_witness = fano.witness;
    report.fano_witness_degree = fano.degree;

    if (options.fast && (!report.is_fano || !report.lemma_pass)) {
        report.is_two_fano = false;
        return report;
    }

    bool nef = true;
    if (fan.dim() >= 2) {
        IntersectionEngine engine(fan);
        for (const auto& tau : faces(fan, fan.dim() - 2)) {
            SurfaceKind kind = classify_surface(fan, tau);
            Rational pairing = ch2_pair(surface_class(engine, tau, kind));
            if (pairing < 0 && nef) {
                nef = false;
                report.two_fano_witness = tau;
            }
            report.surfaces.push_back(SurfacePairing{tau, std::move(kind), std::move(pairing)});
        }
    }
    report.surfaces_checked = true;
    report.is_two_fano = report.is_fano && nef;
    return report;
}

ScanResult scan(const std::vector<DatabaseEntry>& database, const ScanOptions& options) {
    ScanResult result;
    result.records.resize(database.size());
    parallel_for(database.size(), options.jobs, [&](std::size_t i) {
        const DatabaseEntry& entry = database[i];
        ScanRecord& rec = result.records[i];
        rec.index = i;
        rec.name = entry.name;
        rec.line = entry.line;
        if (!entry.fan) {
            rec.error = entry.error;
            return;
        }
        try {
            rec.report = is_two_fano(*entry.fan, TwoFanoOptions{options.fast});
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
    });

    ScanCounts& counts = result.counts;
    for (const auto& rec : result.records) {
        ++counts.total;
        if (!rec.report) {
            ++counts.invalid;
            continue;
        }
        counts.fano += rec.report->is_fano;
        counts.lemma_pass += rec.report->lemma_pass;
        counts.two_fano += rec.report->is_two_fano;
    }
    return result;
}

// ---------------------------------------------------------------------------

RankTwoCones rank2_surface_cones(const BundleSpec& spec) {
    spec.check();
    const std::size_t m = spec.m;
    const std::size_t n = spec.n;
    auto cone = [&](std::size_t xs, std::size_t ys) {
        std::vector<RayId> ids;
        for (std::size_t i = 0; i < xs; ++i) ids.push_back(static_cast<RayId>(i));
        for (std::size_t j = 0; j < ys; ++j) ids.push_back(static_cast<RayId>(m + j));
        return Cone(std::move(ids));
    };
    RankTwoCones out;
    if (m >= 3) out.s1 = cone(m - 3, n - 1);
    out.s2 = cone(m - 2, n - 2);
    if (n >= 3) out.s3 = cone(m - 1, n - 3);
    return out;
}

RankTwoClosedForms rank2_closed_forms(const BundleSpec& spec) {
    spec.check();
    RankTwoClosedForms out;
    const Integer sum = spec.twist_sum();
    out.fano = Integer(spec.n) > sum;
    out.ch2_s2 = Integer(spec.m) * spec.twists.back() - 2 * sum;
    out.two_fano = out.fano && (sum == 0 || spec.m == 2);

    const Fan fan = kleinschmidt_bundle(spec);
    const RankTwoCones cones = rank2_surface_cones(spec);
    auto basis_surface = [&](const Cone& c) {
        CycleClass cls = surface_class_fast(fan, c);
        Rational ch2 = ch2_pair(cls);
        return BasisSurface{c, std::move(cls), std::move(ch2)};
    };
    if (cones.s1) out.basis.s1 = basis_surface(*cones.s1);
    out.basis.s2 = basis_surface(cones.s2);
    if (cones.s3) out.basis.s3 = basis_surface(*cones.s3);
    return out;
}

RankTwoSweep rank2_sweep(std::size_t dim, const Integer& budget, unsigned jobs) {
    if (dim < 2) throw ToricError(ErrorKind::OutOfRange, "Picard number two needs dimension at least 2");
    RankTwoSweep sweep;
    sweep.dim = dim;
    sweep.budget = budget;

    std::vector<BundleSpec> fano_specs;
    for (std::size_t m = 2; m <= dim; ++m) {
        const std::size_t n = dim + 2 - m;
        for (auto& spec : bundle_specs(m, n, budget)) {
            ++sweep.specs;
            if (spec.fano()) fano_specs.push_back(std::move(spec));
        }
    }
    std::sort(fano_specs.begin(), fano_specs.end());
    sweep.fano_specs = fano_specs.size();

    std::vector<char> expected(fano_specs.size());
    std::vector<char> computed(fano_specs.size());
    parallel_for(fano_specs.size(), jobs, [&](std::size_t i) {
        const BundleSpec& spec = fano_specs[i];
        const Integer sum = spec.twist_sum();
        expected[i] = sum == 0 || spec.m == 2;
        computed[i] = is_two_fano(kleinschmidt_bundle(spec)).is_two_fano;
    });
    for (std::size_t i = 0; i < fano_specs.size(); ++i) {
        const BundleSpec& spec = fano_specs[i];
        if (expected[i] != computed[i]) sweep.discrepancies.push_back({spec, expected[i] != 0, computed[i] != 0});
        // P^{m-1} x P^{n-1} also appears as the spec with m and n swapped
        const bool mirrored_product = spec.twist_sum() == 0 && spec.m > spec.n;
        if (computed[i] && !mirrored_product) sweep.two_fano.push_back(spec);
    }
    return sweep;
}

}  // namespace toric
