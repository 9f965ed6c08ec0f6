#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/constructions.hpp"
#include "toric/surfaces.hpp"

namespace toric {

struct FanoCheck {
    bool is_fano = false;
    std::optional<Cone> witness;     // first wall with (-K . C) <= 0
    std::optional<Integer> degree;   // (-K . C) of the witness
};

/// -K is ample iff it is positive on every torus-invariant curve.
FanoCheck is_fano(const Fan& fan);

struct LemmaCheck {
    bool pass = true;
    std::optional<Integer> value;  // c1^{d-2} (c1^2 - 2 c2); absent for d < 2
};

LemmaCheck lemma_filter(const Fan& fan);

struct SurfacePairing {
    Cone cone;
    SurfaceKind kind;
    Rational ch2;
};

struct FanoReport {
    std::size_t dim = 0;
    std::size_t picard = 0;
    Integer c1_top;
    Integer euler;

    bool is_fano = false;
    std::optional<Cone> fano_witness;
    std::optional<Integer> fano_witness_degree;

    bool lemma_pass = true;
    std::optional<Integer> lemma_value;

    bool is_two_fano = false;
    std::optional<Cone> two_fano_witness;  // a surface with negative ch2 pairing
    bool surfaces_checked = false;         // false when fast mode stopped early
    std::vector<SurfacePairing> surfaces;  // ordered by cone
};

struct TwoFanoOptions {
    /// Skip the surface sweep when the fan is not Fano or fails the degree filter.
    bool fast = false;
};

FanoReport is_two_fano(const Fan& fan, const TwoFanoOptions& options = {});

// ---------------------------------------------------------------------------
// Database scan

struct DatabaseEntry {
    std::string name;
    std::size_t line = 0;
    std::optional<Fan> fan;  // empty when the entry failed to parse or validate
    std::string error;
};

struct ScanRecord {
    std::size_t index = 0;
    std::string name;
    std::size_t line = 0;
    std::optional<FanoReport> report;
    std::string error;
};

struct ScanCounts {
    std::size_t total = 0;
    std::size_t invalid = 0;
    std::size_t fano = 0;
    std::size_t lemma_pass = 0;
    std::size_t two_fano = 0;
};

struct ScanOptions {
    bool fast = false;
    unsigned jobs = 1;
};

struct ScanResult {
    std::vector<ScanRecord> records;  // input order
    ScanCounts counts;
};

ScanResult scan(const std::vector<DatabaseEntry>& database, const ScanOptions& options = {});

// ---------------------------------------------------------------------------
// Picard number two

struct BasisSurface {
    Cone cone;
    CycleClass cls;
    Rational ch2;
};

/// Surfaces S1 = D_1..D_{m-3} E^{n-1}, S2 = D_1..D_{m-2} E^{n-2}, S3 = D_1..D_{m-1} E^{n-3},
/// each present only when its exponents are non-negative.
struct RankTwoSurfaceBasis {
    std::optional<BasisSurface> s1;
    std::optional<BasisSurface> s2;
    std::optional<BasisSurface> s3;

    std::size_t size() const { return std::size_t{s1.has_value()} + s2.has_value() + s3.has_value(); }
};

struct RankTwoCones {
    std::optional<Cone> s1;
    Cone s2;
    std::optional<Cone> s3;
};

/// Cones of S1, S2, S3 in the ray order of kleinschmidt_bundle.
RankTwoCones rank2_surface_cones(const BundleSpec& spec);

struct RankTwoClosedForms {
    bool fano = false;
    Integer ch2_s2;  // m a_{m-1} - 2 sum a_i = sum_i (D_i^2 . S2) = 2 (ch2 . S2)
    bool two_fano = false;
    RankTwoSurfaceBasis basis;
};

RankTwoClosedForms rank2_closed_forms(const BundleSpec& spec);

struct RankTwoDiscrepancy {
    BundleSpec spec;
    bool closed_form = false;
    bool computed = false;
};

struct RankTwoSweep {
    std::size_t dim = 0;
    Integer budget;
    std::size_t specs = 0;        // all specs in range
    std::size_t fano_specs = 0;   // specs compared
    std::vector<RankTwoDiscrepancy> discrepancies;  // sorted by spec
    std::vector<BundleSpec> two_fano;               // distinct varieties, sorted
};

RankTwoSweep rank2_sweep(std::size_t dim, const Integer& budget, unsigned jobs = 1);

}  // namespace toric
