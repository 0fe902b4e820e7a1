#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tmotif/executor.hpp"
#include "tmotif/motifs.hpp"

namespace tmotif {

enum class OutputFormat { table, csv, json };

struct CensusReport {
    MotifCensus census;
    PhaseTimings timings;
    unsigned threads = 1;
    std::string degree_threshold = "auto";
    std::string motifs = "all";
};

// csv: header "signature,label,count", 36 rows in lexicographic signature
// order. json: object with keys "delta", "counts", "labels", "meta",
// "timings_ms". table: aligned columns grouped star/pair/triangle with group
// subtotals and a grand total.
void write_census(std::ostream& out, const CensusReport& report, OutputFormat format);

struct CensusDiff {
    struct Mismatch {
        MotifSignature signature;
        std::uint64_t lhs;
        std::uint64_t rhs;
    };
    std::vector<Mismatch> mismatches;
    std::size_t matching = 0;

    bool identical() const { return mismatches.empty(); }
};

CensusDiff diff_censuses(const MotifCensus& lhs, const MotifCensus& rhs);

// Per-signature diff lines plus an "N/36 match" summary.
void write_diff(std::ostream& out, const CensusDiff& diff, const std::string& lhs_name,
                const std::string& rhs_name);

}  // namespace tmotif
