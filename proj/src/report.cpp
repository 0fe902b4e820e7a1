#include "tmotif/report.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

namespace tmotif {

namespace {

std::string_view category_name(MotifSignature::Category c) {
    switch (c) {
        case MotifSignature::Category::pair: return "pair";
        case MotifSignature::Category::star: return "star";
        case MotifSignature::Category::triangle: return "triangle";
    }
    return "?";
}

void write_csv(std::ostream& out, const MotifCensus& census) {
    out << "signature,label,count\n";
    for (const MotifSignature& sig : all_signatures()) {
        out << sig.str() << ',' << label_for_signature(sig) << ',' << census.count(sig)
            << '\n';
    }
}

void write_json(std::ostream& out, const CensusReport& report) {
    nlohmann::ordered_json counts, labels;
    for (const MotifSignature& sig : all_signatures()) {
        counts[sig.to_string()] = report.census.count(sig);
        labels[sig.to_string()] = label_for_signature(sig);
    }
    nlohmann::ordered_json doc;
    doc["delta"] = report.census.delta;
    doc["counts"] = std::move(counts);
    doc["labels"] = std::move(labels);
    doc["meta"] = {
        {"input", report.census.meta.input},
        {"edges", report.census.meta.edge_count},
        {"triangle_mode", report.census.meta.triangle_mode},
        {"workers", report.census.meta.workers},
        {"threads", report.threads},
        {"degree_threshold", report.degree_threshold},
        {"motifs", report.motifs},
    };
    doc["timings_ms"] = {
        {"ingest", report.timings.ingest_ms},     {"index", report.timings.index_ms},
        {"star_pair", report.timings.star_pair_ms}, {"triangle", report.timings.triangle_ms},
        {"merge", report.timings.merge_ms},       {"total", report.timings.total_ms()},
    };
    out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, const CensusReport& report) {
    const MotifCensus& census = report.census;
    out << "input: " << census.meta.input << "  edges: " << census.meta.edge_count
        << "  delta: " << census.delta << "  threads: " << report.threads
        << "  triangle mode: " << census.meta.triangle_mode << '\n';

    static constexpr MotifSignature::Category groups[] = {
        MotifSignature::Category::star,
        MotifSignature::Category::pair,
        MotifSignature::Category::triangle,
    };
    std::uint64_t grand_total = 0;
    for (auto group : groups) {
        out << '\n' << category_name(group) << " motifs\n";
        std::uint64_t subtotal = 0;
        for (const MotifSignature& sig : all_signatures()) {
            if (sig.category() != group) continue;
            std::uint64_t c = census.count(sig);
            checked_increment(subtotal, c);
            out << "  " << sig.str() << "  " << std::setw(10) << std::left
                << label_for_signature(sig) << std::right << std::setw(14) << c << '\n';
        }
        out << "  subtotal" << std::setw(28) << subtotal << '\n';
        checked_increment(grand_total, subtotal);
    }
    out << "\ntotal" << std::setw(33) << grand_total << '\n';
    out << "\ntimings (ms): ingest " << report.timings.ingest_ms << ", index "
        << report.timings.index_ms << ", star-pair " << report.timings.star_pair_ms
        << ", triangle " << report.timings.triangle_ms << ", merge "
        << report.timings.merge_ms << '\n';
}

}  // namespace

void write_census(std::ostream& out, const CensusReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv: write_csv(out, report.census); break;
        case OutputFormat::json: write_json(out, report); break;
        case OutputFormat::table: write_table(out, report); break;
    }
}

CensusDiff diff_censuses(const MotifCensus& lhs, const MotifCensus& rhs) {
    CensusDiff diff;
    for (const MotifSignature& sig : all_signatures()) {
        std::uint64_t a = lhs.count(sig);
        std::uint64_t b = rhs.count(sig);
        if (a == b) {
            ++diff.matching;
        } else {
            diff.mismatches.push_back({sig, a, b});
        }
    }
    return diff;
}

void write_diff(std::ostream& out, const CensusDiff& diff, const std::string& lhs_name,
                const std::string& rhs_name) {
    for (const auto& m : diff.mismatches) {
        out << m.signature.str() << " (" << label_for_signature(m.signature)
            << "): " << lhs_name << "=" << m.lhs << " " << rhs_name << "=" << m.rhs
            << '\n';
    }
    out << diff.matching << "/36 match\n";
}

}  // namespace tmotif
