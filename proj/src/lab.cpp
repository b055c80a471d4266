#include "qdeform/lab.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

namespace qdeform {

namespace {

const char* check_name(TraceCheck c) {
    switch (c) {
        case TraceCheck::Palindrome: return "palindrome";
        case TraceCheck::Positive: return "positive";
        case TraceCheck::Unimodal: return "unimodal";
        case TraceCheck::ReversalEquality: return "reversal-equality";
    }
    return "?";
}

std::string word_text(const std::vector<std::int64_t>& w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

// Word at a given index of the lexicographic enumeration by (k, c_1..c_k).
std::vector<std::int64_t> unrank(std::uint64_t index, const ScanSpec& spec) {
    const std::uint64_t width = static_cast<std::uint64_t>(spec.c_max - spec.c_min + 1);
    int k = spec.k_min;
    std::uint64_t block = 1;
    for (int i = 0; i < k; ++i) block *= width;
    while (index >= block) {
        index -= block;
        block *= width;
        ++k;
    }
    std::vector<std::int64_t> w(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = spec.c_min + static_cast<std::int64_t>(index % width);
        index /= width;
    }
    return w;
}

bool positivity_gate(const std::vector<std::int64_t>& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < 2) return false;
    return w.back() >= 1;
}

}  // namespace

std::uint64_t ScanSpec::total_words() const {
    if (k_min < 1 || k_max < k_min || c_max < c_min)
        throw std::invalid_argument("scan: empty range");
    const std::uint64_t width = static_cast<std::uint64_t>(c_max - c_min + 1);
    std::uint64_t total = 0, block = 1;
    for (int k = 1; k <= k_max; ++k) {
        // block only grows, so exceeding the cap here settles the question.
        if (block > cap / width)
            throw std::invalid_argument("scan: enumeration cap exceeded");
        block *= width;
        if (k >= k_min) {
            total += block;
            if (total > cap)
                throw std::invalid_argument("scan: enumeration cap exceeded");
        }
    }
    return total;
}

ScanReport scan_traces(const ScanSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    ScanReport report;
    report.spec = spec;

    std::vector<std::vector<std::int64_t>> sampled;
    std::uint64_t total;
    if (spec.sample_count) {
        total = *spec.sample_count;
        if (total > spec.cap) throw std::invalid_argument("scan: enumeration cap exceeded");
        std::mt19937_64 rng(spec.seed);
        std::uniform_int_distribution<int> klen(spec.k_min, spec.k_max);
        std::uniform_int_distribution<std::int64_t> cdist(spec.c_min, spec.c_max);
        sampled.reserve(total);
        for (std::uint64_t i = 0; i < total; ++i) {
            std::vector<std::int64_t> w(static_cast<std::size_t>(klen(rng)));
            for (auto& c : w) c = cdist(rng);
            sampled.push_back(std::move(w));
        }
    } else {
        total = spec.total_words();
    }

    unsigned threads = spec.threads ? spec.threads : std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

    struct Bucket {
        std::vector<ScanFinding> theorem, conjecture, zero_gap;
    };
    std::vector<Bucket> buckets(threads);

    auto run_chunk = [&](unsigned who, std::uint64_t begin, std::uint64_t end) {
        Bucket& out = buckets[who];
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const std::vector<std::int64_t> w =
                spec.sample_count ? sampled[idx] : unrank(idx, spec);
            const LaurentPoly tr = m_neg_word(w).trace();
            if (spec.checks.count(TraceCheck::Palindrome) && !tr.is_palindrome())
                out.theorem.push_back({idx, w, TraceCheck::Palindrome, tr});
            if (spec.checks.count(TraceCheck::Positive) &&
                spec.hypothesis == ScanHypothesis::InteriorAtLeast2 && positivity_gate(w) &&
                !tr.has_nonneg_coeffs())
                out.theorem.push_back({idx, w, TraceCheck::Positive, tr});
            if (spec.checks.count(TraceCheck::ReversalEquality)) {
                std::vector<std::int64_t> rev(w.rbegin(), w.rend());
                if (m_neg_word(rev).trace() != tr)
                    out.theorem.push_back({idx, w, TraceCheck::ReversalEquality, tr});
            }
            if (spec.checks.count(TraceCheck::Unimodal)) {
                if (tr.has_interior_zero())
                    out.zero_gap.push_back({idx, w, TraceCheck::Unimodal, tr});
                else if (!tr.is_unimodal())
                    out.conjecture.push_back({idx, w, TraceCheck::Unimodal, tr});
            }
        }
    };

    if (threads == 1) {
        run_chunk(0, 0, total);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::uint64_t b = t * chunk;
            const std::uint64_t e = std::min<std::uint64_t>(b + chunk, total);
            if (b >= e) break;
            pool.emplace_back(run_chunk, t, b, e);
        }
        for (auto& th : pool) th.join();
    }

    for (auto& b : buckets) {
        auto move_all = [](std::vector<ScanFinding>& dst, std::vector<ScanFinding>& src) {
            dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                       std::make_move_iterator(src.end()));
        };
        move_all(report.theorem_violations, b.theorem);
        move_all(report.conjecture_counterexamples, b.conjecture);
        move_all(report.zero_gap_cases, b.zero_gap);
    }
    report.words_checked = total;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

namespace {

void findings_text(std::ostream& os, const char* label,
                   const std::vector<ScanFinding>& v) {
    os << label << ": " << v.size() << "\n";
    for (const auto& f : v)
        os << "  " << word_text(f.word) << " " << check_name(f.check) << " "
           << f.trace.str_compact() << "\n";
}

nlohmann::json findings_json(const std::vector<ScanFinding>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : v)
        arr.push_back({{"index", f.index},
                       {"word", f.word},
                       {"check", check_name(f.check)},
                       {"trace", f.trace.str_compact()}});
    return arr;
}

}  // namespace

std::string ScanReport::to_text() const {
    std::ostringstream os;
    os << "scan k=" << spec.k_min << ".." << spec.k_max << " c=" << spec.c_min << ".."
       << spec.c_max << (spec.sample_count ? " sampled" : " exhaustive");
    if (spec.sample_count) os << " seed=" << spec.seed;
    os << "\nwords checked: " << words_checked << "\n";
    findings_text(os, "theorem violations", theorem_violations);
    findings_text(os, "unimodality counterexamples", conjecture_counterexamples);
    findings_text(os, "interior-zero traces (reported separately)", zero_gap_cases);
    os << "elapsed: " << elapsed_seconds << "s\n";
    return os.str();
}

std::string ScanReport::to_json() const {
    nlohmann::json j;
    j["spec"] = {{"k_min", spec.k_min},
                 {"k_max", spec.k_max},
                 {"c_min", spec.c_min},
                 {"c_max", spec.c_max},
                 {"hypothesis", spec.hypothesis == ScanHypothesis::InteriorAtLeast2
                                    ? "interior>=2"
                                    : "all"},
                 {"sampled", spec.sample_count.has_value()},
                 {"seed", spec.seed}};
    j["words_checked"] = words_checked;
    j["theorem_violations"] = findings_json(theorem_violations);
    j["unimodality_counterexamples"] = findings_json(conjecture_counterexamples);
    j["interior_zero_traces"] = findings_json(zero_gap_cases);
    j["elapsed_seconds"] = elapsed_seconds;
    return j.dump(2);
}

QMat2 cohn_matrix(const std::vector<CohnLetter>& word) {
    if (word.empty()) throw std::invalid_argument("cohn_matrix: empty word");
    static const std::vector<std::int64_t> wa = {2, 2, 1, 1};
    static const std::vector<std::int64_t> wb = {3, 2, 2, 1, 1};
    const QMat2 A = m_neg_word(wa).scaled_by_unit({-1, 0});
    const QMat2 B = m_neg_word(wb).scaled_by_unit({-1, 0});
    QMat2 m = QMat2::identity();
    for (CohnLetter l : word) m = m * (l == CohnLetter::A ? A : B);
    return m;
}

std::vector<CohnLetter> parse_cohn_word(std::string_view text) {
    std::vector<CohnLetter> w;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == 'A' || c == 'a')
            w.push_back(CohnLetter::A);
        else if (c == 'B' || c == 'b')
            w.push_back(CohnLetter::B);
        else
            throw std::invalid_argument(std::string("bad Cohn letter '") + c + "'");
    }
    if (w.empty()) throw std::invalid_argument("empty Cohn word");
    return w;
}

DivisibilityReport divisibility_report(std::vector<LaurentPoly> targets,
                                       std::vector<LaurentPoly> candidates) {
    for (const auto& c : candidates)
        if (c.is_zero()) throw std::domain_error("divisibility_report: zero candidate");
    DivisibilityReport rep;
    rep.targets = std::move(targets);
    rep.candidates = std::move(candidates);
    for (std::size_t i = 0; i < rep.targets.size(); ++i)
        for (std::size_t j = 0; j < rep.candidates.size(); ++j) {
            DivisibilityRow row{i, j, exact_divide(rep.targets[i], rep.candidates[j]), false};
            row.quotient_nonneg = row.quotient && row.quotient->has_nonneg_coeffs();
            rep.rows.push_back(std::move(row));
        }
    return rep;
}

std::string DivisibilityReport::to_text() const {
    std::ostringstream os;
    for (const auto& row : rows) {
        os << "(" << targets[row.target_index].str_compact() << ") / ("
           << candidates[row.candidate_index].str_compact() << "): ";
        if (row.quotient)
            os << row.quotient->str_compact()
               << (row.quotient_nonneg ? "  [nonnegative]" : "  [mixed signs]");
        else
            os << "not divisible";
        os << "\n";
    }
    return os.str();
}

std::string DivisibilityReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r = {{"target", targets[row.target_index].str_compact()},
                            {"candidate", candidates[row.candidate_index].str_compact()},
                            {"divisible", row.quotient.has_value()}};
        if (row.quotient) {
            r["quotient"] = row.quotient->str_compact();
            r["quotient_nonnegative"] = row.quotient_nonneg;
        }
        arr.push_back(std::move(r));
    }
    return arr.dump(2);
}

}  // namespace qdeform
