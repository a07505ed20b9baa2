#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "renlib/chromatic.hpp"
#include "renlib/enumerate.hpp"
#include "renlib/graph.hpp"
#include "renlib/graph6.hpp"
#include "renlib/jcolour.hpp"
#include "renlib/parallel.hpp"
#include "renlib/ren.hpp"

namespace renlib {

/// Chromatic degrees under the canonical colouring, sorted non-increasing.
inline std::vector<int> chromatic_degree_sequence(const Graph& g) {
    auto profile = chromatic_profile(g, chi_minus_colouring(g));
    std::vector<int> seq = profile.d_chi;
    std::sort(seq.begin(), seq.end(), std::greater<int>());
    return seq;
}

enum class Realisation {
    canonical,    // the canonical colouring must produce the sequence
    any_optimum,  // any chi-colouring may
};

/// First graph (canonical enumeration order) whose chromatic degree sequence
/// matches, or nothing. Guarded to sequences of length 1..6.
inline std::optional<Graph> is_chromatically_graphic(const std::vector<int>& seq, bool connected_only,
                                                     Realisation mode = Realisation::canonical) {
    int n = static_cast<int>(seq.size());
    if (n < 1 || n > 6)
        throw GuardError("realisability search is guarded to lengths 1..6, got " + std::to_string(n));
    std::vector<int> want = seq;
    std::sort(want.begin(), want.end(), std::greater<int>());
    for (const Graph& g : enumerate_graphs(n, connected_only)) {
        if (mode == Realisation::canonical) {
            if (chromatic_degree_sequence(g) == want) return g;
            continue;
        }
        for (const Colouring& c : all_chi_colourings(g)) {
            std::vector<int> got = chromatic_profile(g, c).d_chi;
            std::sort(got.begin(), got.end(), std::greater<int>());
            if (got == want) return g;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Survey
// ---------------------------------------------------------------------------

struct SurveyRow {
    std::string key;  // canonical form while it fits, otherwise the graph6 line
    int n = 0;
    int edges = 0;
    int chi = 0;
    std::optional<int> j;
    int ren = 0;
    int r_chi = 0;
    int delta_chi = 0;
    int Delta_chi = 0;
    int diameter = 0;
    bool chromatic_null = false;
    std::string error;  // non-empty when a guard stopped this row
};

struct SurveySummary {
    int rows = 0;
    std::map<std::pair<int, int>, int> joint_ren_rchi;
    // J-colourable graphs whose canonical colouring is not rainbow-uniform;
    // recorded as findings, never asserted.
    std::vector<std::string> findings;
};

struct Survey {
    int n = 0;
    bool connected_only = false;
    std::vector<SurveyRow> rows;
    SurveySummary summary;
};

inline SurveyRow survey_row(const Graph& g, std::string key) {
    SurveyRow row;
    row.key = std::move(key);
    row.n = g.n;
    row.edges = g.edge_count();
    try {
        row.chi = chromatic_number(g);
        auto profile = chromatic_profile(g, chi_minus_colouring(g));
        row.r_chi = profile.r_chi;
        row.delta_chi = profile.delta_chi;
        row.Delta_chi = profile.Delta_chi;
        row.diameter = profile.diameter;
        row.chromatic_null = profile.chromatic_null;
        if (auto w = j_number(g)) row.j = w->k;
        row.ren = ren_exact(g).ren;
    } catch (const GuardError& e) {
        row.error = e.what();
    }
    return row;
}

inline std::string survey_key(const Graph& g) {
    return g.n <= canonical_max_order ? canonical_form(g) : write_graph6(g);
}

inline Survey survey_rows(const std::vector<Graph>& graphs, int jobs) {
    Survey s;
    s.rows.resize(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        s.rows[i] = survey_row(graphs[i], survey_key(graphs[i]));
    });
    std::stable_sort(s.rows.begin(), s.rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.key < b.key;
    });
    for (const SurveyRow& row : s.rows) {
        ++s.summary.rows;
        if (!row.error.empty()) continue;
        ++s.summary.joint_ren_rchi[{row.ren, row.r_chi}];
        if (row.ren == 0 && !row.chromatic_null) s.summary.findings.push_back(row.key);
    }
    return s;
}

/// One row per isomorphism class of order n, sorted by canonical form, plus
/// the joint (ren, r_chi) distribution. Built-in enumeration covers n <= 6;
/// larger orders stream from external graph6 files through survey_rows.
inline Survey survey(int n, bool connected_only, int jobs = 1) {
    Survey s = survey_rows(enumerate_graphs(n, connected_only), jobs);
    s.n = n;
    s.connected_only = connected_only;
    return s;
}

}  // namespace renlib
