#ifndef NOTEWORTH_METRICS_HPP
#define NOTEWORTH_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "noteworth/common.hpp"

namespace noteworth::metrics {

// Parallel score/label lists for a binary classification run.
struct ScoredSet {
    std::vector<double> scores;
    std::vector<int> labels; // 0/1

    void add(double score, int label) {
        scores.push_back(score);
        labels.push_back(label);
    }

    std::size_t size() const { return scores.size(); }

    std::size_t positives() const {
        return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
    }

    double positive_fraction() const {
        if (labels.empty()) return 0.0;
        return static_cast<double>(positives()) / static_cast<double>(labels.size());
    }

    void validate() const {
        if (scores.size() != labels.size())
            throw std::invalid_argument("ScoredSet: scores and labels differ in length");
        for (double s : scores)
            if (!std::isfinite(s)) throw std::invalid_argument("ScoredSet: non-finite score");
        for (int l : labels)
            if (l != 0 && l != 1) throw std::invalid_argument("ScoredSet: label not in {0,1}");
    }
};

namespace detail {

// Indices sorted by descending score; equal scores keep input order.
inline std::vector<std::size_t> order_by_score_desc(const ScoredSet& s) {
    std::vector<std::size_t> idx(s.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return s.scores[a] > s.scores[b]; });
    return idx;
}

} // namespace detail

// Average precision: step-wise sum of (R_i - R_{i-1}) * P_i over a
// descending-score sweep, with tied scores processed as one block.
inline double pr_auc(const ScoredSet& s) {
    s.validate();
    const std::size_t total_pos = s.positives();
    if (total_pos == 0) throw std::invalid_argument("pr_auc: no positive labels");

    auto idx = detail::order_by_score_desc(s);
    double ap = 0.0;
    std::size_t tp = 0, fp = 0;
    double prev_recall = 0.0;
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        while (j < idx.size() && s.scores[idx[j]] == s.scores[idx[i]]) {
            if (s.labels[idx[j]] == 1)
                ++tp;
            else
                ++fp;
            ++j;
        }
        double recall = static_cast<double>(tp) / static_cast<double>(total_pos);
        double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        ap += (recall - prev_recall) * precision;
        prev_recall = recall;
        i = j;
    }
    return ap;
}

// Mann-Whitney statistic: P(score_pos > score_neg) + 0.5 * P(tie).
inline double roc_auc(const ScoredSet& s) {
    s.validate();
    const std::size_t total_pos = s.positives();
    const std::size_t total_neg = s.size() - total_pos;
    if (total_pos == 0 || total_neg == 0)
        throw std::invalid_argument("roc_auc: needs at least one positive and one negative");

    auto idx = detail::order_by_score_desc(s);
    // Sweep ascending so each positive sees the count of strictly lower
    // negatives; integer counts keep this exactly equal to pair enumeration.
    std::reverse(idx.begin(), idx.end());
    double wins = 0.0, ties = 0.0;
    std::size_t neg_below = 0;
    std::size_t i = 0;
    while (i < idx.size()) {
        std::size_t j = i;
        std::size_t block_pos = 0, block_neg = 0;
        while (j < idx.size() && s.scores[idx[j]] == s.scores[idx[i]]) {
            if (s.labels[idx[j]] == 1)
                ++block_pos;
            else
                ++block_neg;
            ++j;
        }
        wins += static_cast<double>(block_pos) * static_cast<double>(neg_below);
        ties += static_cast<double>(block_pos) * static_cast<double>(block_neg);
        neg_below += block_neg;
        i = j;
    }
    return (wins + 0.5 * ties) /
           (static_cast<double>(total_pos) * static_cast<double>(total_neg));
}

// Fraction of positives among the top m = max(1, floor(n*k/100)) scored
// items; ties resolved by stable input order.
inline double precision_at(const ScoredSet& s, double k_percent) {
    s.validate();
    if (!(k_percent > 0.0 && k_percent <= 100.0))
        throw std::invalid_argument("precision_at: k_percent must be in (0, 100]");
    if (s.size() == 0) throw std::invalid_argument("precision_at: empty set");

    std::size_t m = static_cast<std::size_t>(
        std::floor(static_cast<double>(s.size()) * k_percent / 100.0));
    if (m < 1) m = 1;
    auto idx = detail::order_by_score_desc(s);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (s.labels[idx[i]] == 1) ++hits;
    return static_cast<double>(hits) / static_cast<double>(m);
}

} // namespace noteworth::metrics

#endif
