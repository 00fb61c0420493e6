#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace laumon {

SparseEliminator::SparseEliminator(int columns) : columns_(columns), pivot_rows_(columns) {}

bool SparseEliminator::add_row(Row row) {
    Row scratch;
    while (!row.empty()) {
        const int lead = row.front().first;
        const Row& pivot = pivot_rows_[lead];
        if (pivot.empty()) {
            const Rational inv = 1 / row.front().second;
            for (auto& [col, value] : row) value *= inv;
            pivot_rows_[lead] = std::move(row);
            ++rank_;
            return true;
        }
        // row -= row[lead] * pivot  (pivot has leading coefficient 1)
        const Rational factor = row.front().second;
        scratch.clear();
        std::size_t a = 0, b = 0;
        while (a < row.size() || b < pivot.size()) {
            if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
                scratch.push_back(std::move(row[a++]));
            } else if (a == row.size() || pivot[b].first < row[a].first) {
                scratch.emplace_back(pivot[b].first, -factor * pivot[b].second);
                ++b;
            } else {
                Rational value = row[a].second - factor * pivot[b].second;
                if (value != 0) scratch.emplace_back(row[a].first, std::move(value));
                ++a;
                ++b;
            }
        }
        std::swap(row, scratch);
    }
    return false;
}

int hom_dim(const CoordRep& A, const CoordRep& B) {
    const int V = A.vertex_count();
    if (B.vertex_count() != V || A.arrows.size() != B.arrows.size())
        throw InputError(InputErrorKind::Other, "Hom between representations of different quivers");

    std::vector<int> offset(V + 1, 0);
    for (int v = 0; v < V; ++v) offset[v + 1] = offset[v] + B.dim(v) * A.dim(v);
    auto var = [&](int v, int y, int x) { return offset[v] + y * A.dim(v) + x; };

    SparseEliminator elim(offset[V]);
    for (std::size_t ai = 0; ai < A.arrows.size(); ++ai) {
        const auto& a = A.arrows[ai];
        const auto& b = B.arrows[ai];
        if (a.source != b.source || a.target != b.target)
            throw InputError(InputErrorKind::Other, "arrow mismatch between representations");
        const int s = a.source, t = a.target;
        std::vector<int> preimage(B.dim(t), -1);
        for (int y = 0; y < B.dim(s); ++y) {
            if (b.image[y] >= 0) preimage[b.image[y]] = y;
        }
        // (B_a phi_s)[y, x] - (phi_t A_a)[y, x] = 0
        for (int y = 0; y < B.dim(t); ++y) {
            for (int x = 0; x < A.dim(s); ++x) {
                SparseEliminator::Row row;
                if (preimage[y] >= 0) row.emplace_back(var(s, preimage[y], x), 1);
                if (a.image[x] >= 0) {
                    const int col = var(t, y, a.image[x]);
                    auto it = std::find_if(row.begin(), row.end(), [&](auto& e) { return e.first == col; });
                    if (it != row.end()) {
                        it->second -= 1;
                        if (it->second == 0) row.erase(it);
                    } else {
                        row.emplace_back(col, -1);
                    }
                }
                std::sort(row.begin(), row.end(), [](auto& l, auto& r) { return l.first < r.first; });
                if (!row.empty()) elim.add_row(std::move(row));
            }
        }
    }
    return elim.nullity();
}

int tangent_dim(const CoordRep& ambient, const CoordinateSubrep& sub) {
    if (!is_subrep(ambient, sub)) throw InputError(InputErrorKind::Other, "tangent space requested at a non-subrepresentation");
    return hom_dim(restrict_to(ambient, sub), quotient_by(ambient, sub));
}

std::int64_t candidate_space_size(const CoordRep& rep, const std::vector<int>& dims) {
    constexpr auto cap = std::numeric_limits<std::int64_t>::max();
    long double total = 1;
    for (int v = 0; v < rep.vertex_count(); ++v) {
        const int N = rep.dim(v), K = dims[v];
        if (K < 0 || K > N) return 0;
        long double c = 1;
        for (int i = 1; i <= K; ++i) c = c * (N - K + i) / i;
        total *= c;
        if (total >= static_cast<long double>(cap)) return cap;
    }
    return static_cast<std::int64_t>(total + 0.5L);
}

namespace {

class SubrepSearch {
public:
    SubrepSearch(const CoordRep& rep, const std::vector<int>& dims, EnumerationBudget budget)
        : rep_(rep), dims_(dims), budget_(budget), chosen_(rep.vertex_count()) {
        incoming_.resize(rep.vertex_count());
        for (std::size_t i = 0; i < rep.arrows.size(); ++i) incoming_[rep.arrows[i].target].push_back(static_cast<int>(i));
        outgoing_.resize(rep.vertex_count());
        for (std::size_t i = 0; i < rep.arrows.size(); ++i) outgoing_[rep.arrows[i].source].push_back(static_cast<int>(i));
    }

    std::vector<CoordinateSubrep> run() {
        for (int v = 0; v < rep_.vertex_count(); ++v) {
            if (dims_[v] < 0 || dims_[v] > rep_.dim(v)) return {};
        }
        descend(0);
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    // chosen_[v] holds basis positions (not labels), sorted
    void descend(int v) {
        if (v == rep_.vertex_count()) {
            CoordinateSubrep sub(rep_.vertex_count());
            for (int u = 0; u < rep_.vertex_count(); ++u) {
                for (int b : chosen_[u]) sub[u].push_back(rep_.labels[u][b]);
                std::sort(sub[u].begin(), sub[u].end());
            }
            results_.push_back(std::move(sub));
            return;
        }
        std::vector<char> forced(rep_.dim(v), 0);
        for (int ai : incoming_[v]) {
            const auto& a = rep_.arrows[ai];
            if (a.source >= v) continue;
            for (int b : chosen_[a.source]) {
                if (a.image[b] >= 0) forced[a.image[b]] = 1;
            }
        }
        std::vector<int> must, free;
        for (int b = 0; b < rep_.dim(v); ++b) (forced[b] ? must : free).push_back(b);
        const int extra = dims_[v] - static_cast<int>(must.size());
        if (extra < 0 || extra > static_cast<int>(free.size())) return;

        std::vector<int> pick(extra);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (++nodes_ > budget_.max_nodes)
                throw BudgetExceeded("subrepresentation search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
            auto& cur = chosen_[v];
            cur = must;
            for (int p : pick) cur.push_back(free[p]);
            std::sort(cur.begin(), cur.end());
            if (consistent(v)) descend(v + 1);
            // next combination
            int i = extra - 1;
            while (i >= 0 && pick[i] == static_cast<int>(free.size()) - extra + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
        }
        chosen_[v].clear();
    }

    // arrows out of v into already assigned vertices (including loops)
    bool consistent(int v) const {
        for (int ai : outgoing_[v]) {
            const auto& a = rep_.arrows[ai];
            if (a.target > v) continue;
            const auto& tgt = chosen_[a.target];
            for (int b : chosen_[v]) {
                if (a.image[b] < 0) continue;
                if (!std::binary_search(tgt.begin(), tgt.end(), a.image[b])) return false;
            }
        }
        return true;
    }

    const CoordRep& rep_;
    const std::vector<int>& dims_;
    EnumerationBudget budget_;
    std::vector<std::vector<int>> chosen_;
    std::vector<std::vector<int>> incoming_, outgoing_;
    std::vector<CoordinateSubrep> results_;
    std::int64_t nodes_ = 0;
};

}  // namespace

std::vector<CoordinateSubrep> enumerate_subreps(const CoordRep& rep, const std::vector<int>& dims,
                                                EnumerationBudget budget) {
    if (static_cast<int>(dims.size()) != rep.vertex_count())
        throw InputError(InputErrorKind::Other, "dimension vector has wrong length");
    return SubrepSearch(rep, dims, budget).run();
}

}  // namespace laumon
