// Copyright 2026 scmatch Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scmatch/mwpm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scmatch {

namespace {

constexpr int kNone = -1;

// Maximum-weight matching on a dense graph, O(n^3). Primal-dual blossom
// method (Edmonds; Galil's survey formulation). Vertices are 0..n-1;
// non-trivial blossoms get ids >= n, recycled through a free list. Run in
// max-cardinality mode: the result is a maximum-cardinality matching of
// maximum weight, which on a complete even graph means a perfect matching.
class BlossomMatcher {
  public:
    explicit BlossomMatcher(const SymMatrix& w) : w_(w), nv_(w.size()) {
        const int cap = 2 * nv_;  // at most nv/2 live blossoms at a time
        maxweight_ = 0.0;
        for (int i = 0; i < nv_; ++i)
            for (int j = i + 1; j < nv_; ++j)
                maxweight_ = std::max(maxweight_, w_.at(i, j));

        mate_.assign(nv_, kNone);
        label_.assign(cap, 0);
        labeledge_.assign(cap, {kNone, kNone});
        inblossom_.resize(nv_);
        for (int v = 0; v < nv_; ++v)
            inblossom_[v] = v;
        parent_.assign(cap, kNone);
        base_.assign(cap, kNone);
        for (int v = 0; v < nv_; ++v)
            base_[v] = v;
        dualvar_.assign(nv_, maxweight_);
        blossomdual_.assign(cap, 0.0);
        live_.assign(cap, 0);
        childs_.assign(cap, {});
        edges_.assign(cap, {});
        bestedge_.assign(cap, {kNone, kNone});
        mybestedges_.assign(cap, {});
        mybestedges_valid_.assign(cap, 0);
        allowedge_.assign(static_cast<size_t>(nv_) * nv_, 0);
        for (int b = cap - 1; b >= nv_; --b)
            free_ids_.push_back(b);
    }

    std::vector<int32_t> solve() {
        while (true) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(labeledge_.begin(), labeledge_.end(), Edge{kNone, kNone});
            std::fill(bestedge_.begin(), bestedge_.end(), Edge{kNone, kNone});
            for (int b = nv_; b < 2 * nv_; ++b)
                mybestedges_valid_[b] = 0;
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();

            for (int v = 0; v < nv_; ++v)
                if (mate_[v] == kNone && label_[inblossom_[v]] == 0)
                    assign_label(v, 1, kNone);

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    assert(label_[inblossom_[v]] == 1);

                    for (int w = 0; w < nv_; ++w) {
                        if (w == v)
                            continue;
                        int bv = inblossom_[v];
                        int bw = inblossom_[w];
                        if (bv == bw)
                            continue;
                        double kslack = 0.0;
                        if (!allowed(v, w)) {
                            kslack = slack(v, w);
                            if (kslack <= 0)
                                set_allowed(v, w);
                        }
                        if (allowed(v, w)) {
                            if (label_[bw] == 0) {
                                assign_label(w, 2, v);
                            } else if (label_[bw] == 1) {
                                int base = scan_blossom(v, w);
                                if (base != kNone) {
                                    add_blossom(base, v, w);
                                } else {
                                    augment_matching(v, w);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                assert(label_[bw] == 2);
                                label_[w] = 2;
                                labeledge_[w] = {v, w};
                            }
                        } else if (label_[bw] == 1) {
                            if (bestedge_[bv][0] == kNone ||
                                kslack < slack(bestedge_[bv][0], bestedge_[bv][1]))
                                bestedge_[bv] = {v, w};
                        } else if (label_[w] == 0) {
                            if (bestedge_[w][0] == kNone ||
                                kslack < slack(bestedge_[w][0], bestedge_[w][1]))
                                bestedge_[w] = {v, w};
                        }
                    }
                }
                if (augmented)
                    break;

                // No augmenting path: pump slack out of the duals.
                int deltatype = -1;
                double delta = 0.0;
                Edge deltaedge{kNone, kNone};
                int deltablossom = kNone;

                for (int v = 0; v < nv_; ++v) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v][0] != kNone) {
                        double d = slack(bestedge_[v][0], bestedge_[v][1]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; ++b) {
                    if (!is_entity(b) || parent_[b] != kNone || label_[b] != 1 ||
                        bestedge_[b][0] == kNone)
                        continue;
                    double d = slack(bestedge_[b][0], bestedge_[b][1]) / 2.0;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[b];
                    }
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (live_[b] && parent_[b] == kNone && label_[b] == 2 &&
                        (deltatype == -1 || blossomdual_[b] < delta)) {
                        delta = blossomdual_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // Max-cardinality optimum reached.
                    deltatype = 1;
                    double m = *std::min_element(dualvar_.begin(), dualvar_.end());
                    delta = std::max(0.0, m);
                }

                for (int v = 0; v < nv_; ++v) {
                    int l = label_[inblossom_[v]];
                    if (l == 1)
                        dualvar_[v] -= delta;
                    else if (l == 2)
                        dualvar_[v] += delta;
                }
                for (int b = nv_; b < 2 * nv_; ++b) {
                    if (live_[b] && parent_[b] == kNone) {
                        if (label_[b] == 1)
                            blossomdual_[b] += delta;
                        else if (label_[b] == 2)
                            blossomdual_[b] -= delta;
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    assert(label_[inblossom_[deltaedge[0]]] == 1);
                    set_allowed(deltaedge[0], deltaedge[1]);
                    queue_.push_back(deltaedge[0]);
                } else if (deltatype == 3) {
                    set_allowed(deltaedge[0], deltaedge[1]);
                    assert(label_[inblossom_[deltaedge[0]]] == 1);
                    queue_.push_back(deltaedge[0]);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }

            if (!augmented)
                break;

            // End of stage: expand S-blossoms whose dual dropped to zero.
            for (int b = nv_; b < 2 * nv_; ++b)
                if (live_[b] && parent_[b] == kNone && label_[b] == 1 && blossomdual_[b] == 0.0)
                    expand_blossom(b, true);
        }

        std::vector<int32_t> mates(nv_);
        for (int v = 0; v < nv_; ++v)
            mates[v] = mate_[v];
        return mates;
    }

  private:
    using Edge = std::array<int, 2>;

    bool is_entity(int b) const { return b < nv_ || live_[b]; }

    bool allowed(int v, int w) const {
        return allowedge_[static_cast<size_t>(v) * nv_ + w] != 0;
    }
    void set_allowed(int v, int w) {
        allowedge_[static_cast<size_t>(v) * nv_ + w] = 1;
        allowedge_[static_cast<size_t>(w) * nv_ + v] = 1;
    }

    // 2x the slack of edge (v, w); duals are pre-doubled.
    double slack(int v, int w) const { return dualvar_[v] + dualvar_[w] - 2.0 * w_.at(v, w); }

    void leaves_of(int b, std::vector<int>& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : childs_[b])
            leaves_of(t, out);
    }

    void assign_label(int w, int t, int v) {
        int b = inblossom_[w];
        assert(label_[w] == 0 && label_[b] == 0);
        label_[w] = label_[b] = t;
        if (v != kNone) {
            labeledge_[w] = {v, w};
            labeledge_[b] = {v, w};
        } else {
            labeledge_[w] = {kNone, kNone};
            labeledge_[b] = {kNone, kNone};
        }
        bestedge_[w] = {kNone, kNone};
        bestedge_[b] = {kNone, kNone};
        if (t == 1) {
            if (b >= nv_) {
                std::vector<int> leaves;
                leaves_of(b, leaves);
                for (int leaf : leaves)
                    queue_.push_back(leaf);
            } else {
                queue_.push_back(b);
            }
        } else {
            int base = base_[b];
            assert(mate_[base] != kNone);
            assign_label(mate_[base], 1, base);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = kNone;
        while (v != kNone) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = base_[b];
                break;
            }
            assert(label_[b] == 1);
            path.push_back(b);
            label_[b] = 5;
            if (labeledge_[b][0] == kNone) {
                assert(mate_[base_[b]] == kNone);
                v = kNone;
            } else {
                assert(labeledge_[b][0] == mate_[base_[b]]);
                v = labeledge_[b][0];
                b = inblossom_[v];
                assert(label_[b] == 2);
                v = labeledge_[b][0];
            }
            if (w != kNone)
                std::swap(v, w);
        }
        for (int b : path)
            label_[b] = 1;
        return base;
    }

    void add_blossom(int base, int v, int w) {
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];

        int b = free_ids_.back();
        free_ids_.pop_back();
        live_[b] = 1;
        base_[b] = base;
        parent_[b] = kNone;
        parent_[bb] = b;

        std::vector<int>& path = childs_[b];
        std::vector<Edge>& edgs = edges_[b];
        path.clear();
        edgs.clear();
        edgs.push_back({v, w});
        while (bv != bb) {
            parent_[bv] = b;
            path.push_back(bv);
            edgs.push_back(labeledge_[bv]);
            assert(label_[bv] == 2 ||
                   (label_[bv] == 1 && labeledge_[bv][0] == mate_[base_[bv]]));
            v = labeledge_[bv][0];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(edgs.begin(), edgs.end());
        while (bw != bb) {
            parent_[bw] = b;
            path.push_back(bw);
            edgs.push_back({labeledge_[bw][1], labeledge_[bw][0]});
            assert(label_[bw] == 2 ||
                   (label_[bw] == 1 && labeledge_[bw][0] == mate_[base_[bw]]));
            w = labeledge_[bw][0];
            bw = inblossom_[w];
        }

        assert(label_[bb] == 1);
        label_[b] = 1;
        labeledge_[b] = labeledge_[bb];
        blossomdual_[b] = 0.0;
        std::vector<int> leaves;
        leaves_of(b, leaves);
        for (int leaf : leaves) {
            if (label_[inblossom_[leaf]] == 2)
                queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }

        // Compute the blossom's least-slack edges to neighboring S-blossoms.
        std::vector<Edge> bestedgeto(2 * nv_, Edge{kNone, kNone});
        for (int bc : path) {
            std::vector<Edge> nblist;
            if (bc >= nv_ && mybestedges_valid_[bc]) {
                nblist = std::move(mybestedges_[bc]);
                mybestedges_valid_[bc] = 0;
                mybestedges_[bc].clear();
            } else {
                std::vector<int> sub_leaves;
                leaves_of(bc, sub_leaves);
                for (int lv : sub_leaves)
                    for (int nb = 0; nb < nv_; ++nb)
                        if (nb != lv)
                            nblist.push_back({lv, nb});
            }
            for (const Edge& k : nblist) {
                int i = k[0], j = k[1];
                if (inblossom_[j] == b)
                    std::swap(i, j);
                int bj = inblossom_[j];
                if (bj != b && label_[bj] == 1 &&
                    (bestedgeto[bj][0] == kNone ||
                     slack(i, j) < slack(bestedgeto[bj][0], bestedgeto[bj][1])))
                    bestedgeto[bj] = {i, j};
            }
            bestedge_[bc] = {kNone, kNone};
        }
        mybestedges_[b].clear();
        for (const Edge& e : bestedgeto)
            if (e[0] != kNone)
                mybestedges_[b].push_back(e);
        mybestedges_valid_[b] = 1;

        bestedge_[b] = {kNone, kNone};
        double beslack = 0.0;
        for (const Edge& k : mybestedges_[b]) {
            double kslack = slack(k[0], k[1]);
            if (bestedge_[b][0] == kNone || kslack < beslack) {
                bestedge_[b] = k;
                beslack = kslack;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        // Recursion depth is bounded by blossom nesting, fine at our sizes.
        for (int s : childs_[b]) {
            parent_[s] = kNone;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && blossomdual_[s] == 0.0) {
                expand_blossom(s, endstage);
            } else {
                std::vector<int> leaves;
                leaves_of(s, leaves);
                for (int lv : leaves)
                    inblossom_[lv] = s;
            }
        }

        if (!endstage && label_[b] == 2) {
            int entrychild = inblossom_[labeledge_[b][1]];
            int m = static_cast<int>(childs_[b].size());
            int j = 0;
            for (int i = 0; i < m; ++i)
                if (childs_[b][i] == entrychild) {
                    j = i;
                    break;
                }
            int jstep;
            if (j & 1) {
                j -= m;
                jstep = 1;
            } else {
                jstep = -1;
            }
            auto child_at = [&](int idx) { return childs_[b][(idx % m + m) % m]; };
            auto edge_at = [&](int idx) { return edges_[b][(idx % m + m) % m]; };

            int v = labeledge_[b][0];
            int w = labeledge_[b][1];
            while (j != 0) {
                int p, q;
                if (jstep == 1) {
                    p = edge_at(j)[0];
                    q = edge_at(j)[1];
                } else {
                    q = edge_at(j - 1)[0];
                    p = edge_at(j - 1)[1];
                }
                label_[w] = 0;
                label_[q] = 0;
                assign_label(w, 2, v);
                set_allowed(p, q);
                j += jstep;
                if (jstep == 1) {
                    v = edge_at(j)[0];
                    w = edge_at(j)[1];
                } else {
                    w = edge_at(j - 1)[0];
                    v = edge_at(j - 1)[1];
                }
                set_allowed(v, w);
                j += jstep;
            }
            int bw = child_at(j);
            label_[w] = 2;
            label_[bw] = 2;
            labeledge_[w] = {v, w};
            labeledge_[bw] = {v, w};
            bestedge_[bw] = {kNone, kNone};
            j += jstep;
            while (child_at(j) != entrychild) {
                int bv = child_at(j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int reached = kNone;
                if (bv >= nv_) {
                    std::vector<int> leaves;
                    leaves_of(bv, leaves);
                    for (int lv : leaves)
                        if (label_[lv] != 0) {
                            reached = lv;
                            break;
                        }
                } else if (label_[bv] != 0) {
                    reached = bv;
                }
                if (reached != kNone) {
                    assert(label_[reached] == 2);
                    assert(inblossom_[reached] == bv);
                    label_[reached] = 0;
                    label_[mate_[base_[bv]]] = 0;
                    assign_label(reached, 2, labeledge_[reached][0]);
                }
                j += jstep;
            }
        }

        label_[b] = 0;
        labeledge_[b] = {kNone, kNone};
        bestedge_[b] = {kNone, kNone};
        parent_[b] = kNone;
        base_[b] = kNone;
        blossomdual_[b] = 0.0;
        live_[b] = 0;
        childs_[b].clear();
        edges_[b].clear();
        mybestedges_[b].clear();
        mybestedges_valid_[b] = 0;
        free_ids_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (parent_[t] != b)
            t = parent_[t];
        if (t >= nv_)
            augment_blossom(t, v);

        int m = static_cast<int>(childs_[b].size());
        int i = 0;
        for (int idx = 0; idx < m; ++idx)
            if (childs_[b][idx] == t) {
                i = idx;
                break;
            }
        int j = i;
        int jstep;
        if (i & 1) {
            j -= m;
            jstep = 1;
        } else {
            jstep = -1;
        }
        auto child_at = [&](int idx) { return childs_[b][(idx % m + m) % m]; };
        auto edge_at = [&](int idx) { return edges_[b][(idx % m + m) % m]; };

        while (j != 0) {
            j += jstep;
            t = child_at(j);
            int w, x;
            if (jstep == 1) {
                w = edge_at(j)[0];
                x = edge_at(j)[1];
            } else {
                x = edge_at(j - 1)[0];
                w = edge_at(j - 1)[1];
            }
            if (t >= nv_)
                augment_blossom(t, w);
            j += jstep;
            t = child_at(j);
            if (t >= nv_)
                augment_blossom(t, x);
            mate_[w] = x;
            mate_[x] = w;
        }
        std::rotate(childs_[b].begin(), childs_[b].begin() + i, childs_[b].end());
        std::rotate(edges_[b].begin(), edges_[b].begin() + i, edges_[b].end());
        base_[b] = base_[childs_[b][0]];
        assert(base_[b] == v);
    }

    void augment_matching(int v, int w) {
        const Edge starts[2] = {{v, w}, {w, v}};
        for (const Edge& start : starts) {
            int s = start[0];
            int j = start[1];
            while (true) {
                int bs = inblossom_[s];
                assert(label_[bs] == 1);
                assert((labeledge_[bs][0] == kNone && mate_[base_[bs]] == kNone) ||
                       labeledge_[bs][0] == mate_[base_[bs]]);
                if (bs >= nv_)
                    augment_blossom(bs, s);
                mate_[s] = j;
                if (labeledge_[bs][0] == kNone)
                    break;
                int t = labeledge_[bs][0];
                int bt = inblossom_[t];
                assert(label_[bt] == 2);
                s = labeledge_[bt][0];
                j = labeledge_[bt][1];
                assert(base_[bt] == t);
                if (bt >= nv_)
                    augment_blossom(bt, j);
                mate_[j] = s;
            }
        }
    }

    const SymMatrix& w_;
    int nv_;
    double maxweight_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<Edge> labeledge_;
    std::vector<int> inblossom_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<double> dualvar_;
    std::vector<double> blossomdual_;
    std::vector<uint8_t> live_;
    std::vector<std::vector<int>> childs_;
    std::vector<std::vector<Edge>> edges_;
    std::vector<Edge> bestedge_;
    std::vector<std::vector<Edge>> mybestedges_;
    std::vector<uint8_t> mybestedges_valid_;
    std::vector<uint8_t> allowedge_;
    std::vector<int> queue_;
    std::vector<int> free_ids_;
};

}  // namespace

std::vector<int32_t> mwpm(const SymMatrix& weights) {
    const int n = weights.size();
    if (n % 2 != 0)
        throw std::invalid_argument("mwpm: node count must be even");
    if (n == 0)
        return {};

    double maxw = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!std::isfinite(weights.at(i, j)))
                throw std::invalid_argument("mwpm: weights must be finite");
            maxw = std::max(maxw, weights.at(i, j));
        }

    // Minimize by maximizing the complement; max-cardinality semantics force
    // a perfect matching on a complete even graph.
    SymMatrix flipped(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            flipped.set(i, j, maxw - weights.at(i, j));

    BlossomMatcher matcher(flipped);
    std::vector<int32_t> mates = matcher.solve();
    for (int v = 0; v < n; ++v)
        if (mates[v] < 0 || mates[mates[v]] != v)
            throw std::logic_error("mwpm: matching is not perfect");
    return mates;
}

double matching_weight(const SymMatrix& weights, const std::vector<int32_t>& mates) {
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(mates.size()); ++i)
        if (mates[i] > i)
            total += weights.at(i, mates[i]);
    return total;
}

namespace {

void brute_force_rec(const SymMatrix& w, std::vector<int32_t>& mates, uint32_t used,
                     double acc, double& best, std::vector<int32_t>& best_mates) {
    const int n = w.size();
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (!(used & (1u << i))) {
            first = i;
            break;
        }
    if (first < 0) {
        if (acc < best) {
            best = acc;
            best_mates = mates;
        }
        return;
    }
    for (int j = first + 1; j < n; ++j) {
        if (used & (1u << j))
            continue;
        mates[first] = j;
        mates[j] = first;
        brute_force_rec(w, mates, used | (1u << first) | (1u << j), acc + w.at(first, j), best,
                        best_mates);
    }
}

}  // namespace

std::vector<int32_t> brute_force_mwpm(const SymMatrix& weights) {
    const int n = weights.size();
    if (n % 2 != 0)
        throw std::invalid_argument("brute_force_mwpm: node count must be even");
    if (n > 12)
        throw std::invalid_argument("brute_force_mwpm: limited to 12 nodes");
    if (n == 0)
        return {};

    std::vector<int32_t> mates(n, -1), best_mates(n, -1);
    double best = std::numeric_limits<double>::infinity();
    brute_force_rec(weights, mates, 0, 0.0, best, best_mates);
    return best_mates;
}

}  // namespace scmatch
