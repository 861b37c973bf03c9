#ifndef RELGADGET_HOM_HPP
#define RELGADGET_HOM_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "relgadget/structure.hpp"

namespace relgadget {

struct HomOptions {
    bool strong = false;
    bool injective = false;
    std::map<int, int> pinned;            // partial map, source -> target
    std::optional<long long> limit;       // truncate after this many homs
};

struct HomQuery {
    Structure source;
    Structure target;
    HomOptions options;
};

struct Hom {
    std::shared_ptr<const Structure> source;
    std::shared_ptr<const Structure> target;
    Mapping map;
};

// f preserves every tuple; with strong also reflects them (bi-implication).
inline bool is_homomorphism(const Mapping& f, const Structure& m, const Structure& n,
                            bool strong = false) {
    if (static_cast<int>(f.size()) != m.size) return false;
    for (int x : f)
        if (x < 0 || x >= n.size) return false;
    for (const auto& sym : m.signature.symbols)
        for (const auto& t : m.tuples(sym.name))
            if (!n.has_tuple(sym.name, apply_map(f, t))) return false;
    if (!strong) return true;
    // reflection: every source tuple whose image lies in R^N must lie in R^M
    std::vector<std::vector<int>> pre(n.size);
    for (int i = 0; i < m.size; ++i) pre[f[i]].push_back(i);
    for (const auto& sym : m.signature.symbols) {
        for (const auto& y : n.tuples(sym.name)) {
            Tuple cur(y.size());
            std::function<bool(size_t)> rec = [&](size_t k) -> bool {
                if (k == y.size()) return m.has_tuple(sym.name, cur);
                for (int s : pre[y[k]]) {
                    cur[k] = s;
                    if (!rec(k + 1)) return false;
                }
                return true;
            };
            if (!rec(0)) return false;
        }
    }
    return true;
}

namespace detail {

struct BitDomain {
    std::vector<uint64_t> w;

    static BitDomain full(int m, int words) {
        BitDomain d;
        d.w.assign(words, 0);
        for (int x = 0; x < m; ++x) d.w[x >> 6] |= uint64_t(1) << (x & 63);
        return d;
    }
    bool test(int x) const { return (w[x >> 6] >> (x & 63)) & 1; }
    void clear(int x) { w[x >> 6] &= ~(uint64_t(1) << (x & 63)); }
    void keep_only(int x) {
        for (auto& word : w) word = 0;
        w[x >> 6] = uint64_t(1) << (x & 63);
    }
    int count() const {
        int c = 0;
        for (auto word : w) c += std::popcount(word);
        return c;
    }
    bool empty() const {
        for (auto word : w)
            if (word) return false;
        return true;
    }
    void intersect(const BitDomain& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t word = w[i];
            while (word) {
                int b = std::countr_zero(word);
                f(static_cast<int>(i * 64 + b));
                word &= word - 1;
            }
        }
    }
};

// Backtracking search with dynamic (fewest-candidates-first) variable order,
// forward checking on tuples with one unassigned variable, and a full check
// of each tuple once its last variable is assigned.  Results are reported in
// arbitrary search order; callers sort for the lexicographic contract.
class HomSolver {
public:
    HomSolver(const Structure& src, const Structure& tgt, const HomOptions& opt)
        : src_(src), tgt_(tgt), opt_(opt), n_(src.size), m_(tgt.size),
          words_(std::max(1, (tgt.size + 63) / 64)) {
        if (!(src.signature == tgt.signature))
            throw Error(Err::SignatureMismatch, "homomorphism between different signatures");
        for (auto [v, x] : opt_.pinned)
            if (v < 0 || v >= n_ || x < 0 || x >= m_)
                throw Error(Err::BadInput, "pinned map out of range");
        const auto& syms = src_.signature.symbols;
        rels_.reserve(syms.size());
        for (const auto& sym : syms)
            rels_.push_back({sym.arity, &src_.tuples(sym.name), &tgt_.tuples(sym.name)});
        involving_.assign(n_, {});
        for (size_t r = 0; r < rels_.size(); ++r) {
            const auto& ts = *rels_[r].src;
            for (size_t ti = 0; ti < ts.size(); ++ti) {
                std::set<int> seen(ts[ti].begin(), ts[ti].end());
                for (int v : seen) involving_[v].push_back({static_cast<int>(r), static_cast<int>(ti)});
            }
        }
    }

    // run the search; emit(mapping) returns false to stop enumeration
    void run(const std::function<bool(const Mapping&)>& emit) {
        if (m_ == 0 && n_ > 0) return;
        emit_ = &emit;
        stopped_ = false;
        assign_.assign(n_, -1);
        domains_.assign(n_, make_static_domain_template());
        for (int v = 0; v < n_; ++v) restrict_to_profile(v);
        for (int v = 0; v < n_; ++v)
            if (domains_[v].empty()) return;
        std::vector<std::pair<int, BitDomain>> saved;
        for (auto [v, x] : opt_.pinned)
            if (!try_assign(v, x, saved)) return;
        unassigned_ = 0;
        for (int v = 0; v < n_; ++v)
            if (assign_[v] == -1) ++unassigned_;
        dfs();
    }

private:
    struct Rel {
        int arity;
        const TupleSet* src;
        const TupleSet* tgt;
    };

    BitDomain make_static_domain_template() const { return BitDomain::full(m_, words_); }

    // counts of occurrences of element e at position k of relation r
    int occ(const TupleSet& ts, int e, int k) const {
        int c = 0;
        for (const auto& t : ts) c += (t[k] == e) ? 1 : 0;
        return c;
    }

    void restrict_to_profile(int v) {
        const bool iso_mode = opt_.strong && opt_.injective && n_ == m_;
        for (size_t r = 0; r < rels_.size(); ++r) {
            for (int k = 0; k < rels_[r].arity; ++k) {
                int need = occ(*rels_[r].src, v, k);
                if (need == 0 && !iso_mode) continue;
                for (int x = 0; x < m_; ++x) {
                    if (!domains_[v].test(x)) continue;
                    int have = occ(*rels_[r].tgt, x, k);
                    bool ok = iso_mode ? have == need
                                       : (opt_.injective ? have >= need : have > 0);
                    if (!ok) domains_[v].clear(x);
                }
            }
        }
    }

    void save_once(int v, std::vector<std::pair<int, BitDomain>>& saved) {
        for (const auto& [sv, d] : saved)
            if (sv == v) return;
        saved.push_back({v, domains_[v]});
    }

    bool try_assign(int v, int x, std::vector<std::pair<int, BitDomain>>& saved) {
        if (assign_[v] != -1) return assign_[v] == x;
        if (!domains_[v].test(x)) return false;
        save_once(v, saved);
        assign_[v] = x;
        domains_[v].keep_only(x);
        if (opt_.injective) {
            for (int w = 0; w < n_; ++w) {
                if (w == v || assign_[w] != -1) continue;
                if (domains_[w].test(x)) {
                    save_once(w, saved);
                    domains_[w].clear(x);
                    if (domains_[w].empty()) return false;
                }
            }
        }
        for (auto [r, ti] : involving_[v]) {
            const Tuple& t = (*rels_[r].src)[ti];
            int open_var = -1;
            bool multi_open = false;
            for (int e : t)
                if (assign_[e] == -1) {
                    if (open_var == -1 || open_var == e) open_var = e;
                    else multi_open = true;
                }
            if (multi_open) continue;
            if (open_var == -1) {
                Tuple img(t.size());
                for (size_t k = 0; k < t.size(); ++k) img[k] = assign_[t[k]];
                if (!std::binary_search(rels_[r].tgt->begin(), rels_[r].tgt->end(), img))
                    return false;
            } else {
                BitDomain allowed;
                allowed.w.assign(words_, 0);
                for (const auto& y : *rels_[r].tgt) {
                    int val = -1;
                    bool ok = true;
                    for (size_t k = 0; k < t.size() && ok; ++k) {
                        if (t[k] == open_var) {
                            if (val == -1) val = y[k];
                            else if (val != y[k]) ok = false;
                        } else if (assign_[t[k]] != y[k]) {
                            ok = false;
                        }
                    }
                    if (ok && val >= 0) allowed.w[val >> 6] |= uint64_t(1) << (val & 63);
                }
                save_once(open_var, saved);
                domains_[open_var].intersect(allowed);
                if (domains_[open_var].empty()) return false;
            }
        }
        return true;
    }

    void restore(std::vector<std::pair<int, BitDomain>>& saved, int v) {
        for (auto& [sv, d] : saved) domains_[sv] = std::move(d);
        saved.clear();
        assign_[v] = -1;
    }

    void dfs() {
        if (stopped_) return;
        if (unassigned_ == 0) {
            bool keep = true;
            if (!opt_.strong || is_homomorphism(assign_, src_, tgt_, true))
                keep = (*emit_)(assign_);
            if (!keep) stopped_ = true;
            return;
        }
        int best = -1, best_count = 0;
        for (int v = 0; v < n_; ++v) {
            if (assign_[v] != -1) continue;
            int c = domains_[v].count();
            if (best == -1 || c < best_count) {
                best = v;
                best_count = c;
            }
        }
        BitDomain dom = domains_[best];
        std::vector<std::pair<int, BitDomain>> saved;
        dom.for_each([&](int x) {
            if (stopped_) return;
            if (try_assign(best, x, saved)) {
                --unassigned_;
                dfs();
                ++unassigned_;
            }
            restore(saved, best);
        });
    }

    const Structure& src_;
    const Structure& tgt_;
    HomOptions opt_;
    int n_, m_, words_;
    std::vector<Rel> rels_;
    std::vector<std::vector<std::pair<int, int>>> involving_;
    std::vector<int> assign_;
    std::vector<BitDomain> domains_;
    int unassigned_ = 0;
    bool stopped_ = false;
    const std::function<bool(const Mapping&)>* emit_ = nullptr;
};

} // namespace detail

// All homomorphisms matching the options, in lexicographic order of the
// mapping (viewed as a tuple), truncated at options.limit if set.
inline std::vector<Mapping> solve_mappings(const Structure& src, const Structure& tgt,
                                           const HomOptions& opt = {}) {
    detail::HomSolver solver(src, tgt, opt);
    std::vector<Mapping> out;
    solver.run([&](const Mapping& f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    if (opt.limit && static_cast<long long>(out.size()) > *opt.limit)
        out.resize(static_cast<size_t>(*opt.limit));
    return out;
}

inline std::vector<Hom> solve(const Structure& src, const Structure& tgt,
                              const HomOptions& opt = {}) {
    auto s = std::make_shared<const Structure>(src);
    auto t = std::make_shared<const Structure>(tgt);
    std::vector<Hom> out;
    for (auto& f : solve_mappings(src, tgt, opt)) out.push_back({s, t, std::move(f)});
    return out;
}

inline std::vector<Hom> solve(const HomQuery& q) { return solve(q.source, q.target, q.options); }

// Existence does not depend on enumeration order, so stop at the first hit.
inline bool hom_exists(const Structure& src, const Structure& tgt, const HomOptions& opt = {}) {
    HomOptions o = opt;
    o.limit.reset();
    detail::HomSolver solver(src, tgt, o);
    bool found = false;
    solver.run([&](const Mapping&) {
        found = true;
        return false;
    });
    return found;
}

inline long long hom_count(const Structure& src, const Structure& tgt,
                           const HomOptions& opt = {}) {
    HomOptions o = opt;
    o.limit.reset();
    detail::HomSolver solver(src, tgt, o);
    long long c = 0;
    solver.run([&](const Mapping&) {
        ++c;
        return true;
    });
    return c;
}

inline Hom identity_hom(const Structure& m) {
    auto p = std::make_shared<const Structure>(m);
    Mapping id(m.size);
    for (int i = 0; i < m.size; ++i) id[i] = i;
    return {p, p, std::move(id)};
}

// Bijective strong homomorphisms whose inverse is also a strong homomorphism.
inline std::vector<Hom> isomorphisms(const Structure& m, const Structure& n) {
    if (!(m.signature == n.signature))
        throw Error(Err::SignatureMismatch, "isomorphism between different signatures");
    if (m.size != n.size) return {};
    HomOptions opt;
    opt.strong = true;
    opt.injective = true;
    auto all = solve(m, n, opt);
    std::vector<Hom> out;
    for (auto& h : all) {
        Mapping inv(n.size, -1);
        for (int i = 0; i < m.size; ++i) inv[h.map[i]] = i;
        if (is_homomorphism(inv, n, m, true)) out.push_back(std::move(h));
    }
    return out;
}

// Some isomorphism, found without enumerating all of them.
inline std::optional<Mapping> first_isomorphism_mapping(const Structure& m, const Structure& n) {
    if (!(m.signature == n.signature))
        throw Error(Err::SignatureMismatch, "isomorphism between different signatures");
    if (m.size != n.size) return std::nullopt;
    HomOptions opt;
    opt.strong = true;
    opt.injective = true;
    detail::HomSolver solver(m, n, opt);
    std::optional<Mapping> found;
    solver.run([&](const Mapping& f) {
        Mapping inv(n.size, -1);
        for (int i = 0; i < m.size; ++i) inv[f[i]] = i;
        if (is_homomorphism(inv, n, m, true)) {
            found = f;
            return false;
        }
        return true;
    });
    return found;
}

inline bool is_isomorphic(const Structure& m, const Structure& n) {
    return first_isomorphism_mapping(m, n).has_value();
}

inline std::vector<Hom> endomorphisms(const Structure& m) { return solve(m, m); }

inline bool is_rigid(const Structure& m) { return hom_count(m, m) == 1; }

inline Hom compose(const Hom& f, const Hom& g) {
    if (!structures_equal(*f.target, *g.source))
        throw Error(Err::ObjectMismatch, "compose: target of f differs from source of g");
    Mapping comp(f.map.size());
    for (size_t i = 0; i < f.map.size(); ++i) comp[i] = g.map[f.map[i]];
    return {f.source, g.target, std::move(comp)};
}

inline Mapping compose_mappings(const Mapping& first, const Mapping& then) {
    Mapping out(first.size());
    for (size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
    return out;
}

} // namespace relgadget

#endif
