#include "qftatlas/synth.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "qftatlas/topology.hpp"

namespace qftatlas {

namespace {

int slot_value(const Slot& s, const std::vector<int>& values) {
    return s.hole < 0 ? s.value : values[s.hole];
}

int term_value(const Term& t, const std::vector<int>& values, int i, int size) {
    return slot_value(t.coef, values) * i + slot_value(t.mult, values) * size + slot_value(t.off, values);
}

} // namespace

int eval_expr(const Expr& e, const std::vector<int>& values, int i, int size) {
    const int v1 = term_value(e.t1, values, i, size);
    switch (e.kind) {
    case ExprKind::Affine: return v1;
    case ExprKind::Mod2: return ((v1 % 2) + 2) % 2;
    case ExprKind::Min: return std::min(v1, term_value(e.t2, values, i, size));
    }
    return v1;
}

namespace {

std::string term_string(const Term& t, const std::vector<int>& values) {
    const int a = slot_value(t.coef, values), k = slot_value(t.mult, values), c = slot_value(t.off, values);
    std::ostringstream out;
    bool first = true;
    auto put = [&](int coef, const char* var) {
        if (coef == 0) return;
        if (!first) out << (coef < 0 ? " - " : " + ");
        else if (coef < 0) out << "-";
        const int mag = coef < 0 ? -coef : coef;
        if (mag != 1 || !*var) out << mag;
        if (*var && mag != 1) out << "*";
        out << var;
        first = false;
    };
    put(a, "i");
    put(k, "L");
    put(c, "");
    if (first) out << "0";
    return out.str();
}

} // namespace

std::string to_string(const Expr& e, const SketchTemplate&, const std::vector<int>& values) {
    switch (e.kind) {
    case ExprKind::Affine: return term_string(e.t1, values);
    case ExprKind::Mod2: {
        // only parities matter
        auto par = [&](const Slot& sl) { return Slot::fixed(((slot_value(sl, values) % 2) + 2) % 2); };
        const Term t{par(e.t1.coef), par(e.t1.mult), par(e.t1.off)};
        const std::string body = term_string(t, values);
        return (body.size() == 1 ? body : "(" + body + ")") + " mod 2";
    }
    case ExprKind::Min: return "min(" + term_string(e.t1, values) + ", " + term_string(e.t2, values) + ")";
    }
    return {};
}

namespace {

// One simulator per thread; reset() between candidates only undoes what the last run touched.
class Sim {
public:
    explicit Sim(const SynthSpec& spec) : spec_(spec) {
        int base = 0;
        for (int len : spec.unit_length) {
            std::vector<int> line(len);
            for (int p = 0; p < len; ++p) line[p] = base + p;
            if (spec.second_descending && start_.size() == 1) std::reverse(line.begin(), line.end());
            start_.push_back(line);
            base += len;
        }
        lines_ = start_;
        n_ = base;
        required_.assign(n_ * n_, 0);
        done_.assign(n_ * n_, 0);
        auto need = [&](int x, int y) { required_[std::min(x, y) * n_ + std::max(x, y)] = 1; };
        if (start_.size() == 1) {
            for (int x = 0; x < n_; ++x)
                for (int y = x + 1; y < n_; ++y) need(x, y);
        } else {
            for (int p = 0; p < static_cast<int>(start_[0].size()); ++p)
                for (int q = 0; q < static_cast<int>(start_[1].size()); ++q)
                    if (!(spec.exclude_same_position && p == q)) need(start_[0][p], start_[1][q]);
        }
        ctrl_.resize(n_);
        tgt_.resize(n_);
        for (int x = 0; x < n_; ++x)
            for (int y = x + 1; y < n_; ++y)
                if (required_[x * n_ + y]) {
                    ctrl_[x].push_back(y);
                    tgt_[y].push_back(x);
                    ++required_count_;
                }
        ctrl_next_.assign(n_, 0);
        tgt_next_.assign(n_, 0);
    }

    void reset() {
        for (int k : touched_) done_[k] = 0;
        touched_.clear();
        covered_ = 0;
        std::fill(ctrl_next_.begin(), ctrl_next_.end(), 0);
        std::fill(tgt_next_.begin(), tgt_next_.end(), 0);
        for (std::size_t u = 0; u < lines_.size(); ++u)
            std::copy(start_[u].begin(), start_[u].end(), lines_[u].begin());
    }

    // nullptr: fine
    const char* cp(int x, int y) {
        const int a = std::min(x, y), b = std::max(x, y);
        const int key = a * n_ + b;
        if (!required_[key]) return "pair not in the specification";
        if (done_[key]) return spec_.allow_duplicates ? nullptr : "duplicate CPHASE";
        if (spec_.mode == Mode::Strict) {
            if (ctrl_[a][ctrl_next_[a]] != b || tgt_[b][tgt_next_[b]] != a) return "dependency order";
            ++ctrl_next_[a];
            ++tgt_next_[b];
        }
        done_[key] = 1;
        touched_.push_back(key);
        ++covered_;
        return nullptr;
    }

    const char* line_op(bool swap, int unit, int beg, int end) {
        std::vector<int>& line = lines_[unit];
        const int len = static_cast<int>(line.size());
        if (beg < 0) return "negative start";
        for (int p = beg; p < end; p += 2) {
            if (p + 1 >= len) return "pair beyond the line";
            if (swap) {
                std::swap(line[p], line[p + 1]);
            } else if (const char* bad = cp(line[p], line[p + 1])) {
                return bad;
            }
        }
        return nullptr;
    }

    const char* links(int lo, int hi, int step) {
        if (lo < 0 || hi > static_cast<int>(spec_.links.size())) return "link range out of bounds";
        for (int k = lo; k < hi; k += step) {
            const CrossLink& l = spec_.links[k];
            if (const char* bad = cp(lines_[l.a.unit][l.a.index], lines_[l.b.unit][l.b.index])) return bad;
        }
        return nullptr;
    }

    bool complete() const { return covered_ == required_count_; }

private:
    const SynthSpec& spec_;
    std::vector<std::vector<int>> start_, lines_;
    int n_ = 0;
    std::vector<char> required_, done_;
    std::vector<int> touched_;
    std::vector<std::vector<int>> ctrl_, tgt_;
    std::vector<int> ctrl_next_, tgt_next_;
    int required_count_ = 0;
    int covered_ = 0;
};

Verdict run(Sim& sim, const SketchTemplate& sketch, const SynthSpec& spec, const std::vector<int>& values,
            bool prune) {
    const int size = spec.size;
    Verdict first;
    bool failed = false;
    const int iters = eval_expr(sketch.iterations, values, 0, size);
    if (iters < 0) return {false, -1, "negative iteration count"};
    sim.reset();
    for (int i = 0; i < iters; ++i) {
        for (const Statement& st : sketch.body) {
            const int lo = eval_expr(st.lo, values, i, size), hi = eval_expr(st.hi, values, i, size);
            const char* bad = nullptr;
            switch (st.kind) {
            case StmtKind::CpLinks: bad = sim.links(lo, hi, st.step); break;
            case StmtKind::CpLine: bad = sim.line_op(false, st.unit, lo, hi); break;
            case StmtKind::SwapLine: bad = sim.line_op(true, st.unit, lo, hi); break;
            }
            if (bad && !failed) {
                failed = true;
                first = {false, i, bad};
                if (prune) return first;
            }
        }
    }
    if (failed) return first;
    if (!sim.complete()) return {false, -1, "required pairs missing"};
    return {true, -1, {}};
}

} // namespace

Verdict evaluate(const SketchTemplate& sketch, const SynthSpec& spec, const std::vector<int>& values, bool prune) {
    Sim sim(spec);
    return run(sim, sketch, spec, values, prune);
}

std::uint64_t search_space(const SketchTemplate& sketch) {
    std::uint64_t total = 1;
    for (const Hole& h : sketch.holes) {
        const std::uint64_t d = static_cast<std::uint64_t>(h.hi - h.lo + 1);
        if (h.hi < h.lo) return 0;
        if (total > UINT64_MAX / d) return UINT64_MAX;
        total *= d;
    }
    return total;
}

namespace {

void decode(const SketchTemplate& sketch, std::uint64_t idx, std::vector<int>& values) {
    for (int h = static_cast<int>(sketch.holes.size()) - 1; h >= 0; --h) {
        const Hole& hole = sketch.holes[h];
        const std::uint64_t d = static_cast<std::uint64_t>(hole.hi - hole.lo + 1);
        values[h] = hole.lo + static_cast<int>(idx % d);
        idx /= d;
    }
}

} // namespace

std::vector<HoleAssignment> solve(const SketchTemplate& sketch, const SynthSpec& spec, const SolveOptions& opts) {
    const std::uint64_t total = search_space(sketch);
    if (total > opts.cap)
        throw SearchSpaceError("search space of " + std::to_string(total) + " candidates exceeds the cap of " +
                               std::to_string(opts.cap));
    std::vector<HoleAssignment> out;
    if (opts.limit <= 0 || total == 0) return out;
    const int threads = opts.threads > 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk = 1 << 14;
    const std::uint64_t batch = chunk * static_cast<std::uint64_t>(threads);
    for (std::uint64_t start = 0; start < total && static_cast<int>(out.size()) < opts.limit; start += batch) {
        // each worker keeps its chunk's hits in order; chunks are merged in index order
        std::vector<std::vector<std::uint64_t>> hits(threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const std::uint64_t lo = start + chunk * t;
                const std::uint64_t hi = std::min(total, lo + chunk);
                std::vector<int> values(sketch.holes.size());
                Sim sim(spec);
                for (std::uint64_t idx = lo; idx < hi; ++idx) {
                    decode(sketch, idx, values);
                    if (run(sim, sketch, spec, values, opts.prune).ok) {
                        hits[t].push_back(idx);
                        if (static_cast<int>(hits[t].size()) >= opts.limit) break;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& list : hits)
            for (std::uint64_t idx : list) {
                if (static_cast<int>(out.size()) >= opts.limit) break;
                HoleAssignment a;
                a.values.resize(sketch.holes.size());
                decode(sketch, idx, a.values);
                a.verdict = {true, -1, {}};
                a.sizes_tested = {spec.size};
                out.push_back(std::move(a));
            }
    }
    return out;
}

// ---- shapes -------------------------------------------------------------------------------

const std::vector<std::string>& synth_shapes() {
    static const std::vector<std::string> shapes{"lnn", "grid-ie-strict", "grid-ie-relaxed", "syc-ie-strict",
                                                 "syc-ie-relaxed"};
    return shapes;
}

namespace {

struct SketchBuilder {
    SketchTemplate t;

    int hole(const std::string& name, int lo, int hi) {
        t.holes.push_back({name, lo, hi});
        return static_cast<int>(t.holes.size()) - 1;
    }
    Term term(const std::string& name) {
        return {Slot::of(hole(name + ".coef", -3, 3)), Slot::of(hole(name + ".mult", 0, 2)),
                Slot::of(hole(name + ".off", -3, 3))};
    }
    // no loop-variable part
    Term count(const std::string& name) {
        return {Slot::fixed(0), Slot::of(hole(name + ".mult", 0, 2)), Slot::of(hole(name + ".off", -3, 3))};
    }
    static Expr fixed(int mult, int off) { return {ExprKind::Affine, {Slot::fixed(0), Slot::fixed(mult), Slot::fixed(off)}, {}}; }
    Expr start(const std::string& name, bool with_mod) {
        return {with_mod ? ExprKind::Mod2 : ExprKind::Affine, term(name), {}};
    }
};

} // namespace

SketchTemplate sketch_for(const std::string& shape, bool with_mod) {
    SketchBuilder sb;
    sb.t.shape = shape;
    sb.t.iterations = {ExprKind::Affine, sb.count("iters"), {}};
    if (shape == "grid-ie-relaxed" || shape == "grid-ie-strict") {
        Expr top = sb.start("top.beg", with_mod), bottom = sb.start("bottom.beg", with_mod);
        sb.t.body = {
            {StmtKind::CpLinks, 0, 1, SketchBuilder::fixed(0, 0), SketchBuilder::fixed(1, 0)},
            {StmtKind::SwapLine, 0, 1, top, SketchBuilder::fixed(1, -1)},
            {StmtKind::SwapLine, 1, 1, bottom, SketchBuilder::fixed(1, -1)},
        };
    } else if (shape == "syc-ie-relaxed") {
        Expr beg = sb.start("beg", with_mod);
        Expr end{ExprKind::Affine, sb.term("end"), {}};
        sb.t.body = {
            {StmtKind::CpLinks, 0, 1, SketchBuilder::fixed(0, 0), SketchBuilder::fixed(1, -1)},
            {StmtKind::SwapLine, 0, 1, beg, end},
            {StmtKind::SwapLine, 1, 1, beg, end},
        };
    } else if (shape == "syc-ie-strict" || shape == "lnn") {
        Expr beg = sb.start("beg", with_mod);
        Expr end{ExprKind::Min, sb.term("end1"), sb.term("end2")};
        if (shape == "lnn") {
            sb.t.body = {
                {StmtKind::CpLine, 0, 1, beg, end},
                {StmtKind::SwapLine, 0, 1, beg, end},
            };
        } else {
            sb.t.body = {
                {StmtKind::CpLinks, 0, 2, beg, end},
                {StmtKind::SwapLine, 0, 1, beg, end},
                {StmtKind::SwapLine, 1, 1, beg, end},
                {StmtKind::CpLinks, 0, 2, beg, end},
            };
        }
    } else {
        throw ParameterError("shape", "unknown synth shape '" + shape + "'");
    }
    return sb.t;
}

SynthSpec spec_for(const std::string& shape, int size) {
    SynthSpec s;
    s.size = size;
    if (shape == "lnn") {
        if (size < 2) throw ParameterError("size", "lnn sketch needs L >= 2");
        s.unit_length = {size};
        s.mode = Mode::Strict;
    } else if (shape == "grid-ie-relaxed" || shape == "grid-ie-strict") {
        if (size < 2) throw ParameterError("size", "grid sketch needs m >= 2");
        s.unit_length = {size, size};
        for (int k = 0; k < size; ++k) s.links.push_back({{0, k}, {1, k}});
        s.mode = shape == "grid-ie-strict" ? Mode::Strict : Mode::Relaxed;
    } else if (shape == "syc-ie-relaxed" || shape == "syc-ie-strict") {
        if (size < 4 || size % 2) throw ParameterError("size", "sycamore sketch needs an even unit length >= 4");
        s.unit_length = {size, size};
        // boundary between the lower row of one unit and the upper row of the next
        for (int a = 0; a + 1 < size; ++a) {
            if (a % 2 == 0)
                s.links.push_back({{0, a + 1}, {1, a}});
            else
                s.links.push_back({{0, a}, {1, a + 1}});
        }
        s.exclude_same_position = true;
        if (shape == "syc-ie-relaxed") {
            s.allow_duplicates = true;
        } else {
            s.mode = Mode::Strict;
        }
    } else {
        throw ParameterError("shape", "unknown synth shape '" + shape + "'");
    }
    return s;
}

GeneralizationReport cross_validate(const HoleAssignment& assignment, const SketchTemplate& sketch,
                                    const std::string& shape, const std::vector<int>& sizes) {
    GeneralizationReport r;
    for (int size : sizes) {
        const SynthSpec spec = spec_for(shape, size);
        SizeCheck c{size, evaluate(sketch, spec, assignment.values, true)};
        if (!c.verdict.ok) r.generalizing = false;
        r.checks.push_back(std::move(c));
    }
    return r;
}

} // namespace qftatlas
