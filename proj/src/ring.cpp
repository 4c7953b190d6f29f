#include "sheafres/ring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sheafres {

ResourceCaps& caps() {
    static ResourceCaps c;
    return c;
}

RingPtr Ring::make(std::vector<std::string> vars,
                   std::vector<Multideg> degrees,
                   MonomialOrder order,
                   std::vector<TermList> quotient,
                   std::vector<std::vector<int>> proj_blocks) {
    if (vars.size() != degrees.size())
        throw std::invalid_argument("Ring: one degree vector per variable required");
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        throw std::invalid_argument("Ring: variable names must be unique");
    int g = degrees.empty() ? 1 : (int)degrees[0].size();
    if (g < 1) throw std::invalid_argument("Ring: grading dimension must be >= 1");
    for (const auto& d : degrees)
        if ((int)d.size() != g)
            throw std::invalid_argument("Ring: inconsistent grading dimension");
    if (order.kind == MonomialOrder::Kind::Block && order.block_of.size() != vars.size())
        throw std::invalid_argument("Ring: block order must assign a block to every variable");

    auto r = std::shared_ptr<Ring>(new Ring());
    r->vars_ = std::move(vars);
    r->degrees_ = std::move(degrees);
    r->gdim_ = g;
    r->order_ = std::move(order);
    r->quotient_ = std::move(quotient);
    r->proj_blocks_ = std::move(proj_blocks);

    // Degrevlex weights: explicit weights if given, else the first grading row
    // when strictly positive, else total degree. A zero weight would put 1
    // above the weightless variable and break well-ordering.
    if (!r->order_.weights.empty()) {
        r->eff_weights_ = r->order_.weights;
    } else {
        bool positive = true;
        for (const auto& d : r->degrees_)
            if (d[0] <= 0) { positive = false; break; }
        r->eff_weights_.assign(r->vars_.size(), 1);
        if (positive)
            for (std::size_t i = 0; i < r->vars_.size(); ++i)
                r->eff_weights_[i] = r->degrees_[i][0];
    }
    return r;
}

int Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

Multideg Ring::exps_degree(const Exps& e) const {
    Multideg d(gdim_, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0)
            for (int r = 0; r < gdim_; ++r) d[r] += (long)e[i] * degrees_[i][r];
    return d;
}

namespace {

// >0 iff a > b in weighted degrevlex restricted to variables [lo, hi).
int degrevlex_cmp(const Exps& a, const Exps& b, const std::vector<long>& w,
                  std::size_t lo, std::size_t hi) {
    long da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += w[i] * a[i]; db += w[i] * b[i]; }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1; // smaller trailing exponent wins
    }
    return 0;
}

} // namespace

int Ring::mono_cmp(const Exps& a, const Exps& b) const {
    switch (order_.kind) {
    case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    case MonomialOrder::Kind::DegRevLex:
        return degrevlex_cmp(a, b, eff_weights_, 0, a.size());
    case MonomialOrder::Kind::Block: {
        int nblocks = 0;
        for (int blk : order_.block_of) nblocks = std::max(nblocks, blk + 1);
        for (int blk = 0; blk < nblocks; ++blk) {
            long da = 0, db = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (order_.block_of[i] == blk) { da += a[i]; db += b[i]; }
            if (da != db) return da > db ? 1 : -1;
            for (std::size_t i = a.size(); i-- > 0;) {
                if (order_.block_of[i] != blk) continue;
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
            }
        }
        return 0;
    }
    }
    return 0;
}

bool exps_divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exps exps_mul(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exps exps_div(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
        if (r[i] < 0) throw std::logic_error("exps_div: not divisible");
    }
    return r;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool exps_disjoint(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

bool exps_is_one(const Exps& a) {
    for (auto e : a) if (e != 0) return false;
    return true;
}

} // namespace sheafres
