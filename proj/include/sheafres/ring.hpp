#pragma once

#include "sheafres/scalar.hpp"

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace sheafres {

using Exps = std::vector<int32_t>;       // exponent vector, one entry per variable
using Multideg = std::vector<long>;      // multidegree, one entry per grading row

struct Term {
    Exps exps;
    Scalar coeff;
};
using TermList = std::vector<Term>;

// Resource caps for basis computations. Exceeding a cap throws ResourceLimit;
// results are never silently truncated.
struct ResourceCaps {
    long max_total_degree = 120;
    std::size_t max_basis = 6000;
};
ResourceCaps& caps();

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, Block };
    Kind kind = Kind::DegRevLex;
    // Block orders: block index per variable; lower blocks compare first.
    std::vector<int> block_of;
    // DegRevLex weights (one per variable). Empty means all ones.
    std::vector<long> weights;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Multigraded polynomial ring over Q, optionally modulo a quotient ideal.
// Immutable after construction.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr make(std::vector<std::string> vars,
                        std::vector<Multideg> degrees,
                        MonomialOrder order = {},
                        std::vector<TermList> quotient = {},
                        std::vector<std::vector<int>> proj_blocks = {});

    std::size_t nvars() const { return vars_.size(); }
    int gdim() const { return gdim_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const Multideg& degree_of_var(std::size_t i) const { return degrees_[i]; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<TermList>& quotient_terms() const { return quotient_; }
    bool has_quotient() const { return !quotient_.empty(); }
    // Groups of variable indices carrying projective (irrelevant-ideal) structure.
    const std::vector<std::vector<int>>& proj_blocks() const { return proj_blocks_; }

    int var_index(const std::string& name) const; // -1 if absent

    Multideg exps_degree(const Exps& e) const;
    long total_degree(const Exps& e) const {
        return std::accumulate(e.begin(), e.end(), 0L);
    }

    // Strict order comparison: returns >0 if a > b, <0 if a < b, 0 if equal.
    int mono_cmp(const Exps& a, const Exps& b) const;

    bool same_as(const Ring& other) const { return this == &other; }

private:
    Ring() = default;

    std::vector<std::string> vars_;
    std::vector<Multideg> degrees_;
    int gdim_ = 1;
    MonomialOrder order_;
    std::vector<TermList> quotient_;
    std::vector<std::vector<int>> proj_blocks_;
    std::vector<long> eff_weights_; // resolved degrevlex weights
};

bool exps_divides(const Exps& a, const Exps& b);          // a | b
Exps exps_mul(const Exps& a, const Exps& b);
Exps exps_div(const Exps& a, const Exps& b);              // b must divide a
Exps exps_lcm(const Exps& a, const Exps& b);
bool exps_disjoint(const Exps& a, const Exps& b);
bool exps_is_one(const Exps& a);

} // namespace sheafres
