#pragma once

// Closed-form Möbius recursions for the consecutive pattern poset and for
// factor order. Both evaluate four guarded cases top to bottom:
//   gap > 2 and bottom <= x(top), x(top) not below i(top)  -> recurse on [bottom, x(top)]
//   gap == 2, top not degenerate, bottom in {i(top), x(top)} -> 1
//   gap < 2                                                 -> (-1)^gap
//   otherwise                                               -> 0
// where x is the exterior / outer word and i the interior / inner word.

#include <cstdint>
#include <string>

#include "error.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace posetmorse {

inline std::int64_t mobius_pattern(const Permutation& sigma, const Permutation& tau) {
    if (!leq_consecutive(sigma, tau))
        throw incomparable_error(to_string(sigma) + " is not a consecutive pattern of " + to_string(tau));
    Permutation top = tau;
    while (true) {
        const std::size_t gap = top.size() - sigma.size();
        if (gap > 2) {
            auto ext = exterior(top);
            if (leq_consecutive(sigma, ext) && !leq_consecutive(ext, interior(top))) {
                top = std::move(ext);
                continue;
            }
            return 0;
        }
        if (gap == 2) return (!is_monotone(top) && (sigma == interior(top) || sigma == exterior(top))) ? 1 : 0;
        return gap == 0 ? 1 : -1;
    }
}

inline std::int64_t mobius_factor(const Word& u, const Word& w) {
    if (!is_factor(u, w)) throw incomparable_error("first word is not a factor of the second");
    Word top = w;
    while (true) {
        const std::size_t gap = top.size() - u.size();
        if (gap > 2) {
            auto outer = outer_word(top);
            if (is_factor(u, outer) && !is_factor(outer, inner_word(top))) {
                top = std::move(outer);
                continue;
            }
            return 0;
        }
        if (gap == 2) return (!is_flat(top) && (u == inner_word(top) || u == outer_word(top))) ? 1 : 0;
        return gap == 0 ? 1 : -1;
    }
}

}  // namespace posetmorse
