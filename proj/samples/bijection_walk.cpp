#include <iostream>

#include <posetmorse/posetmorse.hpp>

// Lists every word of length 3 with its permutation, and checks one factor
// relation on both sides.
int main() {
    using namespace posetmorse;
    FactorOrder words;
    for (const auto& w : all_words(2, 3)) std::cout << words.format(w) << " -> " << to_string(word_to_perm(w)) << '\n';

    auto u = words.parse("ab");
    auto w = words.parse("bab");
    std::cout << words.format(u) << (is_factor(u, w) ? " <= " : " !<= ") << words.format(w) << ", "
              << to_string(word_to_perm(u)) << (leq_consecutive(word_to_perm(u), word_to_perm(w)) ? " <= " : " !<= ")
              << to_string(word_to_perm(w)) << '\n';
}
