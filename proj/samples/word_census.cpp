// Tallies Möbius values of all factor-order intervals over an alphabet of size k
// with top length at most n, using the closed form.
//   word_census 3 5

#include <cstdlib>
#include <iostream>
#include <map>

#include <posetmorse/posetmorse.hpp>

int main(int argc, char** argv) {
    using namespace posetmorse;
    const std::size_t k = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2;
    const std::size_t n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 6;
    std::map<std::int64_t, std::size_t> tally;
    for (const auto& iv : all_word_intervals(k, n)) ++tally[mobius_factor(iv.bottom, iv.top)];
    for (const auto& [mu, count] : tally) std::cout << "mu = " << mu << ": " << count << " intervals\n";
}
