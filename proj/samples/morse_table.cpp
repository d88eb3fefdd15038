// Prints the I(C)/J(C) chain table of one pattern interval and its homotopy type.
//   morse_table 1 213546

#include <iostream>

#include <posetmorse/posetmorse.hpp>

int main(int argc, char** argv) {
    using namespace posetmorse;
    if (argc != 3) {
        std::cerr << "usage: morse_table BOTTOM TOP\n";
        return 3;
    }
    try {
        PatternPoset poset;
        Interval<Permutation> iv{poset.parse(argv[1]), poset.parse(argv[2])};
        auto report = morse_report(poset, iv);
        std::cout << morse_table(poset, report) << '\n';
        std::cout << "mu = " << report.mobius;
        if (report.homotopy) std::cout << ", " << to_string(*report.homotopy);
        std::cout << '\n';
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
