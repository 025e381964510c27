// Expands the index series of the bundled fixtures and prints the verdicts.
//
//   rigidity_tour <fixture-dir>

#include <iostream>

#include "e8index/e8index.hpp"

int main(int argc, char **argv)
{
    if (argc != 2) {
        std::cerr << "usage: rigidity_tour <fixture-dir>\n";
        return 2;
    }
    const std::string dir = argv[1];
    for (const char *name : {"s2.json", "s2xs2.json", "cp1_spinc.json", "cp2.json", "single_point.json"}) {
        const auto f = e8index::load_fixture(dir + "/" + name);
        for (auto flavor : {e8index::IndexFlavor::I, e8index::IndexFlavor::J}) {
            const auto c = e8index::classify(f, flavor, 3);
            std::cout << name << " " << e8index::to_string(flavor) << ": " << c.summary << "\n";
        }
    }
    const auto one = e8index::load_fixture(dir + "/single_point.json");
    std::cout << "\nsingle point, I through q^1:\n  " << e8index::to_string(e8index::index_series(one, 1)) << "\n";
    return 0;
}
