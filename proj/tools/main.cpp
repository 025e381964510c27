#include <string>
#include <vector>

#include "e8index_cli.hpp"

int main(int argc, char **argv)
{
    return e8index::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
