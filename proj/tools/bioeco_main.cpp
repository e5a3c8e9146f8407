#include <string>
#include <vector>

#include "bioeco/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bioeco::run_cli(args);
}
