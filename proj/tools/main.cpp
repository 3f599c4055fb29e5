#include <vector>
#include <string>

#include "netcode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return netcode::run_cli(args);
}
