#include <iostream>
#include <string>
#include <vector>

#include "hirzewahl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hirzewahl::run_command(args, std::cout, std::cerr);
}
