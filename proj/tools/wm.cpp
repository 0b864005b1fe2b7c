#include <iostream>
#include <string>
#include <vector>

#include "wm/cli_run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wm::run_cli(args, std::cout).exit_code;
}
