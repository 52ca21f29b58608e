#include <iostream>

#include "magari4/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto outcome = magari4::cli::run(args);
    std::cout << outcome.payload;
    std::cerr << outcome.errors;
    return outcome.exit_code;
}
