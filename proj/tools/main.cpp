#include "ramseylab/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto result = ramsey::dispatch(args);
    std::cout << result.payload.dump() << "\n";
    return result.exit_code();
}
