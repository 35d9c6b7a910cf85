#include "digiconv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return digiconv::run_cli(args);
}
