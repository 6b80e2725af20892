#include <string>
#include <vector>

#include "parared/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return parared::run_cli(args);
}
