#include <string>
#include <vector>

#include "ffr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ffr::run(args);
}
