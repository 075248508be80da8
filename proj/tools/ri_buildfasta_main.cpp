#include "runidx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return runidx::build_main(args, "ri-buildfasta");
}
