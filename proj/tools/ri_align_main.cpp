#include "runidx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return runidx::align_main(args, "ri-align");
}
