#include "runidx/cli.hpp"

int main(int argc, char** argv) { return runidx::dispatch_main(argc, argv); }
