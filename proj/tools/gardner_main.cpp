#include <string>
#include <vector>

#include "gardner/cli.hpp"

int main(int argc, char** argv) {
    return gardner::cli::main(std::vector<std::string>(argv, argv + argc));
}
