#include <iostream>

#include "addunique/cli.hpp"

int main(int argc, char** argv) {
    return addunique::cli::main_entry(argc, argv, std::cout, std::cerr);
}
