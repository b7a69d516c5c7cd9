#include <iostream>

#include "liesym/parser.hpp"
#include "liesym/printer.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cout << "liesym: pipeline not wired yet\n";
    return 0;
}
