// Batch CLI: build contexts from realization configs, run verification
// suites, list and decompose modules. See README.md for the config format
// and the element label grammar.
#include <iostream>

int main() {
    std::cout << "tetrahopf CLI placeholder\n";
    return 2;
}
