#include "acceptance.hpp"

#include <iostream>

int main() { return twklv::acceptance::run_acceptance(std::cout) ? 0 : 1; }
