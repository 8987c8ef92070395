#include <cstdio>

#include "levitan/liealg.hpp"

int main() {
    std::puts("levitan: CLI under construction");
    return 2;
}
