#include <iostream>

int main() {
    std::cout << "gcgal: placeholder\n";
    return 0;
}
