#include <iostream>
int main() { std::cout << "ivb\n"; }
