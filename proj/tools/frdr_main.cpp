#include <cstdio>

int main() {
  std::puts("frdr: placeholder");
  return 0;
}
