// locus command-line front end; see README for the command set.
#include <cstdio>

int main() {
  std::puts("locus: not yet wired up");
  return 2;
}
