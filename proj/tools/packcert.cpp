#include "packcert/cli.hpp"

int main(int argc, char** argv) { return packcert::cli::main(argc, argv); }
