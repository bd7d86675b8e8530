#include "rosenau/cli.hpp"

int main(int argc, char** argv) { return rosenau::cli::run(argc, argv); }
