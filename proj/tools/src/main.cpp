#include "fibertwist/cli.hpp"

int main(int argc, char** argv)
{
    return fibertwist::cli::run(argc, argv);
}
