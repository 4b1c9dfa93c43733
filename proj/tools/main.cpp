#include "bchsynth/cli.hpp"

int main(int argc, char** argv)
{
    return bchsynth::run_cli(argc, argv);
}
