#include "threept/cli.hpp"

int main(int argc, char** argv)
{
	return threept::cli::run(argc, argv);
}
