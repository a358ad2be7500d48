#include "orm/cli.hpp"

int main(int argc, char** argv) { return orm::dispatch(argc, argv); }
