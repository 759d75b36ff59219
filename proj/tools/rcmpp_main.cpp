#include <iostream>

#include "rcmpp/cli.hpp"

int main(int argc, char** argv) { return rcmpp::run_cli(argc, argv, std::cout, std::cerr); }
