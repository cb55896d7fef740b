/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <domidx/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return domidx::run(args, std::cin, std::cout, std::cerr);
}
