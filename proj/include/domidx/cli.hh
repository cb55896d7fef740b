/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DOMIDX_GUARD_CLI_HH
#define DOMIDX_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace domidx
{
    namespace exit_code
    {
        inline constexpr int ok = 0;
        inline constexpr int usage = 1;
        inline constexpr int proved_violation = 2;
        inline constexpr int parse_error = 3;
        inline constexpr int cap_exceeded = 4;
    }

    /// args excludes the program name. Graph text is read from in when --in is absent or "-".
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
