#include <dpcolor/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const dpcolor::cli::RunOutput r = dpcolor::cli::run_args(args);
    std::cout << r.out << std::flush;
    std::cerr << r.err << std::flush;
    return r.exit_code;
}
