#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "seatstorm/cli_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return seatstorm::cli_dispatch(args);
    } catch (const seatstorm::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
