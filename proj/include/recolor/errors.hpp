#pragma once

#include <stdexcept>
#include <string>

namespace recolor {

// Failure codes shared across the library. The CLI prints the stable
// CamelCase name of the code (errc_name) on stderr and exits 3.
enum class errc {
    index_out_of_range,
    self_loop,
    adjacent_pair,
    empty_part,
    empty_set,
    full_set,
    malformed_encoding,
    unsupported_order,
    invalid_size,
    empty_graph,
    improper_coloring,
    length_mismatch,
    state_space_too_large,
    invalid_k,
    palette_mismatch,
    not_frozen,
    chi_omega_mismatch,
    not_pl_free,
    out_of_range,
    bad_index,
    order_too_large,
    unknown_scenario,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw error(code, what);
}

}  // namespace recolor
