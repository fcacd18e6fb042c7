#ifndef SGA_ERROR_HPP
#define SGA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sga {

// Data errors carry a stable machine-readable kind, printed by the CLI as
// "error: <kind>: <message>".
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct not_a_permutation : error {
    explicit not_a_permutation(const std::string& msg) : error("NotAPermutation", msg) {}
};
struct length_mismatch : error {
    explicit length_mismatch(const std::string& msg) : error("LengthMismatch", msg) {}
};
struct vertex_out_of_range : error {
    explicit vertex_out_of_range(const std::string& msg) : error("VertexOutOfRange", msg) {}
};
struct shape_mismatch : error {
    explicit shape_mismatch(const std::string& msg) : error("ShapeMismatch", msg) {}
};
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& msg) : error("BudgetExceeded", msg) {}
};
struct color_count_mismatch : error {
    explicit color_count_mismatch(const std::string& msg) : error("ColorCountMismatch", msg) {}
};
struct bad_parameter : error {
    explicit bad_parameter(const std::string& msg) : error("BadParameter", msg) {}
};
struct not_orthonormal : error {
    explicit not_orthonormal(const std::string& msg) : error("NotOrthonormal", msg) {}
};
struct dimension_too_small : error {
    explicit dimension_too_small(const std::string& msg) : error("DimensionTooSmall", msg) {}
};
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("ParseError", msg) {}
};

} // namespace sga

#endif
