#include "ksub/labeling.hpp"

#include <stdexcept>

namespace ksub {

namespace {

void require_same_length(const Labeling& x, const Labeling& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("labeling length mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
}

}  // namespace

Labeling meet(const Labeling& x, const Labeling& y) {
    require_same_length(x, y);
    std::vector<Label> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = (x[i] == y[i]) ? x[i] : 0;
    return Labeling(std::move(out));
}

Labeling join(const Labeling& x, const Labeling& y) {
    require_same_length(x, y);
    std::vector<Label> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == y[i])
            out[i] = x[i];
        else if (x[i] == 0)
            out[i] = y[i];
        else if (y[i] == 0)
            out[i] = x[i];
        else
            out[i] = 0;
    }
    return Labeling(std::move(out));
}

Labeling theta(const Labeling& x, const Labeling& y, const Labeling& z) {
    require_same_length(x, y);
    require_same_length(x, z);
    std::vector<Label> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0 || y[i] == 0 || z[i] == 0)
            throw std::invalid_argument("theta is only defined on positive labels");
        out[i] = (x[i] == y[i]) ? x[i] : z[i];
    }
    return Labeling(std::move(out));
}

int zero_count(const Labeling& x) {
    int z = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0) ++z;
    return z;
}

std::uint64_t encode(const Labeling& x, Label k) {
    const std::uint64_t radix = std::uint64_t(k) + 1;
    std::uint64_t index = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > k)
            throw std::invalid_argument("label " + std::to_string(x[i]) + " exceeds k = " +
                                        std::to_string(k));
        index += std::uint64_t(x[i]) * weight;
        weight *= radix;
    }
    return index;
}

Labeling decode(std::uint64_t index, std::size_t n, Label k) {
    const std::uint64_t radix = std::uint64_t(k) + 1;
    std::vector<Label> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = Label(index % radix);
        index /= radix;
    }
    if (index != 0)
        throw std::invalid_argument("encoded index out of range for [0," + std::to_string(k) +
                                    "]^" + std::to_string(n));
    return Labeling(std::move(out));
}

std::uint64_t checked_cube_size(std::size_t n, Label k, std::uint64_t max_cells) {
    const std::uint64_t radix = std::uint64_t(k) + 1;
    std::uint64_t cells = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (cells > max_cells / radix)
            throw SizeGuardError(0, max_cells);  // would exceed the budget (or overflow)
        cells *= radix;
    }
    return cells;
}

std::string format_labeling(const Labeling& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    out += ')';
    return out;
}

}  // namespace ksub
